#include "chtg/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace chtg::triangle {

Mat3::Mat3(mpfr_prec_t prec) : prec_(prec) {
    for (auto& row : a_)
        for (auto& e : row) e = BComplex(prec);
}

Mat3 Mat3::identity(mpfr_prec_t prec) {
    Mat3 m(prec);
    for (int i = 0; i < 3; ++i) m(i, i).re = BigFloat::from_long(1, prec);
    return m;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r(std::max(x.prec_, y.prec_));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            BComplex s(r.prec_);
            for (int k = 0; k < 3; ++k) s = s + x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 r(std::max(x.prec_, y.prec_));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 r(std::max(x.prec_, y.prec_));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

Mat3 Mat3::conj_transpose() const {
    Mat3 r(prec_);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a_[j][i].conj();
    return r;
}

BComplex Mat3::trace() const {
    return a_[0][0] + a_[1][1] + a_[2][2];
}

BComplex Mat3::det() const {
    BComplex m0 = a_[1][1] * a_[2][2] - a_[1][2] * a_[2][1];
    BComplex m1 = a_[1][0] * a_[2][2] - a_[1][2] * a_[2][0];
    BComplex m2 = a_[1][0] * a_[2][1] - a_[1][1] * a_[2][0];
    return a_[0][0] * m0 - a_[0][1] * m1 + a_[0][2] * m2;
}

double Mat3::max_abs_diff(const Mat3& other) const {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double d = (a_[i][j] - other(i, j)).abs().to_double();
            worst = std::max(worst, d);
        }
    return worst;
}

bool Mat3::is_hermitian(double tol) const {
    return max_abs_diff(conj_transpose()) <= tol;
}

std::array<BigFloat, 3> hermitian_eigenvalues(const Mat3& h) {
    const mpfr_prec_t prec = h.precision();
    auto re = [&](int i, int j) { return h(i, j).re; };
    auto im = [&](int i, int j) { return h(i, j).im; };
    auto pair_minor = [&](int i, int j) {  // h_ii h_jj - |h_ij|^2, real
        return re(i, i) * re(j, j) - (re(i, j) * re(i, j) + im(i, j) * im(i, j));
    };

    // Characteristic polynomial x^3 + a x^2 + b x + c with real coefficients.
    BigFloat a = -(re(0, 0) + re(1, 1) + re(2, 2));
    BigFloat b = pair_minor(0, 1) + pair_minor(0, 2) + pair_minor(1, 2);
    BigFloat c = -h.det().re;

    BigFloat three = BigFloat::from_long(3, prec);
    BigFloat shift = a / three;  // roots are t_k - shift
    BigFloat p = b - a * a / three;
    BigFloat q = (BigFloat::from_long(2, prec) * a * a * a) / BigFloat::from_long(27, prec)
                 - a * b / three + c;

    std::array<BigFloat, 3> roots{BigFloat(prec), BigFloat(prec), BigFloat(prec)};
    BigFloat tiny = BigFloat::from_double(std::ldexp(1.0, -static_cast<int>(prec) / 2), prec);
    if (p >= -tiny) {
        // Near-triple root; for a real-rooted cubic q vanishes with p.
        for (auto& r : roots) r = -shift;
        return roots;
    }

    BigFloat half_m = ((-p) / three).sqrt();
    BigFloat arg = (three * q) / (BigFloat::from_long(2, prec) * p * half_m);
    BigFloat one = BigFloat::from_long(1, prec);
    if (arg > one) arg = one;
    if (arg < -one) arg = -one;

    BigFloat phi = arg.acos() / three;
    BigFloat two_thirds_pi = (BigFloat::pi(prec) * BigFloat::from_long(2, prec)) / three;
    for (int k = 0; k < 3; ++k) {
        BigFloat angle = phi - two_thirds_pi * BigFloat::from_long(k, prec);
        roots[k] = BigFloat::from_long(2, prec) * half_m * angle.cos() - shift;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::array<std::complex<double>, 3> cubic_roots(std::complex<double> c2,
                                                std::complex<double> c1,
                                                std::complex<double> c0) {
    using C = std::complex<double>;
    auto f = [&](C z) { return ((z - c2) * z + c1) * z - c0; };

    std::array<C, 3> z;
    const C seed(0.4, 0.9);
    z[0] = seed;
    z[1] = seed * seed;
    z[2] = seed * seed * seed;
    for (int iter = 0; iter < 200; ++iter) {
        double step = 0.0;
        for (int i = 0; i < 3; ++i) {
            C denom(1.0, 0.0);
            for (int j = 0; j < 3; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (std::abs(denom) == 0.0) {
                z[i] += C(1e-8, 1e-8);  // perturb a collision and retry
                step = 1.0;
                continue;
            }
            C delta = f(z[i]) / denom;
            z[i] -= delta;
            step = std::max(step, std::abs(delta));
        }
        if (step < 1e-15) break;
    }
    std::sort(z.begin(), z.end(), [](C a, C b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

std::array<std::complex<double>, 3> eigenvalues(const Mat3& m) {
    using C = std::complex<double>;
    auto cd = [&](int i, int j) { return C(m(i, j).re.to_double(), m(i, j).im.to_double()); };
    C e[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e[i][j] = cd(i, j);

    C c2 = e[0][0] + e[1][1] + e[2][2];
    C c1 = e[0][0] * e[1][1] - e[0][1] * e[1][0] + e[0][0] * e[2][2] - e[0][2] * e[2][0]
           + e[1][1] * e[2][2] - e[1][2] * e[2][1];
    C c0 = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
           - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
           + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
    return cubic_roots(c2, c1, c0);
}

}  // namespace chtg::triangle
