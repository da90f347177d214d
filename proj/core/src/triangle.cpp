#include "chtg/triangle.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace chtg::triangle {

namespace {

constexpr double kSignatureTol = 1e-10;

}  // namespace

TriangleParams TriangleParams::mm_inf(int m, double alpha) {
    if (m < 2) throw std::invalid_argument("TriangleParams: vertex order must be >= 2");
    TriangleParams p;
    p.p1 = p.p2 = m;
    p.p3 = kInfinity;
    p.alpha = alpha;
    return p;
}

TriangleParams TriangleParams::mm_inf_turns(int m, const exact::Rational& turns) {
    const mpz_class& num = turns.numerator();
    const mpz_class& den = turns.denominator();
    if (!num.fits_slong_p() || !den.fits_slong_p())
        throw std::invalid_argument("TriangleParams: turn fraction out of range");
    long M = den.get_si();
    long j = ((num.get_si() % M) + M) % M;

    TriangleParams p = mm_inf(m, 2.0 * M_PI * (static_cast<double>(j) / static_cast<double>(M)));
    p.alpha_exact = std::make_pair(M, j);
    return p;
}

int TriangleParams::m() const {
    if (!is_mm_inf()) throw std::logic_error("TriangleParams: not an (m,m,inf) triangle");
    return p1;
}

std::string TriangleParams::to_string() const {
    auto side = [](int p) {
        return p == kInfinity ? std::string("inf") : std::to_string(p);
    };
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", alpha);
    return "(" + side(p1) + "," + side(p2) + "," + side(p3) + "), alpha=" + buf;
}

BigFloat r_value(int p, mpfr_prec_t prec) {
    if (p == TriangleParams::kInfinity) return BigFloat::from_long(1, prec);
    if (p < 2) throw std::invalid_argument("r_value: vertex order must be >= 2");
    return (BigFloat::pi(prec) / BigFloat::from_long(p, prec)).cos();
}

BigFloat alpha_value(const TriangleParams& params, mpfr_prec_t prec) {
    if (params.alpha_exact) {
        auto [M, j] = *params.alpha_exact;
        return BigFloat::pi(prec) * BigFloat::from_long(2 * j, prec) / BigFloat::from_long(M, prec);
    }
    return BigFloat::from_double(params.alpha, prec);
}

GramTriangle build_gram(const TriangleParams& params, mpfr_prec_t prec) {
    BigFloat r1 = r_value(params.p1, prec);
    BigFloat r2 = r_value(params.p2, prec);
    BigFloat r3 = r_value(params.p3, prec);
    BigFloat third = alpha_value(params, prec) / BigFloat::from_long(3, prec);
    BComplex phase = BComplex::unit_circle(third);

    GramTriangle g{Mat3(prec), {}, prec};
    for (int i = 0; i < 3; ++i) g.h(i, i).re = BigFloat::from_long(1, prec);
    auto set_pair = [&](int i, int j, const BigFloat& r) {
        g.h(i, j) = BComplex{r * phase.re, r * phase.im};
        g.h(j, i) = g.h(i, j).conj();
    };
    set_pair(0, 1, r3);
    set_pair(1, 2, r1);
    set_pair(2, 0, r2);

    auto eigs = hermitian_eigenvalues(g.h);
    int neg = 0, pos = 0;
    for (int i = 0; i < 3; ++i) {
        g.eigenvalues[i] = eigs[i].to_double();
        if (g.eigenvalues[i] < -kSignatureTol) ++neg;
        if (g.eigenvalues[i] > kSignatureTol) ++pos;
    }
    if (neg >= 2)
        throw std::domain_error("build_gram: Gram form has two negative directions");
    if (neg == 0 && pos == 3)
        throw std::domain_error("build_gram: Gram form is positive definite");
    return g;
}

std::array<ReflectionMatrix, 3> reflection_matrices(const GramTriangle& g) {
    const mpfr_prec_t prec = g.prec;
    BigFloat two = BigFloat::from_long(2, prec);
    std::array<ReflectionMatrix, 3> r{Mat3(prec), Mat3(prec), Mat3(prec)};
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                BComplex v(prec);
                if (i == k) {
                    v = BComplex{two * g.h(k, j).re, two * g.h(k, j).im};
                }
                if (i == j) v.re = v.re - BigFloat::from_long(1, prec);
                r[k](i, j) = v;
            }
    }
    return r;
}

BComplex trace_formula(const TriangleParams& params, mpfr_prec_t prec) {
    BigFloat r1 = r_value(params.p1, prec);
    BigFloat r2 = r_value(params.p2, prec);
    BigFloat r3 = r_value(params.p3, prec);
    BComplex phase = BComplex::unit_circle(alpha_value(params, prec));

    BigFloat eight = BigFloat::from_long(8, prec);
    BigFloat coeff = eight * r1 * r2 * r3;
    BigFloat shift = BigFloat::from_long(4, prec) * (r1 * r1 + r2 * r2 + r3 * r3)
                     - BigFloat::from_long(3, prec);
    return BComplex{coeff * phase.re - shift, coeff * phase.im};
}

BigFloat circle_residual_numeric(const TriangleParams& params, mpfr_prec_t prec) {
    int m = params.m();
    BigFloat r = r_value(m, prec);
    BigFloat radius = BigFloat::from_long(8, prec) * r * r;

    BComplex tau = trace_formula(params, prec);
    BComplex center_offset{tau.re + radius + BigFloat::from_long(1, prec), tau.im};
    return (center_offset.abs() - radius).abs();
}

}  // namespace chtg::triangle
