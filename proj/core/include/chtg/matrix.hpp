#pragma once

#include <array>
#include <complex>

#include "chtg/bigfloat.hpp"

namespace chtg::triangle {

using exact::BComplex;
using exact::BigFloat;

/// Dense 3x3 complex matrix at a fixed working precision.
class Mat3 {
public:
    explicit Mat3(mpfr_prec_t prec = 128);
    static Mat3 identity(mpfr_prec_t prec = 128);

    mpfr_prec_t precision() const { return prec_; }
    BComplex& operator()(int i, int j) { return a_[i][j]; }
    const BComplex& operator()(int i, int j) const { return a_[i][j]; }

    friend Mat3 operator*(const Mat3& x, const Mat3& y);
    friend Mat3 operator+(const Mat3& x, const Mat3& y);
    friend Mat3 operator-(const Mat3& x, const Mat3& y);

    Mat3 conj_transpose() const;
    BComplex trace() const;
    BComplex det() const;

    /// Largest entrywise |x - y| as a double.
    double max_abs_diff(const Mat3& other) const;
    bool is_hermitian(double tol = 1e-12) const;

private:
    mpfr_prec_t prec_;
    std::array<std::array<BComplex, 3>, 3> a_;
};

/// Eigenvalues of a Hermitian matrix, ascending. Uses the trigonometric
/// closed form for the real-rooted characteristic cubic.
std::array<BigFloat, 3> hermitian_eigenvalues(const Mat3& h);

/// Roots of z^3 - c2 z^2 + c1 z - c0 (coefficients as elementary symmetric
/// functions, so c2 is the root sum). Durand-Kerner at double precision.
std::array<std::complex<double>, 3> cubic_roots(std::complex<double> c2,
                                                std::complex<double> c1,
                                                std::complex<double> c0);

/// Eigenvalues of a general complex 3x3 matrix at double precision.
std::array<std::complex<double>, 3> eigenvalues(const Mat3& m);

}  // namespace chtg::triangle
