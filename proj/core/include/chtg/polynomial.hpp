#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chtg/rational.hpp"

namespace chtg::exact {

/// Dense univariate polynomial over Rational. Coefficient i multiplies x^i;
/// the zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly monomial(int degree, Rational coeff = Rational(1));
    /// x^n - 1
    static Poly x_pow_minus_one(long n);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& lead() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& s) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division: *this = q*d + r with deg r < deg d. Exact over Q.
    std::pair<Poly, Poly> divrem(const Poly& d) const;

    /// "x^2 + 1" style rendering, highest degree first.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Extended gcd over Q[x]: returns monic g = gcd(a, b) and sets u, v with
/// u*a + v*b = g.
Poly poly_ext_gcd(const Poly& a, const Poly& b, Poly& u, Poly& v);

/// N-th cyclotomic polynomial, monic of degree phi(N); results are cached.
/// Computed by exact division of x^N - 1 by the product of lower-index
/// cyclotomic polynomials.
const Poly& cyclotomic_polynomial(long N);

}  // namespace chtg::exact
