#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chtg/polynomial.hpp"
#include "chtg/rational.hpp"

namespace chtg::exact {

/// Element of the cyclotomic field Q[w_N], w_N = exp(2*pi*i/N), stored in
/// canonical reduced form: a coefficient vector of length phi(N) on the
/// power basis {w^0, ..., w^{phi(N)-1}} after reduction modulo the N-th
/// cyclotomic polynomial. Two elements are equal iff modulus and
/// coefficients agree. Immutable; all operations return new values.
class CycloElement {
public:
    static CycloElement zero(long N);
    static CycloElement one(long N) { return from_rational(Rational(1), N); }
    static CycloElement from_rational(const Rational& q, long N = 1);
    /// Canonical form of w_N^{j mod N}.
    static CycloElement root_of_unity(long N, long j);
    /// Sum of coeff * w_N^{exp}; exponents arbitrary (reduced mod N).
    static CycloElement from_monomials(
        long N, const std::vector<std::pair<long, Rational>>& terms);

    long modulus() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    /// True when the element lies in Q (all non-constant coefficients zero).
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    CycloElement scaled(const Rational& s) const;
    friend bool operator==(const CycloElement& a, const CycloElement& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    /// Complex conjugate (w_N -> w_N^{N-1}).
    CycloElement conj() const;
    /// Same value viewed in Q[w_M]; requires N | M.
    CycloElement lift(long M) const;
    /// Galois automorphism sigma_k: w_N -> w_N^k; requires gcd(k, N) = 1.
    CycloElement galois(long k) const;
    /// Field inverse via extended gcd with Phi_N; throws on zero.
    CycloElement inverse() const;

    /// {"N": 12, "coeffs": ["1", "-1/2", ...]}
    std::string to_json() const;
    std::string to_string() const;

private:
    CycloElement(long N, std::vector<Rational> coeffs)
        : n_(N), c_(std::move(coeffs)) {}
    long n_ = 1;
    std::vector<Rational> c_;  // size phi(N)
};

/// Ramanujan-type orbit sum: sum over k in (Z/nZ)* of sigma_k(w_n^e),
/// always rational, equal to mu(d) * phi(n) / phi(d) with d = n / gcd(e, n).
Rational primitive_root_sum(long n, long e);

std::ostream& operator<<(std::ostream& os, const CycloElement& a);

}  // namespace chtg::exact
