#include "doctest.h"

#include <random>

#include "chtg/numtheory.hpp"
#include "chtg/polynomial.hpp"

using namespace chtg::exact;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("basic shape and to_string") {
    CHECK(Poly().is_zero());
    CHECK(Poly().to_string() == "0");
    CHECK(Poly::monomial(0, Rational(3)).to_string() == "3");
    CHECK(Poly({Rational(-1, 2), Rational(2)}).to_string() == "2*x - 1/2");
    CHECK(Poly::x_pow_minus_one(3).to_string() == "x^3 - 1");
    CHECK(Poly::monomial(2).degree() == 2);
    CHECK(Poly({Rational(1), Rational(0)}).degree() == 0);  // trailing zeros trimmed
}

TEST_CASE("ring arithmetic") {
    Poly x = Poly::monomial(1);
    Poly a = x * x - Poly::monomial(0, Rational(1));         // x^2 - 1
    Poly b = (x - Poly::monomial(0)) * (x + Poly::monomial(0, Rational(1)));
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK(a.scaled(Rational(1, 2)).lead() == Rational(1, 2));

    std::mt19937 rng(2026);
    for (int i = 0; i < 50; ++i) {
        Poly p = random_poly(rng, 6), q = random_poly(rng, 6), r = random_poly(rng, 6);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("divrem identity and degree contract") {
    std::mt19937 rng(77);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(rng, 8);
        Poly b = random_poly(rng, 5);
        if (b.is_zero()) continue;
        auto [q, r] = a.divrem(b);
        CHECK(a == q * b + r);
        CHECK((r.is_zero() || r.degree() < b.degree()));
    }

    // exact division of a constructed product
    Poly b({Rational(1), Rational(-2), Rational(1)});
    Poly q0({Rational(3, 2), Rational(0), Rational(7)});
    auto [q, r] = (b * q0).divrem(b);
    CHECK(q == q0);
    CHECK(r.is_zero());
}

TEST_CASE("extended gcd produces monic gcd and Bezout pair") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(rng, 6), b = random_poly(rng, 6);
        if (a.is_zero() && b.is_zero()) continue;
        Poly u, v;
        Poly g = poly_ext_gcd(a, b, u, v);
        CHECK(g.is_monic());
        CHECK(u * a + v * b == g);
        CHECK((a.divrem(g).second.is_zero()));
        CHECK((b.divrem(g).second.is_zero()));
    }

    Poly u, v;
    CHECK(poly_ext_gcd(cyclotomic_polynomial(4), cyclotomic_polynomial(12), u, v).degree() == 0);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1).to_string() == "x - 1");
    CHECK(cyclotomic_polynomial(2).to_string() == "x + 1");
    CHECK(cyclotomic_polynomial(4).to_string() == "x^2 + 1");
    CHECK(cyclotomic_polynomial(6).to_string() == "x^2 - x + 1");
    CHECK(cyclotomic_polynomial(12).to_string() == "x^4 - x^2 + 1");

    for (long n = 1; n <= 60; ++n)
        CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));

    // prime case: 1 + x + ... + x^{p-1}
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        const Poly& f = cyclotomic_polynomial(p);
        for (int i = 0; i < p; ++i) CHECK(f.coeff(i) == Rational(1));
    }

    // product over divisors reconstructs x^n - 1 (full bound in acceptance run)
    for (long n = 1; n <= 30; ++n) {
        Poly prod = Poly::monomial(0);
        for (long long d : divisors(n)) prod = prod * cyclotomic_polynomial(d);
        CHECK(prod == Poly::x_pow_minus_one(n));
    }
}
