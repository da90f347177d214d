#include "chtg/polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "chtg/numtheory.hpp"

namespace chtg::exact {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int degree, Rational coeff) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
}

Poly Poly::x_pow_minus_one(long n) {
    if (n < 1) throw std::invalid_argument("Poly::x_pow_minus_one: n < 1");
    std::vector<Rational> c(n + 1);
    c[0] = Rational(-1);
    c[n] = Rational(1);
    return Poly(std::move(c));
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[i];
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly::divrem: division by zero polynomial");
    std::vector<Rational> r = c_;
    const int dd = d.degree();
    const Rational& lc = d.lead();
    if (static_cast<int>(r.size()) - 1 < dd) return {Poly(), *this};
    std::vector<Rational> q(r.size() - dd);
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
        if (r[i].is_zero()) continue;
        Rational f = r[i] / lc;
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j)
            r[i - dd + j] -= f * d.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (mag == Rational(1));
        if (i == 0) {
            os << mag.to_string();
        } else {
            if (!unit) os << mag.to_string() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_ext_gcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::monomial(0), u1;
    Poly v0, v1 = Poly::monomial(0);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) { u = Poly(); v = Poly(); return Poly(); }
    Rational inv_lead = Rational(1) / r0.lead();
    u = u0.scaled(inv_lead);
    v = v0.scaled(inv_lead);
    return r0.scaled(inv_lead);
}

const Poly& cyclotomic_polynomial(long N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N < 1");
    static std::map<long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, resolved smallest first
    // so the recursion never re-enters the lock.
    for (long d : divisors(N)) {
        if (cache.count(d)) continue;
        Poly prod = Poly::monomial(0);
        for (long e : divisors(d))
            if (e < d) prod = prod * cache.at(e);
        auto [q, r] = Poly::x_pow_minus_one(d).divrem(prod);
        if (!r.is_zero())
            throw std::logic_error("cyclotomic_polynomial: inexact division");
        cache.emplace(d, std::move(q));
    }
    return cache.at(N);
}

}  // namespace chtg::exact
