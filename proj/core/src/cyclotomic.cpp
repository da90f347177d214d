#include "chtg/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chtg/numtheory.hpp"

namespace chtg::exact {

namespace {

// Per-modulus reduction data: Phi_N plus x^e mod Phi_N for e in [phi, N),
// so monomial sums reduce with one table pass instead of a long division.
struct ReductionContext {
    long N = 1;
    long phi = 1;
    const Poly* cyclo = nullptr;
    std::vector<std::vector<Rational>> pow;  // pow[e - phi] = x^e mod Phi_N
};

const ReductionContext& context(long N) {
    static std::map<long, std::unique_ptr<ReductionContext>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(N);
    if (it != cache.end()) return *it->second;

    auto ctx = std::make_unique<ReductionContext>();
    ctx->N = N;
    ctx->phi = euler_phi(N);
    ctx->cyclo = &cyclotomic_polynomial(N);
    const long phi = ctx->phi;
    const auto& f = ctx->cyclo->coeffs();  // monic, degree phi

    ctx->pow.reserve(N > phi ? N - phi : 0);
    std::vector<Rational> row(phi);
    for (long e = phi; e < N; ++e) {
        if (e == phi) {
            for (long i = 0; i < phi; ++i) row[i] = -f[i];
        } else {
            // row <- x * row mod Phi_N
            Rational top = row[phi - 1];
            for (long i = phi - 1; i > 0; --i) row[i] = row[i - 1];
            row[0] = Rational(0);
            if (!top.is_zero())
                for (long i = 0; i < phi; ++i) row[i] -= top * f[i];
        }
        ctx->pow.push_back(row);
    }
    auto& slot = cache[N];
    slot = std::move(ctx);
    return *slot;
}

// Collapse an exponent-indexed accumulator (length N, exponents mod N)
// into the power basis.
std::vector<Rational> reduce_accumulator(const ReductionContext& ctx,
                                         std::vector<Rational> acc) {
    std::vector<Rational> out(acc.begin(), acc.begin() + ctx.phi);
    for (long e = ctx.phi; e < ctx.N; ++e) {
        const Rational& a = acc[e];
        if (a.is_zero()) continue;
        const auto& row = ctx.pow[e - ctx.phi];
        for (long i = 0; i < ctx.phi; ++i)
            if (!row[i].is_zero()) out[i] += a * row[i];
    }
    return out;
}

long mod_pos(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace

CycloElement CycloElement::zero(long N) {
    if (N < 1) throw std::invalid_argument("CycloElement: modulus must be >= 1");
    return CycloElement(N, std::vector<Rational>(context(N).phi));
}

CycloElement CycloElement::from_rational(const Rational& q, long N) {
    auto c = std::vector<Rational>(context(N).phi);
    c[0] = q;
    // For N = 1 the basis element is w_1^0 = 1, for N = 2 it is 1 as well;
    // in both cases (and all others) the constant slot carries Q.
    return CycloElement(N, std::move(c));
}

CycloElement CycloElement::root_of_unity(long N, long j) {
    return from_monomials(N, {{j, Rational(1)}});
}

CycloElement CycloElement::from_monomials(
    long N, const std::vector<std::pair<long, Rational>>& terms) {
    if (N < 1) throw std::invalid_argument("CycloElement: modulus must be >= 1");
    const auto& ctx = context(N);
    std::vector<Rational> acc(N);
    for (const auto& [e, coeff] : terms) acc[mod_pos(e, N)] += coeff;
    return CycloElement(N, reduce_accumulator(ctx, std::move(acc)));
}

bool CycloElement::is_zero() const {
    for (const auto& a : c_)
        if (!a.is_zero()) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

std::optional<Rational> CycloElement::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

CycloElement CycloElement::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return CycloElement(n_, std::move(c));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("CycloElement: mismatched moduli (lift first)");
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return CycloElement(a.n_, std::move(c));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    return a + (-b);
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("CycloElement: mismatched moduli (lift first)");
    const auto& ctx = context(a.n_);
    std::vector<Rational> acc(ctx.N);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            acc[(i + j) % ctx.N] += a.c_[i] * b.c_[j];
        }
    }
    return CycloElement(a.n_, reduce_accumulator(ctx, std::move(acc)));
}

CycloElement CycloElement::scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return CycloElement(n_, std::move(c));
}

CycloElement CycloElement::conj() const {
    if (n_ <= 2) return *this;
    return galois(n_ - 1);
}

CycloElement CycloElement::lift(long M) const {
    if (M < 1 || M % n_ != 0)
        throw std::invalid_argument("CycloElement::lift: target modulus not a multiple");
    if (M == n_) return *this;
    const long s = M / n_;
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) terms.emplace_back(static_cast<long>(i) * s, c_[i]);
    return from_monomials(M, terms);
}

CycloElement CycloElement::galois(long k) const {
    const long kr = mod_pos(k, n_);
    if (std::gcd(kr, n_) != 1)
        throw std::invalid_argument("CycloElement::galois: k not coprime to modulus");
    std::vector<std::pair<long, Rational>> terms;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) terms.emplace_back(static_cast<long>(i) * kr % n_, c_[i]);
    return from_monomials(n_, terms);
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("CycloElement::inverse: zero element");
    Poly a{std::vector<Rational>(c_)};
    Poly u, v;
    Poly g = poly_ext_gcd(a, cyclotomic_polynomial(n_), u, v);
    if (g.degree() != 0)
        throw std::logic_error("CycloElement::inverse: gcd with Phi_N not constant");
    // g is monic constant 1 after normalization, so u * a == 1 mod Phi_N.
    auto [q, r] = u.divrem(cyclotomic_polynomial(n_));
    std::vector<Rational> c(context(n_).phi);
    for (int i = 0; i <= r.degree(); ++i) c[i] = r.coeff(i);
    return CycloElement(n_, std::move(c));
}

std::string CycloElement::to_json() const {
    std::ostringstream os;
    os << "{\"N\": " << n_ << ", \"coeffs\": [";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << '"' << c_[i].to_string() << '"';
    }
    os << "]}";
    return os.str();
}

std::string CycloElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].to_string();
        if (i > 0) os << "*w" << n_ << "^" << i;
    }
    return os.str();
}

Rational primitive_root_sum(long n, long e) {
    if (n < 1) throw std::invalid_argument("primitive_root_sum: n < 1");
    const long g = std::gcd(mod_pos(e, n), n);  // gcd(0, n) = n, so e = 0 gives d = 1
    const long d = n / g;
    return Rational(moebius(d)) * Rational(euler_phi(n), euler_phi(d));
}

std::ostream& operator<<(std::ostream& os, const CycloElement& a) {
    return os << a.to_string();
}

}  // namespace chtg::exact
