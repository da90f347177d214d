#include "chtg/ball.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace chtg::exact {

namespace {

/// Covers the double rounding of a handful of radius operations plus
/// underflow at the bottom of the double range.
double inflate(double r) {
    return r * (1.0 + 8.0 * DBL_EPSILON) + DBL_TRUE_MIN;
}

/// Upper bound on the rounding error of an mpfr result. `ternary` is the
/// ternary value returned by the mpfr call; 0 means the result is exact.
double rounding_radius(const BigFloat& x, int ternary) {
    if (ternary == 0) return 0.0;
    if (x.is_zero()) return DBL_TRUE_MIN;
    // |error| <= one ulp = 2^(exp - prec); ldexp underflowing to 0 is
    // repaired by the DBL_TRUE_MIN term in inflate().
    long e = static_cast<long>(x.exponent()) - static_cast<long>(x.precision());
    e = std::clamp(e, -1200L, 1200L);
    return std::ldexp(1.0, static_cast<int>(e));
}

mpfr_prec_t common_prec(const RealBall& a, const RealBall& b) {
    return std::max(a.mid.precision(), b.mid.precision());
}

}  // namespace

RealBall RealBall::from_rational(const Rational& q, mpfr_prec_t prec) {
    bool exact_flag = false;
    BigFloat m = BigFloat::from_rational(q, prec, &exact_flag);
    double r = exact_flag ? 0.0 : inflate(rounding_radius(m, 1));
    return {std::move(m), r};
}

RealBall operator+(const RealBall& a, const RealBall& b) {
    BigFloat m(common_prec(a, b));
    int t = mpfr_add(m.raw(), a.mid.raw(), b.mid.raw(), MPFR_RNDN);
    double r = a.rad + b.rad + rounding_radius(m, t);
    return {std::move(m), inflate(r)};
}

RealBall operator-(const RealBall& a, const RealBall& b) {
    BigFloat m(common_prec(a, b));
    int t = mpfr_sub(m.raw(), a.mid.raw(), b.mid.raw(), MPFR_RNDN);
    double r = a.rad + b.rad + rounding_radius(m, t);
    return {std::move(m), inflate(r)};
}

RealBall operator*(const RealBall& a, const RealBall& b) {
    BigFloat m(common_prec(a, b));
    int t = mpfr_mul(m.raw(), a.mid.raw(), b.mid.raw(), MPFR_RNDN);
    double ua = a.mid.abs_upper_double();
    double ub = b.mid.abs_upper_double();
    double r = ua * b.rad + ub * a.rad + a.rad * b.rad + rounding_radius(m, t);
    return {std::move(m), inflate(r)};
}

RealBall RealBall::div_exact_long(long d) const {
    if (d == 0) throw std::invalid_argument("RealBall: division by zero");
    BigFloat m(mid.precision());
    int t = mpfr_div_si(m.raw(), mid.raw(), d, MPFR_RNDN);
    double r = rad / static_cast<double>(std::abs(d)) + rounding_radius(m, t);
    return {std::move(m), inflate(r)};
}

double RealBall::upper() const {
    BigFloat t(mid.precision());
    mpfr_add_d(t.raw(), mid.raw(), rad, MPFR_RNDU);
    return mpfr_get_d(t.raw(), MPFR_RNDU);
}

double RealBall::lower() const {
    BigFloat t(mid.precision());
    mpfr_sub_d(t.raw(), mid.raw(), rad, MPFR_RNDD);
    return mpfr_get_d(t.raw(), MPFR_RNDD);
}

double ComplexBall::radius() const {
    return inflate(re.rad + im.rad);
}

ComplexBall root_of_unity_ball(long N, long j, mpfr_prec_t prec) {
    if (N < 1) throw std::invalid_argument("root_of_unity_ball: N must be positive");
    j %= N;
    if (j < 0) j += N;

    BigFloat pi_mid(prec);
    int t = mpfr_const_pi(pi_mid.raw(), MPFR_RNDN);
    double theta_rad = inflate(rounding_radius(pi_mid, t));
    RealBall theta{std::move(pi_mid), theta_rad};

    BigFloat scaled(prec);
    t = mpfr_mul_si(scaled.raw(), theta.mid.raw(), 2 * j, MPFR_RNDN);
    theta_rad = inflate(theta.rad * static_cast<double>(2 * j) + rounding_radius(scaled, t));
    theta = {std::move(scaled), theta_rad};
    theta = theta.div_exact_long(N);

    // cos and sin are 1-Lipschitz, so the angle radius carries over as is.
    BigFloat c(prec), s(prec);
    int tc = mpfr_cos(c.raw(), theta.mid.raw(), MPFR_RNDN);
    int ts = mpfr_sin(s.raw(), theta.mid.raw(), MPFR_RNDN);
    double re_rad = inflate(theta.rad + rounding_radius(c, tc));
    double im_rad = inflate(theta.rad + rounding_radius(s, ts));
    return {RealBall{std::move(c), re_rad}, RealBall{std::move(s), im_rad}};
}

ComplexBall embed_complex(const CycloElement& a, mpfr_prec_t prec) {
    if (prec < 53) throw std::invalid_argument("embed_complex: precision below 53 bits");
    const long N = a.modulus();
    ComplexBall acc{RealBall::exact(BigFloat::from_long(0, prec)),
                    RealBall::exact(BigFloat::from_long(0, prec))};
    const auto& cs = a.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        RealBall coeff = RealBall::from_rational(cs[i], prec);
        ComplexBall root = root_of_unity_ball(N, static_cast<long>(i), prec);
        acc.re = acc.re + coeff * root.re;
        acc.im = acc.im + coeff * root.im;
    }
    return acc;
}

CompareResult compare_real_part(const CycloElement& a, const Rational& c,
                                const CompareOptions& options) {
    // 2*Re(a) - 2c in canonical form; the zero test settles equality exactly.
    CycloElement diff = (a + a.conj()) - CycloElement::from_rational(c + c, a.modulus());
    if (diff.is_zero()) return {CompareOutcome::Equal, 0};

    mpfr_prec_t prec = std::max<mpfr_prec_t>(options.start_bits, 53);
    const mpfr_prec_t cap = std::max(prec, options.max_bits);
    for (;;) {
        // diff is conjugation invariant, so its value is the real number
        // 2(Re(a) - c); the real component of the enclosure decides the sign.
        RealBall v = embed_complex(diff, prec).re;
        if (v.provably_negative()) return {CompareOutcome::Less, prec};
        if (v.provably_positive()) return {CompareOutcome::Greater, prec};
        if (prec >= cap) break;
        prec = std::min<mpfr_prec_t>(prec * 2, cap);
    }
    return {CompareOutcome::Inconclusive, cap};
}

const char* to_string(CompareOutcome o) {
    switch (o) {
        case CompareOutcome::Less: return "less";
        case CompareOutcome::Equal: return "equal";
        case CompareOutcome::Greater: return "greater";
        case CompareOutcome::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

}  // namespace chtg::exact
