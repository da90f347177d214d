#pragma once

#include <utility>

#include "chtg/bigfloat.hpp"
#include "chtg/cyclotomic.hpp"
#include "chtg/rational.hpp"

namespace chtg::exact {

/// Real ball: a BigFloat midpoint plus a double radius that rigorously
/// bounds |true value - midpoint|. Radius bookkeeping is conservative:
/// every operation inflates the radius to cover its own double rounding,
/// so a ball never under-reports the enclosure.
struct RealBall {
    BigFloat mid;
    double rad = 0.0;

    static RealBall exact(BigFloat m) { return {std::move(m), 0.0}; }
    static RealBall from_rational(const Rational& q, mpfr_prec_t prec);

    friend RealBall operator+(const RealBall& a, const RealBall& b);
    friend RealBall operator-(const RealBall& a, const RealBall& b);
    friend RealBall operator*(const RealBall& a, const RealBall& b);
    RealBall operator-() const { return {-mid, rad}; }
    RealBall div_exact_long(long d) const;

    /// Rigorous double bounds on the enclosed value.
    double upper() const;
    double lower() const;
    bool provably_negative() const { return upper() < 0.0; }
    bool provably_positive() const { return lower() > 0.0; }
};

/// Axis-aligned complex enclosure (rectangle of two real balls).
struct ComplexBall {
    RealBall re, im;

    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    BComplex midpoint() const { return {re.mid, im.mid}; }
    /// Radius of a disk guaranteed to contain the value around midpoint().
    double radius() const;
};

/// Enclosure of cos(2*pi*j/N) + i*sin(2*pi*j/N) at the given precision.
ComplexBall root_of_unity_ball(long N, long j, mpfr_prec_t prec);

/// Rigorous enclosure of the evaluation of `a` at w_N = exp(2*pi*i/N).
/// Requires prec >= 53. The radius shrinks as prec grows.
ComplexBall embed_complex(const CycloElement& a, mpfr_prec_t prec);

enum class CompareOutcome { Less, Equal, Greater, Inconclusive };

struct CompareOptions {
    mpfr_prec_t start_bits = 128;
    mpfr_prec_t max_bits = 512;  // escalation cap; doubled until reached
};

struct CompareResult {
    CompareOutcome outcome = CompareOutcome::Inconclusive;
    mpfr_prec_t precision_bits = 0;  // 0 when settled by the exact zero test

    bool le() const {
        return outcome == CompareOutcome::Less || outcome == CompareOutcome::Equal;
    }
    bool ge() const {
        return outcome == CompareOutcome::Greater || outcome == CompareOutcome::Equal;
    }
};

/// Decides how Re(a) compares to the rational c. Equality is settled
/// exactly (canonical zero test on a + conj(a) - 2c); strict orderings by
/// interval evaluation with precision doubling up to options.max_bits,
/// reporting Inconclusive rather than guessing past the cap.
CompareResult compare_real_part(const CycloElement& a, const Rational& c,
                                const CompareOptions& options = {});

const char* to_string(CompareOutcome o);

}  // namespace chtg::exact
