#include "doctest.h"

#include <cmath>

#include "chtg/ball.hpp"

using namespace chtg::exact;

namespace {

const char* kCos7Num200 =
    "2003818965628597238880124774366696068822029686252549443603319";
const char* kCos7Num600 =
    "51743612797026804936379032160925872466146107206595497490932614757138208217"
    "11107175432387639101828959212369421569727081168853259641099047470299721340"
    "133620305223266378277638795428406";

Rational pow2_den(const Rational& num, long e) {
    mpz_class d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    return num / Rational(mpz_class(d));
}

}  // namespace

TEST_CASE("RealBall encloses rationals") {
    // bounds are outward-rounded doubles, so compare non-strictly against
    // the double approximation of the enclosed real number
    auto third = RealBall::from_rational(Rational(1, 3), 64);
    CHECK(third.lower() <= 1.0 / 3.0);
    CHECK(third.upper() >= 1.0 / 3.0);
    CHECK(third.upper() > third.lower());
    CHECK(third.rad > 0.0);  // 1/3 is not dyadic
    CHECK(RealBall::from_rational(Rational(1, 2), 64).rad == 0.0);

    auto sq = third * third;
    CHECK(sq.lower() <= 1.0 / 9.0);
    CHECK(sq.upper() >= 1.0 / 9.0);
    auto ninth = third.div_exact_long(3);
    CHECK(ninth.lower() <= 1.0 / 9.0);
    CHECK(ninth.upper() >= 1.0 / 9.0);

    CHECK(RealBall::from_rational(Rational(-1, 3), 64).provably_negative());
    CHECK(RealBall::from_rational(Rational(1, 3), 64).provably_positive());
    RealBall wide{BigFloat::from_double(1e-20, 64), 1.0};
    CHECK(!wide.provably_negative());
    CHECK(!wide.provably_positive());
}

TEST_CASE("root_of_unity_ball hits the unit circle") {
    auto b = root_of_unity_ball(8, 1, 128);
    double s = std::sqrt(0.5);
    CHECK(std::abs(b.re.mid.to_double() - s) < 1e-30);
    CHECK(std::abs(b.im.mid.to_double() - s) < 1e-30);
    CHECK(b.radius() < 1e-30);

    auto one = root_of_unity_ball(12, 0, 128);
    CHECK(one.re.mid.to_double() == 1.0);
    CHECK(one.im.mid.to_double() == 0.0);
    CHECK(one.radius() < 1e-300);  // conservative inflation keeps it nonzero
}

TEST_CASE("embed_complex evaluates at the principal root") {
    auto w12 = embed_complex(CycloElement::root_of_unity(12, 1), 128);
    CHECK(std::abs(w12.re.mid.to_double() - std::sqrt(3.0) / 2.0) < 1e-30);
    CHECK(std::abs(w12.im.mid.to_double() - 0.5) < 1e-30);
    CHECK(w12.radius() < 1e-30);

    // a rational-valued combination embeds to its rational value
    auto w3 = CycloElement::root_of_unity(3, 1);
    auto e = embed_complex(w3 + w3 * w3, 128);
    CHECK(e.re.mid.to_double() == -1.0);
    CHECK(e.im.mid.to_double() == 0.0);

    // lift does not move the value
    auto a = CycloElement::root_of_unity(9, 2) + CycloElement::root_of_unity(9, 5).scaled(Rational(1, 3));
    auto e9 = embed_complex(a, 128);
    auto e36 = embed_complex(a.lift(36), 128);
    CHECK(std::abs(e9.re.mid.to_double() - e36.re.mid.to_double())
          <= e9.radius() + e36.radius() + 1e-35);
    CHECK(std::abs(e9.im.mid.to_double() - e36.im.mid.to_double())
          <= e9.radius() + e36.radius() + 1e-35);
}

TEST_CASE("distinct canonical elements embed apart") {
    auto u = embed_complex(CycloElement::root_of_unity(12, 1), 128);
    auto v = embed_complex(CycloElement::root_of_unity(12, 5), 128);
    double dist = std::hypot(u.re.mid.to_double() - v.re.mid.to_double(),
                             u.im.mid.to_double() - v.im.mid.to_double());
    CHECK(dist > 100 * (u.radius() + v.radius()));
    CHECK(dist > 1.0);
}

TEST_CASE("compare_real_part settles rational differences exactly") {
    auto a = CycloElement::from_rational(Rational(-1), 12);
    auto r = compare_real_part(a, Rational(-1));
    CHECK(r.outcome == CompareOutcome::Equal);
    CHECK(r.precision_bits == 0);
    CHECK(r.le());
    CHECK(r.ge());

    // complex element with exactly rational real part
    auto b = CycloElement::root_of_unity(4, 1).scaled(Rational(5))
             + CycloElement::from_rational(Rational(-1), 4);
    auto rb = compare_real_part(b, Rational(-1));
    CHECK(rb.outcome == CompareOutcome::Equal);
    CHECK(rb.precision_bits == 0);

    CHECK(compare_real_part(a, Rational(-2)).outcome == CompareOutcome::Greater);
    CHECK(compare_real_part(a, Rational(0)).outcome == CompareOutcome::Less);

    // Re(3 w_3) = -3/2 < -1
    auto c = CycloElement::root_of_unity(3, 1).scaled(Rational(3));
    auto rc = compare_real_part(c, Rational(-1));
    CHECK(rc.outcome == CompareOutcome::Less);
    CHECK(rc.le());
    CHECK(!rc.ge());
}

TEST_CASE("compare_real_part escalates precision when needed") {
    // Re(w_7 + w_7^-1) = 2 cos(2 pi / 7); the constant is a dyadic
    // approximation from below with defect about 2^-201
    auto a = CycloElement::root_of_unity(7, 1) + CycloElement::root_of_unity(7, 6);
    Rational c200 = pow2_den(Rational::from_string(kCos7Num200), 200);
    auto r = compare_real_part(a, c200);
    CHECK(r.outcome == CompareOutcome::Greater);
    CHECK(r.precision_bits > 128);
    CHECK(r.precision_bits <= 512);

    // defect about 2^-600 stays below the default precision cap
    Rational c600 = pow2_den(Rational::from_string(kCos7Num600), 600);
    auto r6 = compare_real_part(a, c600);
    CHECK(r6.outcome == CompareOutcome::Inconclusive);
    CHECK(r6.precision_bits == 512);
    CHECK(!r6.le());  // inconclusive certifies nothing
    CHECK(!r6.ge());

    // a higher cap resolves it
    CompareOptions wide;
    wide.start_bits = 256;
    wide.max_bits = 1024;
    auto r7 = compare_real_part(a, c600, wide);
    CHECK(r7.outcome == CompareOutcome::Greater);
    CHECK(r7.precision_bits == 1024);
}
