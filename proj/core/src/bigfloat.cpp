#include "chtg/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace chtg::exact {

namespace {
mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_long(long n, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec, bool* exact) {
    BigFloat r(prec);
    int t = mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    if (exact) *exact = (t == 0);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos() const {
    BigFloat r(precision());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin() const {
    BigFloat r(precision());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::acos() const {
    BigFloat r(precision());
    mpfr_acos(r.v_, v_, MPFR_RNDN);
    return r;
}

double BigFloat::abs_upper_double() const {
    BigFloat a = abs();
    return mpfr_get_d(a.v_, MPFR_RNDU);
}

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

}  // namespace chtg::exact
