#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "chtg/rational.hpp"

namespace chtg::exact {

/// RAII wrapper around an mpfr_t with an explicit per-value precision.
/// Binary operations round to nearest at the larger operand precision.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_double(double d, mpfr_prec_t prec);
    static BigFloat from_long(long n, mpfr_prec_t prec);
    /// Rounds p/q to `prec` bits; `exact` (optional) reports whether the
    /// conversion was exact.
    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec,
                                  bool* exact = nullptr);
    static BigFloat pi(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Exponent e with 0.5 <= |x| / 2^e < 1; only valid for nonzero values.
    mpfr_exp_t exponent() const { return mpfr_get_exp(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat cos() const;
    BigFloat sin() const;
    BigFloat acos() const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Upper bound on |x| as a double (rounded toward +inf).
    double abs_upper_double() const;
    std::string to_string(int digits = 20) const;

private:
    mpfr_t v_;
};

/// Complex number with BigFloat components.
struct BComplex {
    BigFloat re, im;

    explicit BComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    BComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BComplex from_doubles(double r, double i, mpfr_prec_t prec) {
        return {BigFloat::from_double(r, prec), BigFloat::from_double(i, prec)};
    }
    /// cos(theta) + i sin(theta)
    static BComplex unit_circle(const BigFloat& theta) {
        return {theta.cos(), theta.sin()};
    }

    friend BComplex operator+(const BComplex& a, const BComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BComplex operator-(const BComplex& a, const BComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BComplex operator*(const BComplex& a, const BComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BComplex operator-() const { return {-re, -im}; }
    BComplex conj() const { return {re, -im}; }
    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return norm2().sqrt(); }
};

}  // namespace chtg::exact
