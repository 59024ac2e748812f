#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "planebound/rational.hpp"

namespace planebound {

/// Thin RAII wrapper over an mpfr_t with per-value precision. Operators
/// round to nearest at the wider operand precision; the handful of places
/// that need directed rounding use the static helpers with an explicit
/// rounding mode.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

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

    static BigFloat from(double x, mpfr_prec_t prec);
    static BigFloat from(long x, mpfr_prec_t prec);
    static BigFloat from(const Integer& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat from(const Rational& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Exact conversion; every finite value is a dyadic rational.
    Rational to_rational() const;

    /// Shortest-ish form with the given significant digits.
    std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

    /// Fixed-point form truncated toward zero at frac_digits decimals,
    /// e.g. 4.67964430629 -> "4.6796443062". Safe for reporting lower bounds.
    std::string to_fixed_truncated(int frac_digits) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

    // directed-rounding helpers
    static BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
    static BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
    static BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
    static BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
    static BigFloat sqrt(const BigFloat& a, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat rootn(const BigFloat& a, unsigned long n, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat log2(const BigFloat& a, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat exp2(const BigFloat& a, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat mul_2exp(const BigFloat& a, long e);
    static BigFloat abs(const BigFloat& a);

private:
    mpfr_t v_;
};

}  // namespace planebound
