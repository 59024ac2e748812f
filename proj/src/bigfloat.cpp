#include "planebound/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace planebound {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat BigFloat::from(double x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(long x, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(const Integer& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), rnd);
    return r;
}

BigFloat BigFloat::from(const Rational& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, x.raw().get_mpq_t(), rnd);
    return r;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    return r;
}

Rational BigFloat::to_rational() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("BigFloat: not a finite number");
    if (mpfr_zero_p(v_)) return Rational(0);
    Integer mant;
    const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
    Rational r(mant);
    if (e >= 0) {
        Integer scale = 1;
        mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return r * Rational(scale);
    }
    Integer scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return r / Rational(scale);
}

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*g", digits, rnd, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BigFloat::to_fixed_truncated(int frac_digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*f", frac_digits, MPFR_RNDZ, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return BigFloat::add(a, b, MPFR_RNDN); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return BigFloat::sub(a, b, MPFR_RNDN); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return BigFloat::mul(a, b, MPFR_RNDN); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return BigFloat::div(a, b, MPFR_RNDN); }

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, rnd);
    return r;
}

BigFloat BigFloat::sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, rnd);
    return r;
}

BigFloat BigFloat::mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, rnd);
    return r;
}

BigFloat BigFloat::div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
    BigFloat r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, rnd);
    return r;
}

BigFloat BigFloat::sqrt(const BigFloat& a, mpfr_rnd_t rnd) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, rnd);
    return r;
}

BigFloat BigFloat::rootn(const BigFloat& a, unsigned long n, mpfr_rnd_t rnd) {
    BigFloat r(a.precision());
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.v_, a.v_, n, rnd);
#else
    mpfr_root(r.v_, a.v_, n, rnd);
#endif
    return r;
}

BigFloat BigFloat::log2(const BigFloat& a, mpfr_rnd_t rnd) {
    if (a.sign() <= 0) throw std::domain_error("BigFloat: log2 of non-positive value");
    BigFloat r(a.precision());
    mpfr_log2(r.v_, a.v_, rnd);
    return r;
}

BigFloat BigFloat::exp2(const BigFloat& a, mpfr_rnd_t rnd) {
    BigFloat r(a.precision());
    mpfr_exp2(r.v_, a.v_, rnd);
    return r;
}

BigFloat BigFloat::mul_2exp(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

}  // namespace planebound
