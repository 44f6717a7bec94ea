#include <dlog/bigfloat.hpp>

#include <dlog/errors.hpp>

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>

namespace dlog
{

namespace
{

long min_prec(const BigFloat &a, const BigFloat &b) { return std::min(a.prec(), b.prec()); }

void check_prec(long prec)
{
    if (prec < MPFR_PREC_MIN || prec > 1L << 20) {
        throw usage_error("precision out of range: " + std::to_string(prec));
    }
}

} // namespace

BigFloat::BigFloat(long prec)
{
    check_prec(prec);
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long prec) : BigFloat(prec) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(double value, long prec) : BigFloat(prec) { mpfr_set_d(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational &value, long prec) : BigFloat(prec)
{
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt &value, long prec) : BigFloat(prec)
{
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string &text, long prec)
{
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
        throw usage_error("malformed decimal number: '" + text + "'");
    }
    return r;
}

BigFloat::BigFloat(const BigFloat &other)
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&other) noexcept
{
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat &BigFloat::operator=(const BigFloat &other)
{
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&other) noexcept
{
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_prec(long prec) const
{
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(int digits) const
{
    if (!is_finite()) {
        return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    }
    if (digits <= 0) {
        digits = static_cast<int>(std::floor(static_cast<double>(prec()) * 0.30102999566398119521)) - 1;
        digits = std::max(digits, 1);
    }
    char *buf = nullptr;
    std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string BigFloat::to_fixed(int decimals) const
{
    char *buf = nullptr;
    std::string fmt = "%." + std::to_string(decimals) + "Rf";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat &BigFloat::operator+=(const BigFloat &o) { return *this = *this + o; }
BigFloat &BigFloat::operator-=(const BigFloat &o) { return *this = *this - o; }
BigFloat &BigFloat::operator*=(const BigFloat &o) { return *this = *this * o; }
BigFloat &BigFloat::operator/=(const BigFloat &o) { return *this = *this / o; }

BigFloat &BigFloat::operator*=(long s)
{
    mpfr_mul_si(v_, v_, s, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator/=(long s)
{
    if (s == 0) {
        throw singularity_error("division by zero");
    }
    mpfr_div_si(v_, v_, s, MPFR_RNDN);
    return *this;
}

BigFloat operator+(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(min_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(min_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat &a, const BigFloat &b)
{
    BigFloat r(min_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat &a, const BigFloat &b)
{
    if (b.is_zero()) {
        throw singularity_error("division by zero");
    }
    BigFloat r(min_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat &a, long b)
{
    BigFloat r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat &a, long b)
{
    BigFloat r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigFloat operator-(long a, const BigFloat &b)
{
    BigFloat r(b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat &a, long b)
{
    BigFloat r = a;
    r *= b;
    return r;
}

BigFloat operator/(const BigFloat &a, long b)
{
    BigFloat r = a;
    r /= b;
    return r;
}

BigFloat operator/(long a, const BigFloat &b)
{
    if (b.is_zero()) {
        throw singularity_error("division by zero");
    }
    BigFloat r(b.prec());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

#define DLOG_UNARY(name, call)                                                                                         \
    BigFloat name(const BigFloat &x)                                                                                   \
    {                                                                                                                  \
        BigFloat r(x.prec());                                                                                          \
        call(r.raw(), x.raw(), MPFR_RNDN);                                                                             \
        return r;                                                                                                      \
    }

DLOG_UNARY(abs, mpfr_abs)
DLOG_UNARY(exp, mpfr_exp)
DLOG_UNARY(expm1, mpfr_expm1)
DLOG_UNARY(sinh, mpfr_sinh)
DLOG_UNARY(cosh, mpfr_cosh)
DLOG_UNARY(tanh, mpfr_tanh)
DLOG_UNARY(gamma_fn, mpfr_gamma)

#undef DLOG_UNARY

BigFloat sqrt(const BigFloat &x)
{
    if (x.sign() < 0) {
        throw domain_error("sqrt of a negative number");
    }
    BigFloat r(x.prec());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat &x)
{
    if (x.sign() <= 0) {
        throw domain_error("log of a non-positive number");
    }
    BigFloat r(x.prec());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat log1p(const BigFloat &x)
{
    if (x <= BigFloat(-1L, x.prec())) {
        throw domain_error("log1p at or below -1");
    }
    BigFloat r(x.prec());
    mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat &x, const BigFloat &y)
{
    BigFloat r(std::min(x.prec(), y.prec()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow(const BigFloat &x, long n)
{
    BigFloat r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

BigFloat ldexp(const BigFloat &x, long e)
{
    BigFloat r(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat min(const BigFloat &a, const BigFloat &b) { return a < b ? a : b; }
BigFloat max(const BigFloat &a, const BigFloat &b) { return a < b ? b : a; }

BigFloat epsilon(long bits, long prec) { return ldexp(BigFloat(1L, prec), -bits); }

} // namespace dlog
