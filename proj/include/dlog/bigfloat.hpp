#ifndef DLOG_BIGFLOAT_HPP
#define DLOG_BIGFLOAT_HPP

#include <climits>
#include <string>

#include <mpfr.h>

#include <dlog/rational.hpp>

namespace dlog
{

// Binary floating point number with an explicit precision in bits.
// Binary operations round to the smaller precision of the two operands.
class BigFloat
{
public:
    static constexpr long default_prec = 256;

    explicit BigFloat(long prec = default_prec);
    BigFloat(long value, long prec);
    BigFloat(double value, long prec);
    BigFloat(const Rational &value, long prec);
    BigFloat(const BigInt &value, long prec);
    // Decimal literal such as "1.4513692348833810502839684858920274494930".
    static BigFloat parse(const std::string &text, long prec);

    BigFloat(const BigFloat &other);
    BigFloat(BigFloat &&other) noexcept;
    BigFloat &operator=(const BigFloat &other);
    BigFloat &operator=(BigFloat &&other) noexcept;
    ~BigFloat();

    long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }
    // Same value rounded to a new precision.
    BigFloat with_prec(long prec) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Scientific notation with the given number of significant digits
    // (0 picks the digits the precision supports).
    std::string to_string(int digits = 0) const;
    // Fixed notation with the given number of digits after the point.
    std::string to_fixed(int decimals) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    long exponent() const { return is_zero() ? LONG_MIN / 2 : static_cast<long>(mpfr_get_exp(v_)); }

    BigFloat operator-() const;
    BigFloat &operator+=(const BigFloat &o);
    BigFloat &operator-=(const BigFloat &o);
    BigFloat &operator*=(const BigFloat &o);
    BigFloat &operator/=(const BigFloat &o);
    BigFloat &operator*=(long s);
    BigFloat &operator/=(long s);

    friend BigFloat operator+(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator-(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator*(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator/(const BigFloat &a, const BigFloat &b);
    friend BigFloat operator+(const BigFloat &a, long b);
    friend BigFloat operator+(long a, const BigFloat &b) { return b + a; }
    friend BigFloat operator-(const BigFloat &a, long b);
    friend BigFloat operator-(long a, const BigFloat &b);
    friend BigFloat operator*(const BigFloat &a, long b);
    friend BigFloat operator*(long a, const BigFloat &b) { return b * a; }
    friend BigFloat operator/(const BigFloat &a, long b);
    friend BigFloat operator/(long a, const BigFloat &b);

    friend int compare(const BigFloat &a, const BigFloat &b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat &a, const BigFloat &b) { return compare(a, b) < 0; }
    friend bool operator>(const BigFloat &a, const BigFloat &b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigFloat &a, const BigFloat &b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigFloat &a, const BigFloat &b) { return compare(a, b) >= 0; }
    friend bool operator==(const BigFloat &a, const BigFloat &b) { return compare(a, b) == 0; }
    friend bool operator<(const BigFloat &a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const BigFloat &a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }

private:
    mpfr_t v_;
};

// Elementary functions (rounded to the argument's precision).
BigFloat abs(const BigFloat &x);
BigFloat sqrt(const BigFloat &x);
BigFloat exp(const BigFloat &x);
BigFloat expm1(const BigFloat &x);
BigFloat log(const BigFloat &x);
BigFloat log1p(const BigFloat &x);
BigFloat pow(const BigFloat &x, const BigFloat &y);
BigFloat pow(const BigFloat &x, long n);
BigFloat sinh(const BigFloat &x);
BigFloat cosh(const BigFloat &x);
BigFloat tanh(const BigFloat &x);
BigFloat gamma_fn(const BigFloat &x);
BigFloat ldexp(const BigFloat &x, long e);
BigFloat min(const BigFloat &a, const BigFloat &b);
BigFloat max(const BigFloat &a, const BigFloat &b);

// 2^(-bits) at the given precision.
BigFloat epsilon(long bits, long prec);

} // namespace dlog

#endif
