#include <dlog/rational.hpp>

#include <dlog/errors.hpp>

#include <cctype>
#include <string>

namespace dlog
{

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw usage_error("malformed rational: '" + std::string(text) + "'");
        }
        BigInt d{std::string(den)};
        if (d == 0) {
            throw usage_error("zero denominator in '" + std::string(text) + "'");
        }
        out = Rational(BigInt{std::string(num)}, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
            throw usage_error("malformed decimal: '" + std::string(text) + "'");
        }
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
        BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp));
        out = Rational(whole * scale + frac, scale);
    } else {
        if (!all_digits(body)) {
            throw usage_error("malformed rational: '" + std::string(text) + "'");
        }
        out = Rational(BigInt(std::string(body)));
    }
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

std::string to_string(const Rational &r) { return r.get_str(); }

BigInt factorial(unsigned n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Rational gen_binomial(const Rational &r, unsigned k)
{
    Rational num = 1;
    for (unsigned j = 0; j < k; ++j) {
        num *= r - j;
    }
    return num / Rational(factorial(k));
}

Rational pow(const Rational &r, long e)
{
    if (e < 0) {
        if (r == 0) {
            throw singularity_error("0 raised to a negative power");
        }
        return pow(Rational(1) / r, -e);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

} // namespace dlog
