#ifndef DLOG_POLY_HPP
#define DLOG_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <dlog/errors.hpp>
#include <dlog/rational.hpp>

namespace dlog
{

// Dense univariate polynomial with coefficients in C (index = degree).
//
// C is either Rational or, for the two-variable convolution identity, another
// Poly. The variable name is a display label only: it takes no part in
// equality or arithmetic. Trailing zero coefficients are always trimmed, so
// the zero polynomial has an empty coefficient list and degree -1.
template <typename C>
class Poly
{
public:
    using coeff_type = C;

    Poly() = default;
    explicit Poly(std::vector<C> coeffs, std::string var = "α") : c_(std::move(coeffs)), var_(std::move(var))
    {
        trim();
    }
    // Constant polynomial.
    explicit Poly(const Rational &value, std::string var = "α") : c_{C(value)}, var_(std::move(var)) { trim(); }

    static Poly constant(C value, std::string var = "α")
    {
        return Poly(std::vector<C>{std::move(value)}, std::move(var));
    }
    static Poly variable(std::string var = "α")
    {
        return Poly(std::vector<C>{C{}, C(1)}, std::move(var));
    }
    // value * var^k
    static Poly monomial(C value, std::size_t k, std::string var = "α")
    {
        std::vector<C> c(k + 1);
        c[k] = std::move(value);
        return Poly(std::move(c), std::move(var));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<C> &coeffs() const { return c_; }
    const std::string &var() const { return var_; }
    Poly with_var(std::string v) const
    {
        Poly r = *this;
        r.var_ = std::move(v);
        return r;
    }

    // Coefficient of var^k; zero past the degree.
    C operator[](std::size_t k) const { return k < c_.size() ? c_[k] : C{}; }
    C leading() const { return c_.empty() ? C{} : c_.back(); }

    friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto &x : r.c_) {
            x = -x;
        }
        return r;
    }

    Poly &operator+=(const Poly &o)
    {
        adopt_var(o);
        if (c_.size() < o.c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        adopt_var(o);
        if (c_.size() < o.c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        trim();
        return *this;
    }
    Poly &operator*=(const Poly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly(std::vector<C>{}, a.is_constant() ? b.var_ : a.var_);
        }
        std::vector<C> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_coeff(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(c), a.is_constant() ? b.var_ : a.var_);
    }

    // Scalar action by a Rational (also covers nested polynomials).
    friend Poly operator*(const Poly &a, const Rational &s)
    {
        Poly r = a;
        for (auto &x : r.c_) {
            x *= s;
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Rational &s, const Poly &a) { return a * s; }
    friend Poly operator/(const Poly &a, const Rational &s)
    {
        if (s == 0) {
            throw singularity_error("polynomial divided by zero");
        }
        return a * Rational(1 / s);
    }
    Poly &operator*=(const Rational &s) { return *this = *this * s; }
    Poly &operator/=(const Rational &s) { return *this = *this / s; }

    Poly derivative() const
    {
        if (c_.size() <= 1) {
            return Poly(std::vector<C>{}, var_);
        }
        std::vector<C> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) {
            d[k - 1] = c_[k] * Rational(static_cast<long>(k));
        }
        return Poly(std::move(d), var_);
    }

    // Horner evaluation at any X that can absorb C coefficients.
    template <typename X>
    X evaluate(const X &at) const
    {
        X acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at + X(*it);
        }
        return acc;
    }
    C operator()(const C &at) const
    {
        C acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            C next = acc * at + *it;
            acc = std::move(next);
        }
        return acc;
    }

    // p(q(var)).
    Poly compose(const Poly &q) const
    {
        Poly acc(std::vector<C>{}, q.var_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * q + Poly::constant(*it, q.var_);
        }
        return acc.with_var(q.var_.empty() ? var_ : q.var_);
    }

    // p(var + shift).
    Poly shift(const C &by) const { return compose(Poly(std::vector<C>{by, C(1)}, var_)); }

    // Synthetic division by (var + root_shift): returns (quotient, remainder).
    std::pair<Poly, C> divide_linear(const C &root_shift) const
    {
        if (c_.empty()) {
            return {Poly(std::vector<C>{}, var_), C{}};
        }
        // Divide by (var - r) with r = -root_shift.
        C r = -root_shift;
        std::vector<C> q(c_.size() - 1);
        C carry = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            C next = c_[i] + carry * r;
            carry = std::move(next);
        }
        return {Poly(std::move(q), var_), carry};
    }

    // Exact division by var; the constant term must vanish.
    Poly divide_by_var() const
    {
        if (!c_.empty() && !is_zero_coeff(c_[0])) {
            throw consistency_error("polynomial has a nonzero constant term, not divisible by its variable");
        }
        if (c_.size() <= 1) {
            return Poly(std::vector<C>{}, var_);
        }
        return Poly(std::vector<C>(c_.begin() + 1, c_.end()), var_);
    }

private:
    static bool is_zero_coeff(const C &x) { return x == C{}; }

    void trim()
    {
        while (!c_.empty() && is_zero_coeff(c_.back())) {
            c_.pop_back();
        }
    }
    void adopt_var(const Poly &o)
    {
        if (is_constant() && !o.is_constant()) {
            var_ = o.var_;
        }
    }

    std::vector<C> c_;
    std::string var_ = "α";
};

// Polynomial in one formal variable over the rationals; used for α, s and p.
using AlphaPoly = Poly<Rational>;

// r(r-1)...(r-k+1)/k! where r is itself a polynomial.
inline AlphaPoly gen_binomial(const AlphaPoly &top, unsigned k)
{
    AlphaPoly acc = AlphaPoly::constant(1, top.var());
    for (unsigned j = 0; j < k; ++j) {
        acc *= top - AlphaPoly::constant(Rational(j), top.var());
    }
    return acc / Rational(factorial(k));
}

// Human-readable rendering such as "1/3*α^2 + 2*α - 1".
std::string to_string(const AlphaPoly &p);

} // namespace dlog

#endif
