#ifndef DLOG_TRUNC_SERIES_HPP
#define DLOG_TRUNC_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <dlog/errors.hpp>
#include <dlog/poly.hpp>
#include <dlog/rational.hpp>

namespace dlog
{

template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational one() { return 1; }
    static bool is_unit(const Rational &r) { return r != 0; }
    static Rational inverse(const Rational &r) { return 1 / r; }
    static std::string name() { return "Q"; }
};

template <>
struct ring_traits<AlphaPoly> {
    static AlphaPoly one() { return AlphaPoly(Rational(1)); }
    // Units of Q[a] are the nonzero constants.
    static bool is_unit(const AlphaPoly &r) { return r.degree() == 0; }
    static AlphaPoly inverse(const AlphaPoly &r) { return AlphaPoly(Rational(1 / r[0]), r.var()); }
    static std::string name() { return "Q[a]"; }
};

// The two coefficient rings a truncated series may live over.
template <typename R>
concept CoefficientRing = requires(const R &a, const R &b, const Rational &q) {
    { ring_traits<R>::one() } -> std::convertible_to<R>;
    { ring_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { R(a * b) };
    { R(a + b) };
    { R(a - b) };
    { R(a * q) };
    { a == b } -> std::convertible_to<bool>;
};

// Power series c_0 + c_1 x + ... + c_N x^N known exactly up to x^N.
//
// The order N is explicit state. Binary operations demand equal orders and
// never read past index N; callers truncate first when mixing precisions.
template <CoefficientRing R>
class TruncSeries
{
public:
    using ring_type = R;

    explicit TruncSeries(std::size_t order) : c_(order + 1) {}
    explicit TruncSeries(std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) {
            throw usage_error("a truncated series needs at least one coefficient");
        }
    }

    static TruncSeries constant(R value, std::size_t order)
    {
        TruncSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }
    static TruncSeries one(std::size_t order) { return constant(ring_traits<R>::one(), order); }
    // The identity series x (just 0 at order 0).
    static TruncSeries x(std::size_t order)
    {
        TruncSeries s(order);
        if (order >= 1) {
            s.c_[1] = ring_traits<R>::one();
        }
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<R> &coeffs() const { return c_; }

    const R &operator[](std::size_t k) const
    {
        if (k > order()) {
            throw usage_error("coefficient index " + std::to_string(k) + " beyond truncation order "
                              + std::to_string(order()));
        }
        return c_[k];
    }

    TruncSeries truncate(std::size_t n) const
    {
        if (n > order()) {
            throw usage_error("cannot raise truncation order from " + std::to_string(order()) + " to "
                              + std::to_string(n));
        }
        return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n) + 1));
    }

    // c_0 = 0 and c_1 = 1, i.e. the series lies in x + x^2 R[[x]].
    bool is_normalized() const { return order() >= 1 && c_[0] == R{} && c_[1] == ring_traits<R>::one(); }

    friend bool operator==(const TruncSeries &a, const TruncSeries &b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries &a, const TruncSeries &b) { return !(a == b); }

    template <typename F>
    auto map(F &&f) const
    {
        using Out = std::decay_t<decltype(f(c_[0]))>;
        std::vector<Out> out;
        out.reserve(c_.size());
        for (const auto &c : c_) {
            out.push_back(f(c));
        }
        return TruncSeries<Out>(std::move(out));
    }

private:
    std::vector<R> c_;
};

using RSeries = TruncSeries<Rational>;
using PSeries = TruncSeries<AlphaPoly>;

namespace detail
{

template <typename R>
void require_same_order(const TruncSeries<R> &a, const TruncSeries<R> &b, const char *op)
{
    if (a.order() != b.order()) {
        throw usage_error(std::string(op) + ": order mismatch (" + std::to_string(a.order()) + " vs "
                          + std::to_string(b.order()) + ")");
    }
}

} // namespace detail

template <CoefficientRing R>
TruncSeries<R> operator+(const TruncSeries<R> &a, const TruncSeries<R> &b)
{
    detail::require_same_order(a, b, "add");
    std::vector<R> c(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        c[k] = a[k] + b[k];
    }
    return TruncSeries<R>(std::move(c));
}

template <CoefficientRing R>
TruncSeries<R> operator-(const TruncSeries<R> &a, const TruncSeries<R> &b)
{
    detail::require_same_order(a, b, "sub");
    std::vector<R> c(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        c[k] = a[k] - b[k];
    }
    return TruncSeries<R>(std::move(c));
}

template <CoefficientRing R>
TruncSeries<R> operator-(const TruncSeries<R> &a)
{
    return a.map([](const R &c) { return R(-c); });
}

// Cauchy product.
template <CoefficientRing R>
TruncSeries<R> operator*(const TruncSeries<R> &a, const TruncSeries<R> &b)
{
    detail::require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    std::vector<R> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == R{}) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return TruncSeries<R>(std::move(c));
}

// Multiplication by a ring element.
template <CoefficientRing R>
TruncSeries<R> scale(const TruncSeries<R> &a, const R &s)
{
    return a.map([&](const R &c) { return R(c * s); });
}

// Multiplication by a rational scalar (distinct from scale() for R = Q[a]).
template <CoefficientRing R>
TruncSeries<R> operator*(const TruncSeries<R> &a, const Rational &s)
{
    return a.map([&](const R &c) { return R(c * s); });
}
template <CoefficientRing R>
TruncSeries<R> operator*(const Rational &s, const TruncSeries<R> &a)
{
    return a * s;
}

// a / b; b's constant term must be a unit of R.
template <CoefficientRing R>
TruncSeries<R> operator/(const TruncSeries<R> &a, const TruncSeries<R> &b)
{
    detail::require_same_order(a, b, "div");
    if (!ring_traits<R>::is_unit(b[0])) {
        throw singularity_error("div: constant term of the divisor is not invertible");
    }
    const R inv = ring_traits<R>::inverse(b[0]);
    const std::size_t n = a.order();
    std::vector<R> q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        R acc = a[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= b[j] * q[k - j];
        }
        q[k] = acc * inv;
    }
    return TruncSeries<R>(std::move(q));
}

// Drops the order by one: the x^N coefficient of f' is unknown.
template <CoefficientRing R>
TruncSeries<R> derivative(const TruncSeries<R> &a)
{
    if (a.order() == 0) {
        throw usage_error("derivative of an order-0 series has no known coefficients");
    }
    std::vector<R> d(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        d[k - 1] = a[k] * Rational(static_cast<long>(k));
    }
    return TruncSeries<R>(std::move(d));
}

// Antiderivative with zero constant term; raises the order by one.
template <CoefficientRing R>
TruncSeries<R> integrate(const TruncSeries<R> &a)
{
    std::vector<R> c(a.order() + 2);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        c[k + 1] = a[k] / Rational(static_cast<long>(k + 1));
    }
    return TruncSeries<R>(std::move(c));
}

// f / x. Requires c_0 = 0; lowers the order by one.
template <CoefficientRing R>
TruncSeries<R> shift_down(const TruncSeries<R> &a)
{
    if (a[0] != R{}) {
        throw domain_error("shift_down: series has a nonzero constant term");
    }
    if (a.order() == 0) {
        throw usage_error("shift_down: order-0 series");
    }
    return TruncSeries<R>(std::vector<R>(a.coeffs().begin() + 1, a.coeffs().end()));
}

// x f; raises the order by one.
template <CoefficientRing R>
TruncSeries<R> shift_up(const TruncSeries<R> &a)
{
    std::vector<R> c;
    c.reserve(a.order() + 2);
    c.emplace_back();
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return TruncSeries<R>(std::move(c));
}

// f(A x).
template <CoefficientRing R>
TruncSeries<R> rescale(const TruncSeries<R> &a, const Rational &factor)
{
    std::vector<R> c(a.order() + 1);
    Rational pw = 1;
    for (std::size_t k = 0; k <= a.order(); ++k) {
        c[k] = a[k] * pw;
        pw *= factor;
    }
    return TruncSeries<R>(std::move(c));
}

// f(g(x)) by Horner's scheme; g(0) must vanish.
template <CoefficientRing R>
TruncSeries<R> compose(const TruncSeries<R> &f, const TruncSeries<R> &g)
{
    detail::require_same_order(f, g, "compose");
    if (g[0] != R{}) {
        throw domain_error("compose: inner series has a nonzero constant term");
    }
    const std::size_t n = f.order();
    auto acc = TruncSeries<R>::constant(f[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * g;
        std::vector<R> c = acc.coeffs();
        c[0] += f[k];
        acc = TruncSeries<R>(std::move(c));
    }
    return acc;
}

// exp(f) for f(0) = 0, via n e_n = sum_k k f_k e_{n-k}.
template <CoefficientRing R>
TruncSeries<R> exp(const TruncSeries<R> &f)
{
    if (f[0] != R{}) {
        throw domain_error("exp: series must have zero constant term");
    }
    const std::size_t n = f.order();
    std::vector<R> e(n + 1);
    e[0] = ring_traits<R>::one();
    for (std::size_t m = 1; m <= n; ++m) {
        R acc{};
        for (std::size_t k = 1; k <= m; ++k) {
            if (f[k] == R{}) {
                continue;
            }
            acc += f[k] * e[m - k] * Rational(static_cast<long>(k));
        }
        e[m] = acc / Rational(static_cast<long>(m));
    }
    return TruncSeries<R>(std::move(e));
}

// log(f) for f(0) = 1, as the antiderivative of f'/f.
template <CoefficientRing R>
TruncSeries<R> log(const TruncSeries<R> &f)
{
    if (f[0] != ring_traits<R>::one()) {
        throw domain_error("log: series must have constant term 1");
    }
    if (f.order() == 0) {
        return TruncSeries<R>(0);
    }
    return integrate(derivative(f) / f.truncate(f.order() - 1));
}

// f^s = exp(s log f) for f(0) = 1 and s in the coefficient ring.
template <CoefficientRing R>
TruncSeries<R> pow_scalar(const TruncSeries<R> &f, const R &s)
{
    if (f[0] != ring_traits<R>::one()) {
        throw domain_error("pow_scalar: series must have constant term 1");
    }
    return exp(scale(log(f), s));
}

// f^m by repeated squaring, any constant term.
template <CoefficientRing R>
TruncSeries<R> pow_int(const TruncSeries<R> &f, unsigned m)
{
    auto result = TruncSeries<R>::one(f.order());
    auto base = f;
    while (m > 0) {
        if (m & 1U) {
            result = result * base;
        }
        m >>= 1U;
        if (m > 0) {
            base = base * base;
        }
    }
    return result;
}

// Embeds a rational series into Q[var][[x]].
inline PSeries lift(const RSeries &f, const std::string &var = "α")
{
    return f.map([&](const Rational &c) { return AlphaPoly(c, var); });
}

// Evaluates every polynomial coefficient at var = value.
inline RSeries substitute(const PSeries &f, const Rational &value)
{
    return f.map([&](const AlphaPoly &c) { return c(value); });
}

// Compositional inverse of f in x + x^2 Q[[x]] through the Lagrange
// residues [x^n] g = (1/n) [t^(n-1)] (t/f(t))^n. The result is checked by
// composing back; a mismatch raises consistency_error.
RSeries comp_inverse(const RSeries &f);

// Same inverse by Newton iteration g <- g - (f(g) - x)/f'(g). Kept as an
// independent route for cross-checking comp_inverse.
RSeries comp_inverse_newton(const RSeries &f);

// B_0..B_n with the convention B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned n);
Rational bernoulli_number(unsigned n);

// B_q(x) = q! [t^q] t e^{xt}/(e^t - 1).
Rational bernoulli_poly(unsigned q, const Rational &x);

} // namespace dlog

#endif
