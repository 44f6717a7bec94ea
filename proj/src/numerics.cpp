#include <dlog/numerics.hpp>

#include <dlog/errors.hpp>
#include <dlog/trunc_series.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace dlog::num
{

namespace
{

// Reference digits, used only to cross-check computed values.
const char *const gamma_literal = "0.577215664901532860606512090082402431042159335939923598805767";
const char *const pi_literal = "3.14159265358979323846264338327950288419716939937510582097494";
const char *const ln2_literal = "0.693147180559945309417232121458176568075500134360255254120680";
constexpr long literal_bits = 195;

constexpr double log2e = 1.4426950408889634074;
constexpr double ln2d = 0.69314718055994530942;

long round_up(long bits, long step) { return (bits + step - 1) / step * step; }

double log2_abs(const Rational &q)
{
    BigFloat f(q, 64);
    if (f.is_zero()) {
        return -1e300;
    }
    long e = 0;
    double m = mpfr_get_d_2exp(&e, f.raw(), MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

BigFloat mpfr_constant(int (*fn)(mpfr_ptr, mpfr_rnd_t), long prec)
{
    BigFloat r(prec);
    fn(r.raw(), MPFR_RNDN);
    return r;
}

void cross_check(const char *name, const BigFloat &computed, const BigFloat &other, long bits)
{
    BigFloat tol = ldexp(abs(computed), -bits);
    if (abs(computed - other) > tol) {
        throw consistency_error(std::string("constant ") + name + " disagrees with its reference: "
                                + computed.to_string(40) + " vs " + other.to_string(40));
    }
}

ConstantSet compute_constants(long prec)
{
    const long w = prec + 32;
    BigFloat g = gamma_euler_maclaurin(w).value;
    BigFloat p = pi_agm(w);
    BigFloat l = ln2_series(w);

    cross_check("gamma", g, mpfr_constant(mpfr_const_euler, w), prec - 8);
    cross_check("pi", p, mpfr_constant(mpfr_const_pi, w), prec - 8);
    cross_check("ln2", l, mpfr_constant(mpfr_const_log2, w), prec - 8);
    const long lit = std::min(prec, literal_bits) - 8;
    cross_check("gamma", g, BigFloat::parse(gamma_literal, w), lit);
    cross_check("pi", p, BigFloat::parse(pi_literal, w), lit);
    cross_check("ln2", l, BigFloat::parse(ln2_literal, w), lit);

    return {g.with_prec(prec), p.with_prec(prec), l.with_prec(prec)};
}

// Unchecked-precision cache shared by the public accessor and the special
// functions, which need guard bits beyond the public cap.
const ConstantSet &cached_constants(long prec)
{
    static std::mutex mtx;
    static std::map<long, ConstantSet> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(prec);
    if (it == cache.end()) {
        it = cache.emplace(prec, compute_constants(prec)).first;
    }
    return it->second;
}

BigFloat infinity(long prec)
{
    BigFloat r(prec);
    mpfr_set_inf(r.raw(), 1);
    return r;
}

BigFloat ei_series(const BigFloat &x, long prec)
{
    const double xd = x.to_double();
    long guard = 32 + static_cast<long>(std::ceil(std::log2(std::fabs(xd) + 2.0)));
    if (xd < 0) {
        guard += static_cast<long>(std::ceil(2.0 * std::fabs(xd) * log2e));
    }
    const long w = round_up(prec + guard, 64);
    const BigFloat xs = x.with_prec(w);
    const BigFloat eps = epsilon(w, w);
    BigFloat term(1L, w);
    BigFloat sum(0L, w);
    for (long k = 1;; ++k) {
        term *= xs;
        term /= k;
        BigFloat contrib = term / k;
        sum += contrib;
        if (static_cast<double>(k) > std::fabs(xd) && abs(contrib) < eps * max(abs(sum), BigFloat(1L, w))) {
            break;
        }
    }
    BigFloat r = sum + cached_constants(w).gamma + log(abs(xs));
    return r.with_prec(prec);
}

BigFloat ei_asymptotic(const BigFloat &x, long prec)
{
    const long w = prec + 32;
    const BigFloat xs = x.with_prec(w);
    const BigFloat eps = epsilon(w, w);
    BigFloat term(1L, w);
    BigFloat sum(1L, w);
    for (long k = 1;; ++k) {
        BigFloat next = term * k / xs;
        if (abs(next) >= abs(term) || abs(next) < eps) {
            break;
        }
        term = next;
        sum += term;
    }
    return (exp(xs) / xs * sum).with_prec(prec);
}

} // namespace

GammaEM gamma_euler_maclaurin(long prec)
{
    const long w = prec + 16;
    const unsigned m = static_cast<unsigned>(w / 12 + 8);
    const auto bern = bernoulli_numbers(2 * m + 2);
    // Smallest n with |B_{2m+2}| / ((2m+2) n^{2m+2}) < 2^-w.
    const double lb = log2_abs(bern[2 * m + 2]) - std::log2(2.0 * m + 2.0);
    const double log2n = (lb + static_cast<double>(w)) / (2.0 * m + 2.0);
    const unsigned n = std::max(10U, static_cast<unsigned>(std::ceil(std::exp2(log2n))) + 1);

    BigFloat h(0L, w);
    for (unsigned k = n - 1; k >= 1; --k) {
        h += BigFloat(1L, w) / static_cast<long>(k);
    }
    const BigFloat nf(static_cast<long>(n), w);
    BigFloat g = h - log(nf) + BigFloat(1L, w) / (2 * nf);
    const BigFloat inv_n2 = BigFloat(1L, w) / (nf * nf);
    BigFloat pw = inv_n2;
    for (unsigned j = 1; j <= m; ++j) {
        g += BigFloat(Rational(bern[2 * j] / Rational(2 * j)), w) * pw;
        pw *= inv_n2;
    }
    BigFloat bound = abs(BigFloat(Rational(bern[2 * m + 2] / Rational(2 * m + 2)), w)) * pw;
    return {g.with_prec(prec), bound.with_prec(64), n, m};
}

BigFloat pi_agm(long prec)
{
    const long w = prec + 16;
    BigFloat a(1L, w);
    BigFloat b = sqrt(BigFloat(1L, w) / 2L);
    BigFloat t(Rational(1, 4), w);
    BigFloat p(1L, w);
    const BigFloat eps = epsilon(w, w);
    while (abs(a - b) > eps) {
        BigFloat an = (a + b) / 2L;
        b = sqrt(a * b);
        BigFloat d = a - an;
        t -= p * d * d;
        p *= 2L;
        a = an;
    }
    BigFloat s = a + b;
    return (s * s / (4L * t)).with_prec(prec);
}

BigFloat ln2_series(long prec)
{
    // ln 2 = 2 atanh(1/3) = (2/3) sum 1/((2k+1) 9^k)
    const long w = prec + 16;
    const BigFloat eps = epsilon(w, w);
    BigFloat pw(1L, w);
    BigFloat sum(0L, w);
    for (long k = 0;; ++k) {
        BigFloat term = pw / (2 * k + 1);
        sum += term;
        if (term < eps) {
            break;
        }
        pw /= 9L;
    }
    return (sum * 2L / 3L).with_prec(prec);
}

const ConstantSet &constants(long prec)
{
    if (prec < 16 || prec > max_constant_prec) {
        throw usage_error("constant precision must lie in [16, " + std::to_string(max_constant_prec) + "] bits");
    }
    return cached_constants(prec);
}

double ei_asymptotic_threshold(long prec) { return static_cast<double>(prec + 10) * ln2d + 10.0; }

BigFloat ei(const BigFloat &x)
{
    if (x.is_zero()) {
        throw singularity_error("Ei has a logarithmic pole at 0");
    }
    if (!x.is_finite()) {
        throw domain_error("Ei of a non-finite argument");
    }
    const long prec = x.prec();
    if (x.to_double() < -ei_asymptotic_threshold(prec)) {
        return ei_asymptotic(x, prec);
    }
    return ei_series(x, prec);
}

BigFloat e1(const BigFloat &x)
{
    if (x.sign() <= 0) {
        throw domain_error("E1 needs a positive argument");
    }
    return -ei(-x);
}

BigFloat li(const BigFloat &x)
{
    if (x.sign() <= 0) {
        throw domain_error("li needs a positive argument");
    }
    return ei(log(x));
}

BigFloat mu_root(long prec)
{
    BigFloat lo(1.4, 64);
    BigFloat hi(1.5, 64);
    if (!(li(lo).sign() < 0 && li(hi).sign() > 0)) {
        throw consistency_error("li has no sign change on [1.4, 1.5]");
    }
    for (int i = 0; i < 24; ++i) {
        BigFloat mid = (lo + hi) / 2L;
        (li(mid).sign() < 0 ? lo : hi) = mid;
    }
    const long w = prec + 32;
    BigFloat x = ((lo + hi) / 2L).with_prec(w);
    const BigFloat tol = epsilon(w - 8, w);
    for (int it = 0;; ++it) {
        if (it > 60) {
            throw accuracy_error("mu_root: Newton iteration did not settle", x.to_string(30));
        }
        // li'(x) = 1/ln x
        BigFloat dx = li(x) * log(x);
        x -= dx;
        if (abs(dx) < tol) {
            break;
        }
    }
    if (abs(li(x)) > epsilon(prec - 16, w)) {
        throw accuracy_error("mu_root: residual too large", x.to_string(30));
    }
    return x.with_prec(prec);
}

BigFloat lambert_w(const BigFloat &x)
{
    const long prec = x.prec();
    if (x.is_zero()) {
        return BigFloat(prec);
    }
    const long w = prec + prec / 2 + 64;
    const BigFloat xs = x.with_prec(w);
    const BigFloat v = exp(BigFloat(1L, w)) * xs + 1L;
    if (v.sign() <= 0) {
        throw domain_error("lambert_w: argument at or below the branch point -1/e");
    }
    BigFloat wv(w);
    if (v < 0.5) {
        BigFloat p = sqrt(2L * v);
        wv = -1L + p - p * p / 3L + BigFloat(Rational(11, 72), w) * p * p * p;
    } else if (xs < 3.0) {
        wv = log1p(xs);
    } else {
        BigFloat l1 = log(xs);
        BigFloat l2 = log(l1);
        wv = l1 - l2 + l2 / l1;
    }
    const BigFloat tol = epsilon(w - 12, w);
    for (int it = 0;; ++it) {
        if (it > 200) {
            throw accuracy_error("lambert_w: Halley iteration did not settle", wv.to_string(30));
        }
        BigFloat ew = exp(wv);
        BigFloat f = wv * ew - xs;
        if (f.is_zero()) {
            break;
        }
        BigFloat w1 = wv + 1L;
        BigFloat denom = ew * w1 - (wv + 2L) * f / (2L * w1);
        BigFloat dw = f / denom;
        wv -= dw;
        // near -1/e the root is only determined to about eps/|1+W|
        BigFloat scale = abs(wv) + epsilon(prec, w) + 1L / abs(w1);
        if (abs(dw) <= tol * scale) {
            break;
        }
    }
    BigFloat residual = abs(wv * exp(wv) - xs);
    if (residual > epsilon(prec - 4, w) * (abs(xs) + 1L)) {
        throw accuracy_error("lambert_w: residual bound violated", wv.to_string(30));
    }
    return wv.with_prec(prec);
}

QuadResult quad(const Integrand &f, const BigFloat &a, const BigFloat &b, const QuadOptions &opt)
{
    const long w = opt.prec + 20;
    const BigFloat A = a.with_prec(w);
    const BigFloat B = b.with_prec(w);
    if (A == B) {
        return {BigFloat(opt.prec), BigFloat(opt.prec), 0, 0};
    }
    if (!(A < B)) {
        throw usage_error("quad: lower limit must be below the upper limit");
    }
    const BigFloat hw = (B - A) / 2L;
    const BigFloat half_pi = pi(std::min(w, max_constant_prec)).with_prec(w) / 2L;
    const double u_max = static_cast<double>(w + 40) * ln2d / 2.0 + 1.0;
    const double s_max = std::asinh(2.0 * u_max / M_PI);
    long evaluations = 0;

    auto checked = [&](const BigFloat &x, const BigFloat &gl, const BigFloat &gr) {
        ++evaluations;
        BigFloat y = f(x, gl, gr);
        if (!y.is_finite()) {
            throw accuracy_error("quad: integrand is not finite at x = " + x.to_string(20), "nan");
        }
        return y.with_prec(w);
    };

    // w(s) [f(x(s)) + f(x(-s))] for s > 0.
    auto node_pair = [&](const BigFloat &s) {
        BigFloat u = half_pi * sinh(s);
        BigFloat e = exp(2L * u);
        BigFloat inv = BigFloat(1L, w) / (e + 1L);
        BigFloat gr = hw * 2L * inv;
        BigFloat gl = hw * 2L * e * inv;
        BigFloat weight = half_pi * cosh(s) * 4L * e * inv * inv;
        BigFloat fp = checked(B - gr, gl, gr);
        BigFloat fm = checked(A + gr, gr, gl);
        return weight * (fp + fm);
    };

    BigFloat raw(0L, w);
    BigFloat prev(w);
    BigFloat value(w);
    for (int level = 0; level <= opt.max_level; ++level) {
        const BigFloat h = ldexp(BigFloat(1L, w), -level);
        if (level == 0) {
            raw += half_pi * checked(A + hw, hw, hw);
            for (long k = 1; static_cast<double>(k) <= s_max; ++k) {
                raw += node_pair(BigFloat(k, w));
            }
        } else {
            for (long k = 1;; k += 2) {
                BigFloat s = h * k;
                if (s > s_max) {
                    break;
                }
                raw += node_pair(s);
            }
        }
        value = hw * h * raw;
        if (level >= 3) {
            BigFloat err = abs(value - prev);
            BigFloat scale = max(abs(value), epsilon(w, w));
            if (err <= BigFloat(opt.rel_tol, w) * scale) {
                return {value.with_prec(opt.prec), err.with_prec(opt.prec), level, evaluations};
            }
        }
        prev = value;
    }
    throw accuracy_error("quad: no convergence within " + std::to_string(opt.max_level) + " levels",
                         value.to_string(30));
}

QuadResult quad_to_infinity(const Integrand &f, const BigFloat &a, const QuadOptions &opt)
{
    const long w = opt.prec + 20;
    const BigFloat A = a.with_prec(w);
    const BigFloat one(1L, w);
    QuadResult head = quad(f, A, A + 1L, opt);
    const BigFloat inf = infinity(w);
    Integrand mapped = [&](const BigFloat &u, const BigFloat &, const BigFloat &gr) {
        // x = a + 1 + u/(1-u), dx = du/(1-u)^2
        BigFloat t = u / gr;
        BigFloat x = A + 1L + t;
        BigFloat y = f(x, 1L + t, inf);
        if (y.is_zero()) {
            return y;
        }
        return y / (gr * gr);
    };
    QuadResult tail = quad(mapped, BigFloat(0L, w), one, opt);
    return {head.value + tail.value, head.error + tail.error, std::max(head.levels, tail.levels),
            head.evaluations + tail.evaluations};
}

Accelerated euler_average(const std::vector<BigFloat> &partial_sums, std::size_t depth)
{
    if (partial_sums.empty()) {
        throw usage_error("euler_average: no partial sums");
    }
    depth = std::min(depth, partial_sums.size() - 1);
    std::vector<BigFloat> level(partial_sums.end() - static_cast<std::ptrdiff_t>(depth + 1), partial_sums.end());
    const long prec = level.back().prec();
    if (depth == 0) {
        return {level.back(), BigFloat(prec)};
    }
    while (level.size() > 2) {
        for (std::size_t i = 0; i + 1 < level.size(); ++i) {
            level[i] = (level[i] + level[i + 1]) / 2L;
        }
        level.pop_back();
    }
    return {(level[0] + level[1]) / 2L, abs(level[0] - level[1]) / 2L};
}

Accelerated cesaro_mean(const std::vector<BigFloat> &partial_sums)
{
    if (partial_sums.empty()) {
        throw usage_error("cesaro_mean: no partial sums");
    }
    const long prec = partial_sums.back().prec();
    BigFloat total(0L, prec);
    BigFloat half(0L, prec);
    const std::size_t n = partial_sums.size();
    for (std::size_t i = 0; i < n; ++i) {
        total += partial_sums[i];
        if (i + 1 == (n + 1) / 2) {
            half = total / static_cast<long>(i + 1);
        }
    }
    BigFloat mean = total / static_cast<long>(n);
    return {mean, abs(mean - half)};
}

SeriesEval eval_series(const std::vector<BigFloat> &coeffs, const BigFloat &x, SumMode mode)
{
    if (coeffs.empty()) {
        throw usage_error("eval_series: empty coefficient list");
    }
    const long prec = x.prec();
    SeriesEval out{BigFloat(prec), BigFloat(prec), {}};
    out.partial_sums.reserve(coeffs.size());
    BigFloat pw(1L, prec);
    BigFloat sum(0L, prec);
    BigFloat last(0L, prec);
    for (const auto &c : coeffs) {
        last = c * pw;
        sum += last;
        out.partial_sums.push_back(sum);
        pw *= x;
    }
    switch (mode) {
    case SumMode::plain:
        out.value = sum;
        out.error = abs(last);
        break;
    case SumMode::euler: {
        auto acc = euler_average(out.partial_sums, 48);
        out.value = acc.value;
        out.error = acc.error;
        break;
    }
    case SumMode::cesaro: {
        auto acc = cesaro_mean(out.partial_sums);
        out.value = acc.value;
        out.error = acc.error;
        break;
    }
    }
    return out;
}

SeriesEval eval_series(const std::vector<Rational> &coeffs, const BigFloat &x, SumMode mode)
{
    std::vector<BigFloat> c;
    c.reserve(coeffs.size());
    for (const auto &q : coeffs) {
        c.emplace_back(q, x.prec());
    }
    return eval_series(c, x, mode);
}

Accelerated richardson(const std::vector<BigFloat> &h, const std::vector<BigFloat> &v)
{
    if (h.size() != v.size() || h.empty()) {
        throw usage_error("richardson: need matching, non-empty sample lists");
    }
    const std::size_t n = v.size();
    std::vector<BigFloat> t = v;
    BigFloat before_last = t[n - 1];
    // t[i] holds the Neville value through samples i-m..i after round m.
    for (std::size_t m = 1; m < n; ++m) {
        before_last = t[n - 1];
        for (std::size_t i = n - 1; i >= m; --i) {
            t[i] = t[i] + (t[i] - t[i - 1]) * h[i] / (h[i - m] - h[i]);
            if (i == m) {
                break;
            }
        }
    }
    BigFloat err = n > 1 ? abs(t[n - 1] - before_last) : BigFloat(v[0].prec());
    return {t[n - 1], err};
}

} // namespace dlog::num
