#include <dlog/soldner.hpp>

#include <algorithm>
#include <cmath>

#include <dlog/numerics.hpp>

namespace dlog::soldner
{

namespace
{

constexpr std::size_t cross_check_upto = 12;

std::vector<Rational> recurrence(std::size_t N)
{
    std::vector<Rational> a(N + 1);
    if (N >= 1) {
        a[1] = 1;
    }
    for (std::size_t n = 2; n <= N; ++n) {
        Rational s = 0;
        // the sum is symmetric under k <-> n-k up to the (n-k)/k weight
        for (std::size_t k = 1; k < n; ++k) {
            s += Rational(static_cast<long>(n - k), static_cast<long>(k)) * a[k] * a[n - k];
        }
        a[n] = s / Rational(1 - static_cast<long>(n));
    }
    return a;
}

// Partial sums of sign_n b_n / n^s, n = 1..N, at the precision of b.
std::vector<BigFloat> partial_sums(const BCoeffs &b, int s, bool alternating)
{
    std::vector<BigFloat> ps;
    ps.reserve(b.N());
    BigFloat acc(0L, b.prec);
    for (std::size_t n = 1; n <= b.N(); ++n) {
        BigFloat t = b.b[n];
        for (int j = 0; j < s; ++j) {
            t /= static_cast<long>(n);
        }
        if (alternating && n % 2 == 0) {
            acc -= t;
        } else {
            acc += t;
        }
        ps.push_back(acc);
    }
    return ps;
}

// int_N^inf t^{-s-1} (ln t)^{-j} dt = s^{j-1} Gamma(1-j, s ln N), j = 0, 1, 2.
BigFloat log_power_tail(long N, int s, int j, long prec)
{
    BigFloat x = log(BigFloat(N, prec)) * static_cast<long>(s);
    BigFloat g(prec);
    BigFloat ex = exp(-x);
    switch (j) {
    case 0:
        g = ex;
        break;
    case 1:
        g = num::e1(x);
        break;
    default:
        g = ex / x - num::e1(x);
        break;
    }
    for (int k = 1; k < j; ++k) {
        g *= static_cast<long>(s);
    }
    if (j == 0) {
        g /= static_cast<long>(s);
    }
    return g;
}

// Solve the small dense system A c = y by Gaussian elimination.
std::vector<BigFloat> solve(std::vector<std::vector<BigFloat>> A, std::vector<BigFloat> y)
{
    std::size_t m = y.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t r = i + 1; r < m; ++r) {
            BigFloat f = A[r][i] / A[i][i];
            for (std::size_t c = i; c < m; ++c) {
                A[r][c] -= f * A[i][c];
            }
            y[r] -= f * y[i];
        }
    }
    std::vector<BigFloat> x(m, BigFloat(0L, y[0].prec()));
    for (std::size_t i = m; i-- > 0;) {
        BigFloat acc = y[i];
        for (std::size_t c = i + 1; c < m; ++c) {
            acc -= A[i][c] * x[c];
        }
        x[i] = acc / A[i][i];
    }
    return x;
}

// Model tail for coefficients c (in 1/ln t), including the Euler-Maclaurin
// boundary terms -g(N)/2 - g'(N)/12 with g(t) = f(t)/t^{s+1}.
BigFloat model_tail(const std::vector<BigFloat> &c, long N, int s, long prec)
{
    BigFloat integral(0L, prec);
    for (std::size_t j = 0; j < c.size(); ++j) {
        integral += c[j] * log_power_tail(N, s, static_cast<int>(j), prec);
    }
    BigFloat t(N, prec);
    BigFloat L = log(t);
    BigFloat f(0L, prec), fp(0L, prec);
    BigFloat Lj(1L, prec);
    for (std::size_t j = 0; j < c.size(); ++j) {
        f += c[j] / Lj;
        fp -= c[j] * static_cast<long>(j) / (Lj * L * t);
        Lj *= L;
    }
    BigFloat ts = pow(t, static_cast<long>(s + 1));
    BigFloat g = f / ts;
    BigFloat gp = fp / ts - f * static_cast<long>(s + 1) / (ts * t);
    return integral - g / 2L - gp / 12L;
}

std::vector<BigFloat> fit(const BCoeffs &b, const std::vector<std::size_t> &pts)
{
    long prec = b.prec;
    std::vector<std::vector<BigFloat>> A;
    std::vector<BigFloat> y;
    for (auto p : pts) {
        BigFloat L = log(BigFloat(static_cast<long>(p), prec));
        std::vector<BigFloat> row;
        BigFloat Lj(1L, prec);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            row.push_back(1L / Lj);
            Lj *= L;
        }
        A.push_back(row);
        y.push_back(b.b[p] * static_cast<long>(p));
    }
    return solve(A, y);
}

} // namespace

Rational a_composition_formula(std::size_t n)
{
    if (n == 0) {
        throw usage_error("a_n is defined for n >= 1");
    }
    std::size_t m = n - 1;
    std::vector<Rational> w(m + 1);
    for (std::size_t j = 1; j <= m; ++j) {
        w[j] = Rational(1) / (Rational(static_cast<long>(j)) * Rational(factorial(static_cast<unsigned>(j))));
    }
    // comp[t] = sum over compositions of t into k parts of prod w
    std::vector<Rational> comp(m + 1);
    comp[0] = 1;
    Rational total = m == 0 ? Rational(1) : Rational(0);
    Rational nk = 1;  // (-n)^k / k!
    for (std::size_t k = 1; k <= m; ++k) {
        std::vector<Rational> next(m + 1);
        for (std::size_t t = 1; t <= m; ++t) {
            for (std::size_t j = 1; j <= t; ++j) {
                next[t] += comp[t - j] * w[j];
            }
        }
        comp = std::move(next);
        nk *= Rational(-static_cast<long>(n), static_cast<long>(k));
        total += nk * comp[m];
    }
    return total / Rational(static_cast<long>(n));
}

RSeries psi_series(std::size_t N)
{
    std::vector<Rational> c(N + 1);
    for (std::size_t k = 1; k <= N; ++k) {
        c[k] = Rational(1) / (Rational(static_cast<long>(k)) * Rational(factorial(static_cast<unsigned>(k))));
    }
    RSeries integral(std::move(c));
    RSeries f = shift_up(exp(integral.truncate(N - 1)));
    return comp_inverse(f);
}

std::vector<Rational> a_coeffs(std::size_t N)
{
    if (N < 1) {
        throw usage_error("a_coeffs needs N >= 1");
    }
    std::vector<Rational> a = recurrence(N);
    std::size_t M = std::min(N, cross_check_upto);
    RSeries psi = psi_series(std::max<std::size_t>(M, 1));
    for (std::size_t n = 1; n <= M; ++n) {
        if (a[n] != a_composition_formula(n)) {
            throw consistency_error("a_" + std::to_string(n) + ": recurrence and composition formula disagree");
        }
        if (a[n] != psi[n]) {
            throw consistency_error("a_" + std::to_string(n) + ": recurrence and Lagrange inversion disagree");
        }
    }
    return a;
}

std::optional<std::size_t> exp_psi_identity(const std::vector<Rational> &a)
{
    if (a.size() < 2) {
        return std::nullopt;
    }
    std::vector<Rational> c = a;
    c[0] = 0;
    RSeries e = exp(RSeries(c));
    for (std::size_t n = 1; n < a.size(); ++n) {
        if (e[n] != a[n] / Rational(static_cast<long>(n))) {
            return n;
        }
    }
    return std::nullopt;
}

BCoeffs b_coeffs(std::size_t N, long prec, std::size_t exact_upto)
{
    if (N < 1) {
        throw usage_error("b_coeffs needs N >= 1");
    }
    if (prec < 32) {
        throw usage_error("b_coeffs precision must be at least 32 bits");
    }
    long w = prec + 32;
    BCoeffs out;
    out.prec = prec;
    out.exact_upto = std::min(N, exact_upto);
    BigFloat emg = exp(-num::euler_gamma(w));

    std::vector<BigFloat> b(N + 1, BigFloat(0L, w));
    std::vector<Rational> a = out.exact_upto >= 1 ? a_coeffs(out.exact_upto) : std::vector<Rational>{};
    BigFloat ladder = emg;
    for (std::size_t n = 1; n <= out.exact_upto; ++n) {
        Rational abs_a = abs(a[n]);
        if ((n % 2 == 1) != (a[n] > 0)) {
            throw consistency_error("sign pattern of a_n broken at n = " + std::to_string(n));
        }
        b[n] = BigFloat(abs_a, w) * ladder;
        ladder *= emg;
    }

    // c_k = b_k / k, d_j = j b_j; (n-1) b_n = sum_{k=1}^{n-1} c_k d_{n-k}
    auto run = [w](std::vector<BigFloat> &bb, std::size_t from, std::size_t to) {
        std::vector<BigFloat> c(to + 1, BigFloat(0L, w)), d(to + 1, BigFloat(0L, w));
        for (std::size_t k = 1; k < from; ++k) {
            c[k] = bb[k] / static_cast<long>(k);
            d[k] = bb[k] * static_cast<long>(k);
        }
        BigFloat acc(0L, w);
        for (std::size_t n = from; n <= to; ++n) {
            mpfr_set_zero(acc.raw(), 1);
            for (std::size_t k = 1; k < n; ++k) {
                mpfr_fma(acc.raw(), c[k].raw(), d[n - k].raw(), acc.raw(), MPFR_RNDN);
            }
            bb[n] = acc / static_cast<long>(n - 1);
            c[n] = bb[n] / static_cast<long>(n);
            d[n] = bb[n] * static_cast<long>(n);
        }
    };

    // pure float route on the overlap
    if (out.exact_upto >= 2) {
        std::vector<BigFloat> f(out.exact_upto + 1, BigFloat(0L, w));
        f[1] = emg;
        run(f, 2, out.exact_upto);
        double worst = 0;
        for (std::size_t n = 1; n <= out.exact_upto; ++n) {
            double rel = abs((f[n] - b[n]) / b[n]).to_double();
            worst = std::max(worst, rel);
            double allowed = std::ldexp(1.0, static_cast<int>(-prec + 8)) * static_cast<double>(n);
            if (rel > allowed) {
                throw consistency_error("b_" + std::to_string(n) + ": exact and float recurrences disagree");
            }
        }
        out.overlap_rel_diff = worst;
    }
    if (out.exact_upto == 0) {
        b[1] = emg;
        out.exact_upto = 0;
        run(b, 2, N);
    } else if (N > out.exact_upto) {
        run(b, out.exact_upto + 1, N);
    }
    out.b.reserve(N + 1);
    for (auto &x : b) {
        out.b.push_back(x.with_prec(prec));
    }
    return out;
}

std::optional<Which> parse_which(const std::string &name)
{
    if (name == "lnmu") {
        return Which::ln_mu;
    }
    if (name == "mu1") {
        return Which::mu_minus_one;
    }
    if (name == "one") {
        return Which::one;
    }
    if (name == "ln2") {
        return Which::ln2;
    }
    if (name == "pi2") {
        return Which::pi2;
    }
    return std::nullopt;
}

std::string which_name(Which w)
{
    switch (w) {
    case Which::ln_mu:
        return "lnmu";
    case Which::mu_minus_one:
        return "mu1";
    case Which::one:
        return "one";
    case Which::ln2:
        return "ln2";
    case Which::pi2:
        return "pi2";
    }
    return "?";
}

TailEstimate b_tail(const BCoeffs &b, int s)
{
    std::size_t N = b.N();
    if (N < 16) {
        throw usage_error("tail model needs at least 16 terms");
    }
    long prec = b.prec;
    auto q = fit(b, {N / 4, N / 2, N});
    auto l = fit(b, {N / 2, N});
    BigFloat tq = model_tail(q, static_cast<long>(N), s, prec);
    BigFloat tl = model_tail(l, static_cast<long>(N), s, prec);
    return {tq, abs(tq - tl)};
}

BigFloat square_series_rhs(long prec, BigFloat *aux_out)
{
    long w = prec + 16;
    BigFloat aux(1L, w);
    BigFloat q(1L, w);
    BigFloat eps = epsilon(w + 4, w);
    for (long n = 1;; ++n) {
        q /= 4L;
        BigFloat t = q / ((2 * n + 1) * (2 * n + 1));
        aux += t;
        if (t < eps) {
            break;
        }
    }
    BigFloat p = num::pi(w);
    BigFloat rhs = p * p / 6L - aux;
    if (aux_out) {
        *aux_out = aux.with_prec(prec);
    }
    return rhs.with_prec(prec);
}

SeriesValue series_theorem21(Which which, const BCoeffs &b)
{
    long prec = b.prec;
    SeriesValue v;
    v.which = which;
    v.terms = b.N();
    switch (which) {
    case Which::one:
    case Which::ln2:
    case Which::pi2: {
        int s = which == Which::one ? 1 : which == Which::ln2 ? 2 : 3;
        auto ps = partial_sums(b, s, false);
        v.partial = ps.back();
        TailEstimate t = b_tail(b, s);
        v.value = v.partial + t.value;
        v.error = t.error;
        if (which == Which::one) {
            v.target = BigFloat(1L, prec);
        } else if (which == Which::ln2) {
            v.target = num::ln2(prec);
        } else {
            v.target = square_series_rhs(prec);
        }
        break;
    }
    case Which::mu_minus_one: {
        auto ps = partial_sums(b, 1, true);
        v.partial = ps.back();
        auto acc = num::euler_average(ps, std::min<std::size_t>(48, ps.size() - 1));
        v.value = acc.value;
        v.error = acc.error;
        v.target = num::mu_root(prec) - 1L;
        break;
    }
    case Which::ln_mu: {
        auto ps = partial_sums(b, 0, true);
        v.partial = ps.back();
        auto e = num::euler_average(ps, std::min<std::size_t>(48, ps.size() - 1));
        auto c = num::cesaro_mean(ps);
        v.euler = e.value;
        v.cesaro = c.value;
        v.value = e.value;
        v.error = abs(e.value - c.value);
        v.target = log(num::mu_root(prec));
        v.asserted = false;
        break;
    }
    }
    return v;
}

SquareSeries series_remark24(const BCoeffs &b)
{
    SquareSeries r;
    r.lhs = partial_sums(b, 3, false).back();
    r.tail = b_tail(b, 3).value;
    r.rhs = square_series_rhs(b.prec, &r.aux);
    return r;
}

HypothesisScan hypothesis_scan(const BCoeffs &b)
{
    HypothesisScan h;
    std::size_t N = b.N();
    BigFloat weighted(0L, b.prec);
    for (std::size_t n = 1; n <= N; ++n) {
        weighted += b.b[n] * static_cast<long>(n);
        if (n < N) {
            if (b.b[n] <= b.b[n + 1]) {
                ++h.monotone_violations;
            }
            if (b.b[n] * static_cast<long>(n) >= b.b[n + 1] * static_cast<long>(n + 1)) {
                ++h.nb_increase_violations;
            }
        }
    }
    h.cesaro_mean = (weighted / static_cast<long>(N)).to_double();
    h.nb_last = (b.b[N] * static_cast<long>(N)).to_double();
    h.b_last = b.b[N].to_double();
    for (std::size_t n = 1; n <= N; n *= 10) {
        h.nb_trend.emplace_back(n, (b.b[n] * static_cast<long>(n)).to_double());
    }
    if (h.nb_trend.back().first != N) {
        h.nb_trend.emplace_back(N, h.nb_last);
    }
    return h;
}

MellinCheck mellin_check(int s, const BCoeffs &b)
{
    if (s != 1 && s != 2) {
        throw usage_error("mellin_check supports s = 1 and s = 2");
    }
    long prec = b.prec;
    MellinCheck m;
    m.s = s;
    BigFloat gam = gamma_fn(BigFloat(static_cast<long>(s + 1), prec));

    // positive side: partial sum plus modelled tail
    BigFloat pos = partial_sums(b, s, false).back();
    TailEstimate t = b_tail(b, s);
    m.positive.series = gam * (pos + t.value);
    m.positive.series_error = gam * t.error;

    // alternating side: Euler averaged partial sums
    auto alt = partial_sums(b, s, true);
    auto acc = num::euler_average(alt, std::min<std::size_t>(48, alt.size() - 1));
    m.alternating.series = gam * acc.value;
    m.alternating.series_error = gam * acc.error;

    long qp = std::min<long>(prec, 128);
    num::QuadOptions opt;
    opt.prec = qp;
    opt.rel_tol = 1e-20;
    opt.max_level = 12;
    auto powered = [s](const BigFloat &v) { return s == 1 ? v : v * v; };
    auto qpos = num::quad_to_infinity(
        [&](const BigFloat &x, const BigFloat &, const BigFloat &) {
            if (x.is_zero()) {
                return BigFloat(0L, qp);
            }
            return powered(num::e1(x));
        },
        BigFloat(0L, qp), opt);
    m.positive.integral = qpos.value.with_prec(prec);
    m.positive.integral_error = qpos.error.with_prec(prec);

    BigFloat lnmu = log(num::mu_root(qp));
    auto qalt = num::quad(
        [&](const BigFloat &x, const BigFloat &, const BigFloat &) {
            if (x.is_zero()) {
                return BigFloat(0L, qp);
            }
            return powered(-num::ei(x));
        },
        BigFloat(0L, qp), lnmu, opt);
    m.alternating.integral = qalt.value.with_prec(prec);
    m.alternating.integral_error = qalt.error.with_prec(prec);
    return m;
}

void write_csv(std::ostream &out, const std::vector<Rational> &a, const BCoeffs &b, int digits)
{
    out << "n,a_n,b_n\n";
    for (std::size_t n = 1; n <= b.N(); ++n) {
        out << n << ',';
        if (n < a.size()) {
            out << to_string(a[n]);
        }
        out << ',' << b.b[n].to_string(digits) << '\n';
    }
}

} // namespace dlog::soldner
