#include <dlog/m_function.hpp>

#include <cmath>

#include <dlog/generators.hpp>
#include <dlog/numerics.hpp>

namespace dlog::mfun
{

namespace
{

constexpr unsigned exact_cutoff = 64;

// n^n e^{-n} / n! by Stirling's series.
long double stirling_ratio(long double n)
{
    long double inv = 1.0L / n;
    long double inv2 = inv * inv;
    long double corr = inv * (1.0L / 12 - inv2 * (1.0L / 360 - inv2 * (1.0L / 1260 - inv2 / 1680)));
    return std::exp(-corr) / std::sqrt(2.0L * 3.14159265358979323846264338327950288L * n);
}

// Ramanujan's theta(n): e^n/2 = sum_{k<n} n^k/k! + theta(n) n^n/n!.
long double theta(long double n)
{
    long double i = 1.0L / n;
    return 1.0L / 3 +
           i * (4.0L / 135 + i * (-8.0L / 2835 + i * (-16.0L / 8505 + i * (8992.0L / 12629925 + i * (334144.0L / 492567075)))));
}

// Bound on the truncation of theta above; the omitted term is about 4.8e-4/n^6 for n >= 65.
long double theta_error(long double n) { return 1e-3L / std::pow(n, 6.0L); }

BigFloat from_long_double(long double v, long prec)
{
    double hi = static_cast<double>(v);
    double lo = static_cast<double>(v - hi);
    return BigFloat(hi, prec) + BigFloat(lo, prec);
}

// e^{-n} P(n) - 1/2
long double excess(long double n) { return (1.0L - theta(n)) * stirling_ratio(n); }

BigFloat exact_term(unsigned n, long prec)
{
    return BigFloat(partial_exp_sum(n), prec) * exp(BigFloat(-static_cast<long>(n), prec));
}

// -t - ln(1-t) without cancellation at either end.
BigFloat g_of(const BigFloat &t, const BigFloat &gap_right)
{
    long prec = t.prec();
    if (t < 0.5) {
        BigFloat eps = epsilon(prec + 8, prec);
        BigFloat t2 = t * t;
        BigFloat pw = t2;
        BigFloat acc = t2 / 2L;
        for (long k = 3;; ++k) {
            pw *= t;
            BigFloat term = pw / k;
            acc += term;
            if (term < eps * acc) {
                break;
            }
        }
        return acc;
    }
    return -t - log(gap_right);
}

// sum_{n>N} n^{-a} by Euler-Maclaurin.
BigFloat zeta_tail(const BigFloat &a, std::size_t N)
{
    long prec = a.prec();
    BigFloat n(static_cast<long>(N), prec);
    BigFloat p = pow(n, -a);
    return n * p / (a - 1L) - p / 2L + a * p / (12L * n);
}

// A_k(s) numerically for k = 0..K by the power recurrence
// k g_0 h_k = sum_{j=1}^k ((s+1) j - k) g_j h_{k-j}, g_j = 2/(j+2).
std::vector<BigFloat> a_numeric(const BigFloat &s, std::size_t K)
{
    long prec = s.prec();
    std::vector<BigFloat> g(K + 1, BigFloat(prec)), h(K + 1, BigFloat(0L, prec));
    for (std::size_t j = 0; j <= K; ++j) {
        g[j] = BigFloat(2L, prec) / static_cast<long>(j + 2);
    }
    h[0] = BigFloat(1L, prec);
    BigFloat s1 = s + 1L;
    for (std::size_t k = 1; k <= K; ++k) {
        BigFloat acc(0L, prec);
        for (std::size_t j = 1; j <= k; ++j) {
            acc += (s1 * static_cast<long>(j) - static_cast<long>(k)) * g[j] * h[k - j];
        }
        h[k] = acc / static_cast<long>(k);
    }
    return h;
}

bool twice_is_small_integer(const BigFloat &s)
{
    BigFloat t = s * 2L;
    return mpfr_integer_p(t.raw()) && !(t > 2.0);
}

// Gamma(3/2 - N) / sqrt(pi)
Rational half_gamma_ratio(unsigned N)
{
    if (N <= 1) {
        unsigned m = 1 - N;
        return Rational(factorial(2 * m)) / (pow(Rational(4), long(m)) * Rational(factorial(m)));
    }
    unsigned j = N - 1;
    return pow(Rational(-4), long(j)) * Rational(factorial(j)) / Rational(factorial(2 * j));
}

} // namespace

Rational partial_exp_sum(unsigned n)
{
    Rational acc = 0;
    Rational term = 1;
    for (unsigned k = 0; k <= n; ++k) {
        acc += term;
        term *= Rational(static_cast<long>(n), static_cast<long>(k + 1));
        term.canonicalize();
    }
    return acc;
}

Report genfunc_checks(std::size_t N)
{
    Report r;
    RSeries W = comp_inverse(RSeries::x(N) * gen::exp_series(N));
    RSeries Wm = rescale(W, -1);
    RSeries one_plus = RSeries::one(N) + Wm;
    RSeries rhs2 = RSeries::one(N) / (one_plus * one_plus);
    RSeries rhs3 = -Wm - log(one_plus);
    std::vector<Rational> lhs2(N + 1), lhs3(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        lhs2[n] = n == 0 ? Rational(1) : partial_exp_sum(static_cast<unsigned>(n));
        if (n > 0) {
            lhs3[n] = lhs2[n] / Rational(static_cast<long>(n));
        }
    }
    r.add("sum x^n P(n) = 1/(1+W(-x))^2", RSeries(lhs2) == rhs2);
    r.add("sum x^n P(n)/n = -W(-x) - ln(1+W(-x))", RSeries(lhs3) == rhs3);
    return r;
}

RSeries a_base_series(std::size_t K)
{
    std::vector<Rational> c(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        c[k] = Rational(2, static_cast<long>(k + 2));
        c[k].canonicalize();
    }
    return RSeries(std::move(c));
}

std::vector<AlphaPoly> a_polys(std::size_t K)
{
    AlphaPoly s = AlphaPoly::variable("s");
    PSeries f = lift(a_base_series(K), "s");
    PSeries p = pow_scalar(f, s);
    std::vector<AlphaPoly> out;
    for (std::size_t k = 0; k <= K; ++k) {
        out.push_back(p[k].with_var("s"));
    }
    return out;
}

SpecialValues m_special_values(unsigned N)
{
    if (N > max_special_n) {
        throw usage_error("special values limited to N <= " + std::to_string(max_special_n));
    }
    auto A = a_polys(2 * N + 2);
    SpecialValues v;
    v.m0 = A[2].derivative()(Rational(0)) - A[0](Rational(0));
    v.half_m0_pipeline = A[0](Rational(0)) / Rational(-2) + A[2].divide_by_var()(Rational(0)) / Rational(2);
    if (v.half_m0_pipeline * 2 != v.m0) {
        throw consistency_error("M(0): closed form and continuation pipeline disagree");
    }
    for (unsigned n = 1; n <= N; ++n) {
        Rational sign = n % 2 == 1 ? 1 : -1;
        v.m_neg.push_back(sign * pow(Rational(2), long(n)) * Rational(factorial(n - 1)) *
                          A[2 * n + 2](Rational(-static_cast<long>(n))));
    }
    for (unsigned n = 0; n <= N; ++n) {
        Rational sigma = Rational(1, 2) - Rational(static_cast<long>(n));
        Rational a = A[2 * n + 1](sigma);
        Rational sign = n % 2 == 1 ? 1 : -1;
        Rational closed = sign * Rational(factorial(2 * n)) / (pow(Rational(2), long(n)) * Rational(factorial(n))) * a /
                          Rational(2 * static_cast<long>(n) - 1);
        Rational derived = pow(Rational(2), long(n) - 1) * a / half_gamma_ratio(n);
        if (closed != derived) {
            throw consistency_error("residue cofactor mismatch at N = " + std::to_string(n));
        }
        v.residue.push_back(closed);
        if (closed == 0) {
            v.residue_zeros.push_back(n);
        }
    }
    return v;
}

SeriesM m_series(const BigFloat &s, std::size_t terms)
{
    if (!(s > 1.0)) {
        throw domain_error("the defining series of M needs s > 1");
    }
    if (terms < 2) {
        throw usage_error("m_series needs at least 2 terms");
    }
    long prec = s.prec();
    BigFloat acc(0L, prec);
    std::size_t n_exact = std::min<std::size_t>(terms, exact_cutoff);
    for (unsigned n = 1; n <= n_exact; ++n) {
        acc += exact_term(n, prec) / pow(BigFloat(static_cast<long>(n), prec), s);
    }
    long double sd = mpfr_get_ld(s.raw(), MPFR_RNDN);
    long double sum = 0, comp = 0, theta_err = 0;
    for (std::size_t n = terms; n > n_exact; --n) {
        long double nn = static_cast<long double>(n);
        long double w = std::pow(nn, -sd);
        long double term = (0.5L + excess(nn)) * w;
        theta_err += theta_error(nn) * stirling_ratio(nn) * w;
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    SeriesM out;
    out.partial = acc + from_long_double(sum, prec);
    BigFloat c1 = BigFloat(2L, prec) / 3L / sqrt(2L * num::pi(prec));
    BigFloat c2 = -(BigFloat(4L, prec) / 135L + BigFloat(1L, prec) / 18L) / sqrt(2L * num::pi(prec));
    BigFloat half(1L, prec);
    half /= 2L;
    // n^{-5/2} coefficient of e^{-n} P(n) - 1/2
    BigFloat c3 = (BigFloat(Rational(1, 432), prec) + BigFloat(Rational(1, 405), prec) + BigFloat(Rational(8, 2835), prec)) /
                  sqrt(2L * num::pi(prec));
    out.tail = zeta_tail(s, terms) / 2L + c1 * zeta_tail(s + half, terms) + c2 * zeta_tail(s + 1L + half, terms);
    out.error = abs(c3 * zeta_tail(s + 2L + half, terms)) * 2L + epsilon(60, prec) * out.partial +
                from_long_double(theta_err, prec);
    out.value = out.partial + out.tail;
    return out;
}

IntegralM m_integral_log(const BigFloat &s)
{
    if (!(s > 1.0)) {
        throw domain_error("first integral used for s > 1 only");
    }
    long prec = s.prec();
    num::QuadOptions opt;
    opt.prec = prec;
    opt.rel_tol = std::max(1e-30, std::ldexp(1.0, static_cast<int>(-prec + 24)));
    opt.max_level = 12;
    BigFloat sm1 = s - 1L;
    auto q = num::quad(
        [&](const BigFloat &t, const BigFloat &, const BigFloat &gr) {
            BigFloat g = g_of(t, gr);
            return pow(g, sm1) * (1L + 1L / t);
        },
        BigFloat(0L, prec), BigFloat(1L, prec), opt);
    BigFloat gs = gamma_fn(s);
    return {q.value / gs, q.error / gs};
}

IntegralM m_integral_parts(const BigFloat &s)
{
    if (!(s > 1.0)) {
        throw domain_error("second integral used for s > 1 only");
    }
    long prec = s.prec();
    num::QuadOptions opt;
    opt.prec = prec;
    opt.rel_tol = std::max(1e-30, std::ldexp(1.0, static_cast<int>(-prec + 24)));
    opt.max_level = 12;
    auto q = num::quad(
        [&](const BigFloat &t, const BigFloat &, const BigFloat &gr) {
            BigFloat g = g_of(t, gr);
            return pow(g, s) / (t * t * t);
        },
        BigFloat(0L, prec), BigFloat(1L, prec), opt);
    BigFloat f = 2L / (s * gamma_fn(s));
    return {q.value * f, q.error * f};
}

MNumeric m_numeric(const BigFloat &s, std::size_t terms)
{
    return {m_series(s, terms), m_integral_log(s), m_integral_parts(s)};
}

BigFloat m_continued(const BigFloat &s_in)
{
    if (twice_is_small_integer(s_in)) {
        throw singularity_error("m_continued: s is a pole of the split representation");
    }
    long prec = s_in.prec();
    long w = prec + 64;
    BigFloat s = s_in.with_prec(w);
    BigFloat expo = s * 2L - 2L;  // 2s - 2

    std::size_t K = static_cast<std::size_t>(w) + 40 + static_cast<std::size_t>(std::fabs(s.to_double())) * 8;
    auto A = a_numeric(s, K);
    BigFloat series(0L, w);
    BigFloat half(1L, w);
    half /= 2L;
    BigFloat hp = pow(half, expo);  // (1/2)^{2s-2+k}
    for (std::size_t k = 0; k <= K; ++k) {
        series += A[k] * hp / (expo + static_cast<long>(k));
        hp /= 2L;
    }

    num::QuadOptions opt;
    opt.prec = w;
    opt.rel_tol = std::ldexp(1.0, static_cast<int>(-std::min<long>(prec, 900)));
    opt.max_level = 14;
    BigFloat e3 = s * 2L - 3L;
    auto q = num::quad(
        [&](const BigFloat &t, const BigFloat &, const BigFloat &gr) {
            if (gr.is_zero()) {
                return BigFloat(0L, w);
            }
            BigFloat F = g_of(t, gr) * 2L / (t * t);
            return pow(t, e3) * pow(F, s);
        },
        half, BigFloat(1L, w), opt);
    BigFloat total = series + q.value;
    BigFloat m = total * pow(BigFloat(2L, w), 1L - s) / gamma_fn(s + 1L);
    return m.with_prec(prec);
}

BigFloat edge_function(const BigFloat &eps)
{
    long prec = eps.prec();
    if (eps.is_zero() || eps.sign() < 0 || !(eps < 1.0)) {
        if (eps == BigFloat(1L, prec)) {
            return BigFloat(0L, prec);
        }
        throw domain_error("edge_function needs 0 < eps <= 1");
    }
    long w = prec + 64;
    BigFloat e = exp(BigFloat(1L, w));
    BigFloat x = 1L - eps.with_prec(w);
    BigFloat W = num::lambert_w(-x / e);
    BigFloat v = -W - log1p(W) + log(eps.with_prec(w)) / 2L;
    return v.with_prec(prec);
}

EdgeLimit remark11_limit(long prec, std::size_t direct_terms)
{
    EdgeLimit r;
    std::vector<BigFloat> h, v;
    BigFloat eps = BigFloat::parse("1e-8", prec);
    for (int j = 0; j < 8; ++j) {
        h.push_back(sqrt(eps));
        v.push_back(edge_function(eps));
        eps /= 4L;
    }
    auto acc = num::richardson(h, v);
    r.extrapolated = acc.value;
    r.extrapolation_error = acc.error;
    r.at_smallest_eps = v.back();
    r.target = 1L - num::ln2(prec) / 2L;

    // sum (1 - theta(n)) n^n e^{-n} / (n n!)
    BigFloat acc_exact(0L, prec);
    std::size_t n_exact = std::min<std::size_t>(direct_terms, exact_cutoff);
    for (unsigned n = 1; n <= n_exact; ++n) {
        BigFloat t = exact_term(n, prec);
        acc_exact += (t - BigFloat(1L, prec) / 2L) / static_cast<long>(n);
    }
    long double sum = 0, comp = 0;
    for (std::size_t n = direct_terms; n > n_exact; --n) {
        long double nn = static_cast<long double>(n);
        long double y = excess(nn) / nn - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    r.direct_terms = direct_terms;
    r.direct_partial = acc_exact + from_long_double(sum, prec);
    BigFloat c1 = BigFloat(2L, prec) / 3L / sqrt(2L * num::pi(prec));
    r.direct_tail = c1 * 2L / sqrt(BigFloat(static_cast<long>(direct_terms), prec));
    return r;
}

Trend17 trend_17(long s, const std::vector<std::size_t> &Ks, long prec)
{
    if (s < 2) {
        throw usage_error("trend_17 uses integer s >= 2");
    }
    std::size_t Kmax = 0;
    for (auto k : Ks) {
        Kmax = std::max(Kmax, k);
    }
    RSeries p = pow_int(a_base_series(Kmax), static_cast<unsigned>(s));
    Trend17 t;
    Rational acc = 0;
    std::size_t next = 0;
    std::vector<std::size_t> sorted = Ks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k <= Kmax; ++k) {
        acc += p[k] / Rational(2 * s - 2 + static_cast<long>(k));
        while (next < sorted.size() && sorted[next] == k) {
            t.partial.emplace_back(k, BigFloat(acc, prec));
            ++next;
        }
    }
    BigFloat sv(s, prec);
    t.target = pow(BigFloat(2L, prec), s - 1) * gamma_fn(sv + 1L) * m_continued(sv);
    return t;
}

} // namespace dlog::mfun
