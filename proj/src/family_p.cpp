#include <dlog/family_p.hpp>

#include <map>
#include <string>

#include <dlog/generators.hpp>
#include <dlog/numerics.hpp>
#include <dlog/t_chain.hpp>

namespace dlog::family
{

namespace
{

using tchain::t_apply;
using tchain::t_inverse;

std::string tag(const Rational &p) { return "p=" + to_string(p); }

RSeries one(std::size_t N) { return RSeries::one(N); }

// ln(1 + c x)
RSeries log_linear(const Rational &c, std::size_t N) { return rescale(gen::log1p(N), c); }

// (1 + c x)^e
RSeries pow_linear(const Rational &c, const Rational &e, std::size_t N)
{
    RSeries lin = one(N) + gen::identity(N) * c;
    return pow_scalar(lin, e);
}

// x f
RSeries times_x(const RSeries &f) { return shift_up(f).truncate(f.order()); }

void require_nonzero(const Rational &p, const char *who)
{
    if (p == 0) {
        throw domain_error(std::string(who) + ": needs p != 0");
    }
}

AlphaPoly apoly(const Rational &c0, const Rational &c1) { return AlphaPoly(std::vector<Rational>{c0, c1}, "α"); }

PSeries alpha_exp(const RSeries &g)
{
    PSeries lifted = lift(g, "α");
    return exp(scale(lifted, AlphaPoly::variable("α")));
}

// (e^{a g} - 1)/a as a list of polynomials, index = power of x.
std::vector<AlphaPoly> alpha_exp_minus_one_over_alpha(const RSeries &g)
{
    PSeries e = alpha_exp(g);
    std::vector<AlphaPoly> out(e.order() + 1, AlphaPoly(std::vector<Rational>{}, "α"));
    for (std::size_t n = 1; n <= e.order(); ++n) {
        out[n] = e[n].divide_by_var();
    }
    return out;
}

bool same_coeffs(const std::vector<AlphaPoly> &a, const std::vector<AlphaPoly> &b, std::size_t N)
{
    for (std::size_t n = 1; n <= N; ++n) {
        if (a[n] != b[n]) {
            return false;
        }
    }
    return true;
}

BigFloat y_value(const Rational &p, const BigFloat &x)
{
    if (p == 0) {
        return x * exp(-x);
    }
    long prec = x.prec();
    BigFloat pm1(p - 1, prec);
    return (exp(pm1 * x) - exp(-x)) / BigFloat(p, prec);
}

BigFloat dy_value(const Rational &p, const BigFloat &x)
{
    long prec = x.prec();
    if (p == 0) {
        return (1L - x) * exp(-x);
    }
    BigFloat pm1(p - 1, prec);
    return (pm1 * exp(pm1 * x) + exp(-x)) / BigFloat(p, prec);
}

bool close(const BigFloat &a, const BigFloat &b, double tol)
{
    BigFloat scale = abs(b) + BigFloat(1L, a.prec());
    return abs(a - b) <= BigFloat(tol, a.prec()) * scale;
}

} // namespace

PFamily construct(const Rational &p, std::size_t N)
{
    if (N < 2) {
        throw usage_error("family needs order >= 2");
    }
    PFamily f;
    f.p = p;
    f.order = N;
    f.delta = gen::delta(p, N);
    f.y = gen::y_p(p, N);
    f.gamma = comp_inverse(f.y);
    f.omega = comp_inverse(t_apply(f.y));
    f.t_big = t_inverse(f.y);
    f.psi = comp_inverse(f.t_big);
    return f;
}

Report prop41_check(const PFamily &f)
{
    require_nonzero(f.p, "closed forms");
    const Rational &p = f.p;
    const std::size_t N = f.order;
    Report r;
    RSeries want(N);
    std::vector<Rational> w(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        w[n] = pow(p, long(n)) / Rational(long(n)) * gen_binomial(Rational(long(n)) / p, unsigned(n));
    }
    r.add("gamma coefficients " + tag(p), RSeries(w) == f.gamma);

    // a (p x)^n/(a+n) binom((a+n)/p, n); the division by a+n must be exact
    PSeries e = alpha_exp(f.gamma);
    bool ok = e[0] == AlphaPoly::constant(1, "α");
    for (std::size_t n = 1; n <= N && ok; ++n) {
        long nn = long(n);
        AlphaPoly top = apoly(Rational(nn) / p, Rational(1) / p);
        AlphaPoly num = AlphaPoly::variable("α") * gen_binomial(top, unsigned(n)) * pow(p, nn);
        auto [q, rem] = num.divide_linear(Rational(nn));
        ok = rem == 0 && q == e[n];
    }
    r.add("e^{a gamma} coefficients " + tag(p), ok);
    return r;
}

Report prop42_check(const PFamily &f)
{
    const std::size_t N = f.order;
    RSeries want(N);
    if (f.p == 0) {
        RSeries x = gen::identity(N);
        want = x / (one(N) + x);
    } else {
        want = (gen::log1p(N) - log_linear(1 - f.p, N)) * Rational(1 / f.p);
    }
    Report r;
    r.add("omega closed form " + tag(f.p), want == f.omega);
    return r;
}

Report prop43_check(const PFamily &f)
{
    const std::size_t N = f.order;
    RSeries lhs = times_x(exp(f.gamma));
    RSeries inner(N);
    if (f.p == 0) {
        inner = gen::x_exp_neg(N);
    } else {
        inner = times_x(pow_linear(f.p, Rational(-1 / f.p), N));
    }
    Report r;
    r.add("x e^gamma = inverse " + tag(f.p), lhs == comp_inverse(inner));
    return r;
}

Report obs47a_check(const PFamily &f)
{
    const Rational &p = f.p;
    const std::size_t N = f.order;
    Report r;
    if (p != 0 && p != 1) {
        Rational q = p / (p - 1);
        Rational c = 1 - p;
        PFamily g = construct(q, N);
        r.add("y_{p/(p-1)} rescaling " + tag(p), g.y == rescale(f.y, Rational(1 / c)) * c);
        r.add("gamma_{p/(p-1)} rescaling " + tag(p), g.gamma == rescale(f.gamma, Rational(1 / c)) * c);
    }
    r.add("y_{-p} = y_p e^{-px} " + tag(p), gen::y_p(-p, N) == f.y * gen::exp_scaled(-p, N));
    return r;
}

Report observations_check(const PFamily &f, long prec)
{
    const Rational &p = f.p;
    const std::size_t N = f.order;
    Report r;
    RSeries x = gen::identity(N);

    // omega'
    RSeries dom = derivative(f.omega);
    std::size_t M = dom.order();
    RSeries xm = gen::identity(M);
    RSeries chi = (one(M) + xm) * (one(M) + xm * (1 - p));
    r.add("omega' = 1/((1+x)(1+(1-p)x)) " + tag(p), dom == one(M) / chi);

    // exponent p-1 through pow_scalar
    RSeries dy = derivative(f.y);
    RSeries yt = f.y.truncate(M);
    RSeries lhs_pow = (dy + yt) * pow_scalar(RSeries(dy + yt * (1 - p)), Rational(p - 1));
    r.add("(y'+y)(y'+(1-p)y)^(p-1) = 1 " + tag(p), lhs_pow == one(M));

    // omega by quadrature at x = 1/10
    {
        Rational xr(1, 10);
        BigFloat xb(xr, prec);
        num::QuadOptions opt;
        opt.prec = prec;
        opt.rel_tol = 1e-25;
        num::Integrand fn = [&](const BigFloat &t, const BigFloat &, const BigFloat &) {
            BigFloat decay = exp(-(1L + xb) * t);
            if (p == 0) {
                return BigFloat(xb * decay);
            }
            BigFloat pb(p, prec);
            BigFloat pxt = pb * xb * t;
            if (abs(pxt) > 1L) {
                return BigFloat((exp(pxt - (1L + xb) * t) - decay) / (pb * t));
            }
            return BigFloat(decay * expm1(pxt) / (pb * t));
        };
        auto q = num::quad_to_infinity(fn, BigFloat(0L, prec), opt);
        BigFloat closed = p == 0 ? xb / (1L + xb)
                                 : (log1p(xb) - log1p(BigFloat(1 - p, prec) * xb)) / BigFloat(p, prec);
        r.add("omega as Laplace integral " + tag(p), close(q.value, closed, 1e-20));
    }

    // omega o (x gamma'), and x gamma' as an inverse
    RSeries xg = shift_up(derivative(f.gamma));
    r.add("omega(x gamma') = gamma " + tag(p), compose(f.omega, xg) == f.gamma);
    RSeries inner(N);
    if (p == 0) {
        RSeries e = exp(RSeries(-(x / (one(N) + x))));
        inner = x / (one(N) + x) * e;
    } else {
        inner = x * pow_linear(1, Rational(-1 / p), N) * pow_linear(1 - p, Rational((1 - p) / p), N);
    }
    r.add("x gamma' inverse form " + tag(p), xg == comp_inverse(inner));

    // gamma'
    RSeries rhs_dgamma = one(M) / (exp(RSeries(f.gamma * (p - 1))).truncate(M) - xm);
    r.add("gamma' = 1/(e^{(p-1)gamma} - x) " + tag(p), derivative(f.gamma) == rhs_dgamma);

    // addition laws at sample points
    {
        bool ok = true;
        const double pts[][2] = {{0.3, -0.7}, {1.25, 0.5}, {-0.4, -0.9}};
        BigFloat two_minus_p(2 - p, prec), p_minus_one(p - 1, prec);
        for (auto &ab : pts) {
            BigFloat A(ab[0], prec), B(ab[1], prec);
            BigFloat yA = y_value(p, A), yB = y_value(p, B), dA = dy_value(p, A), dB = dy_value(p, B);
            ok = ok && close(y_value(p, A + B), dA * yB + yA * dB + two_minus_p * yA * yB, 1e-30);
            ok = ok && close(dy_value(p, A + B), dA * dB + p_minus_one * yA * yB, 1e-30);
        }
        r.add("addition laws " + tag(p), ok);
    }

    r.merge(obs47a_check(f));
    return r;
}

Report rescaling_check(const PFamily &f)
{
    const Rational &p = f.p;
    const std::size_t N = f.order;
    Report r;
    if (p != 0 && p != 1) {
        Rational q = p / (p - 1);
        Rational c = 1 - p;
        PFamily g = construct(q, N);
        auto resc = [&](const RSeries &s, const Rational &cc) { return RSeries(rescale(s, Rational(1 / cc)) * cc); };
        r.add("T_{p/(p-1)} rescaling " + tag(p), g.t_big == resc(f.t_big, c));
        r.add("psi_{p/(p-1)} rescaling " + tag(p), g.psi == resc(f.psi, c));
        // q/(q-1) = p and 1 - q = 1/(1-p)
        r.add("rescaling involution " + tag(p), resc(resc(f.t_big, c), Rational(1 - q)) == f.t_big);
    }
    RSeries tm = t_inverse(gen::y_p(-p, N));
    r.add("T_{-p} = T_p e^{p(e^x-1)} " + tag(p), tm == f.t_big * exp(RSeries(gen::expm1(N) * p)));
    return r;
}

Report corollary41_check(unsigned n, std::size_t N)
{
    if (n < 1) {
        throw usage_error("corollary needs n >= 1");
    }
    Report r;
    Rational nn{long(n)};
    RSeries lhs1 = rescale(t_inverse(gen::y_p(Rational(1) / nn, N)), nn);
    RSeries sum1(N);
    for (unsigned j = 1; j < n; ++j) {
        sum1 = sum1 + gen::delta(Rational(long(j)), N);
    }
    RSeries rhs1 = gen::delta(1, N) * nn * exp(sum1);
    r.add("T_{1/n}(nx) n=" + std::to_string(n), lhs1 == rhs1);

    Rational m{long(2 * n + 1)};
    RSeries lhs2 = rescale(t_inverse(gen::y_p(Rational(2) / m, N)), m);
    RSeries sum2(N);
    for (unsigned j = 1; j < 2 * n; j += 2) {
        sum2 = sum2 + gen::delta(Rational(long(j)), N) * 2;
    }
    // tanh(x/2) = tanh_{1/2}(x)/2
    RSeries rhs2 = gen::tanh_p(Rational(1, 2), N) * (m) * exp(sum2);
    r.add("T_{2/(2n+1)}((2n+1)x) n=" + std::to_string(n), lhs2 == rhs2);
    return r;
}

Report prop45_check(std::size_t N)
{
    Report r;
    auto psi = [&](const Rational &p) { return comp_inverse(t_inverse(gen::y_p(p, N))); };
    RSeries x = gen::identity(N);
    RSeries W = gen::lambert_w(N);
    r.add("psi_1 = ln(1+x)", psi(1) == gen::log1p(N));
    r.add("psi_-1 = ln(1+W(x))", psi(-1) == compose(gen::log1p(N), W));
    r.add("psi_2 = 2 atanh(x/2)", psi(2) == rescale(gen::atanh(N), Rational(1, 2)) * 2);
    RSeries inner = x / (one(N) + x * Rational(1, 2)) * gen::exp_scaled(2, N);
    r.add("psi_-2 = ln(1 + inverse)", psi(-2) == compose(gen::log1p(N), comp_inverse(inner)));
    r.add("psi_1/2 = 2 ln(1+W(x/2))", psi(Rational(1, 2)) == compose(gen::log1p(N), rescale(W, Rational(1, 2))) * 2);
    return r;
}

Report thm41_check(const Rational &p, std::size_t N)
{
    require_nonzero(p, "composition sum");
    if (N > max_composition_order) {
        throw usage_error("composition sum limited to order " + std::to_string(max_composition_order));
    }
    // S[t][m] = sum over compositions of t into m parts of prod B_q(1/p)/(q q!)
    std::vector<Rational> w(N + 1);
    for (unsigned q = 1; q <= N; ++q) {
        w[q] = bernoulli_poly(q, Rational(1 / p)) / (Rational(long(q)) * Rational(factorial(q)));
    }
    std::vector<std::vector<Rational>> S(N + 1, std::vector<Rational>(N + 1));
    S[0][0] = 1;
    for (std::size_t t = 1; t <= N; ++t) {
        for (std::size_t m = 1; m <= t; ++m) {
            for (std::size_t q = 1; q <= t; ++q) {
                S[t][m] += w[q] * S[t - q][m - 1];
            }
        }
    }
    std::vector<AlphaPoly> rhs(N + 1, AlphaPoly(std::vector<Rational>{}, "α"));
    for (std::size_t n = 1; n <= N; ++n) {
        long nn = long(n);
        for (std::size_t k = 1; k <= n; ++k) {
            Rational inner = 0;
            for (std::size_t m = 0; m < k; ++m) {
                inner += pow(Rational(-nn), long(m)) / Rational(factorial(unsigned(m))) * S[k - 1][m];
            }
            Rational c = pow(p, long(k) - 1) / Rational(factorial(unsigned(n - k))) * inner / Rational(nn);
            rhs[n] += AlphaPoly::monomial(c, n - k, "α");
        }
    }
    PFamily f = construct(p, N);
    Report r;
    r.add("composition sum " + tag(p), same_coeffs(alpha_exp_minus_one_over_alpha(f.psi), rhs, N));
    return r;
}

Report thm43_check(const Rational &p, std::size_t N)
{
    require_nonzero(p, "ln gamma' coefficients");
    RSeries g = comp_inverse(gen::y_p(p, N + 1));
    RSeries lhs = log(derivative(g));
    std::vector<Rational> c(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        long nn = long(n);
        Rational s = 0;
        for (long k = 0; k <= nn; ++k) {
            s += gen_binomial(Rational(nn) / p, unsigned(k)) * pow(p, k) * pow(Rational(1 - p), nn - k);
        }
        c[n] = s / Rational(nn);
    }
    Report r;
    r.add("ln gamma' coefficients " + tag(p), lhs == RSeries(c));
    return r;
}

Report thm45_check(const Rational &p, std::size_t N)
{
    require_nonzero(p, "inverse expansions");
    RSeries y1 = gen::y_p(p, N + 1);
    RSeries y = y1.truncate(N);
    RSeries ty = t_apply(y);
    RSeries t2y = t_apply(ty);
    RSeries yyp = y * derivative(y1);

    const AlphaPoly zero(std::vector<Rational>{}, "α");
    std::vector<std::vector<AlphaPoly>> rhs(4, std::vector<AlphaPoly>(N + 1, zero));
    Rational ip = 1 / p;
    for (std::size_t n = 1; n <= N; ++n) {
        long nn = long(n);
        Rational invn = Rational(1) / Rational(nn);
        // binom((a+n)/p - 1, n-1) p^{n-1}
        rhs[0][n] = gen_binomial(apoly(Rational(nn) * ip - 1, ip), unsigned(n - 1)) * pow(p, nn - 1) * invn;
        for (long k = 0; k < nn; ++k) {
            Rational a1 = Rational(binomial(unsigned(nn), unsigned(k + 1))) * pow(p, k) * pow(Rational(p - 1), nn - 1 - k);
            rhs[1][n] += gen_binomial(apoly(-1, ip), unsigned(k)) * a1 * invn;
            Rational a2 = Rational(binomial(unsigned(2 * nn - k - 2), unsigned(nn - 1))) * pow(p, k) *
                          pow(Rational(1 - p), nn - 1 - k);
            rhs[2][n] += gen_binomial(apoly(Rational(nn - 1), ip), unsigned(k)) * a2 * invn;
            rhs[3][n] += gen_binomial(apoly(Rational(2 * nn) * ip - 1, ip), unsigned(k)) * a2 * invn;
        }
    }
    const RSeries *gs[] = {&y, &ty, &t2y, &yyp};
    const char *names[] = {"y", "Ty", "T^2y", "yy'"};
    Report r;
    for (int i = 0; i < 4; ++i) {
        auto lhs = alpha_exp_minus_one_over_alpha(comp_inverse(*gs[i]));
        r.add(std::string("inverse expansion ") + names[i] + " " + tag(p), same_coeffs(lhs, rhs[i], N));
    }
    return r;
}

Report remark42_check(const Rational &p, std::size_t N)
{
    require_nonzero(p, "nu recurrence");
    PFamily f = construct(p, N);
    PSeries e = alpha_exp(f.psi);
    AlphaPoly a = AlphaPoly::variable("α");
    bool ok = true;
    for (std::size_t n = 0; n <= N && ok; ++n) {
        AlphaPoly nu = e[n] * Rational(factorial(unsigned(n)));
        AlphaPoly lhs = a * (nu.shift(p - 1) - nu.shift(Rational(-1))) / p;
        ok = lhs == nu * Rational(long(n));
    }
    Report r;
    r.add("nu recurrence " + tag(p), ok);
    return r;
}

Report t2_factor_check(const Rational &p, std::size_t N)
{
    RSeries y1 = gen::y_p(p, N + 1);
    RSeries y = y1.truncate(N);
    RSeries t2 = t_apply(t_apply(y));
    Report r;
    r.add("T^2 y = Delta_p(1 - Delta_-p) " + tag(p), t2 == gen::delta(p, N) * (one(N) - gen::delta(-p, N)));
    r.add("T^2 y = y y' e^{(2-p)x} " + tag(p), t2 == y * derivative(y1) * gen::exp_scaled(2 - p, N));
    return r;
}

Report chain_coherence(const PFamily &f)
{
    Report r;
    r.add("T t_big = y " + tag(f.p), t_apply(f.t_big) == f.y);
    r.add("omega^inv = T y " + tag(f.p), comp_inverse(f.omega) == t_apply(f.y));
    bool inv = comp_inverse(f.gamma) == f.y && comp_inverse(f.psi) == f.t_big &&
               comp_inverse(comp_inverse(f.delta)) == f.delta;
    r.add("double inverse " + tag(f.p), inv);
    return r;
}

Report full_suite(const Rational &p, std::size_t N, long prec)
{
    PFamily f = construct(p, N);
    Report r;
    r.merge(chain_coherence(f));
    r.merge(prop42_check(f));
    r.merge(prop43_check(f));
    r.merge(observations_check(f, prec));
    r.merge(rescaling_check(f));
    r.merge(t2_factor_check(p, N));
    if (p != 0) {
        r.merge(prop41_check(f));
        r.merge(thm41_check(p, std::min(N, std::size_t(9))));
        r.merge(thm43_check(p, N));
        r.merge(thm45_check(p, std::min(N, std::size_t(10))));
        r.merge(remark42_check(p, N));
    }
    return r;
}

LimitResult thm44_limit(const Rational &p, long prec)
{
    if (p < 0 || p >= 1) {
        throw domain_error("pole limit needs p in [0, 1)");
    }
    LimitResult out{BigFloat(prec), BigFloat(prec), BigFloat(prec)};
    BigFloat ln2 = num::ln2(prec);
    BigFloat ustar(prec), pi_p(prec);
    if (p == 0) {
        ustar = BigFloat(1L, prec);
        pi_p = exp(BigFloat(-1L, prec));
        out.target = 1L - ln2 / 2L;
    } else {
        BigFloat pb(p, prec);
        BigFloat l1p = log1p(-pb);
        ustar = -l1p / pb;
        pi_p = exp(l1p * (1L - pb) / pb);
        out.target = (pb - 2L) / (2L * pb) * l1p - ln2 / 2L;
    }
    std::vector<BigFloat> hs, vs;
    BigFloat h(Rational(1, 64), prec);
    for (int i = 0; i < 10; ++i) {
        BigFloat u = ustar - h;
        BigFloat v = -log(dy_value(p, u)) + log(1L - y_value(p, u) / pi_p) / 2L;
        hs.push_back(h);
        vs.push_back(v);
        h /= 2L;
    }
    auto acc = num::richardson(hs, vs);
    out.value = acc.value;
    out.error = acc.error;
    return out;
}

namespace
{

Rational trend_sum(const Rational &p, unsigned n)
{
    Rational s = 0;
    Rational top = Rational(long(n)) / p;
    Rational c = 1;  // binom(top, k)
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            c = c * (top - Rational(long(k) - 1)) / Rational(long(k));
        }
        s += c * pow(p, long(k)) * pow(Rational(1 - p), long(n) - long(k));
    }
    return s;
}

} // namespace

std::vector<TrendPoint> remark43_limit(const Rational &p, const std::vector<unsigned> &ns, long prec)
{
    if (p <= 0 || p >= 1) {
        throw domain_error("M_p trend needs p in (0, 1)");
    }
    BigFloat pb(p, prec);
    BigFloat rate = log1p(-pb) * (1L - pb) / pb;
    std::vector<TrendPoint> out;
    for (unsigned n : ns) {
        BigFloat w = exp(rate * long(n));
        out.push_back({n, w * BigFloat(trend_sum(p, n), prec)});
    }
    return out;
}

BigFloat mp_partial(const Rational &p, const BigFloat &s, unsigned terms)
{
    if (p <= 0 || p > 1) {
        throw domain_error("M_p partial sums need p in (0, 1]");
    }
    long prec = s.prec();
    BigFloat acc(0L, prec);
    BigFloat rate(prec);
    if (p != 1) {
        BigFloat pb(p, prec);
        rate = log1p(-pb) * (1L - pb) / pb;
    }
    for (unsigned n = 1; n <= terms; ++n) {
        BigFloat w = p == 1 ? BigFloat(1L, prec) : exp(rate * long(n));
        BigFloat term = w * BigFloat(trend_sum(p, n), prec) / pow(BigFloat(long(n), prec), s);
        acc += term;
    }
    return acc;
}

} // namespace dlog::family
