#include <dlog/t_chain.hpp>

#include <string>

#include <dlog/generators.hpp>

namespace dlog::tchain
{

void require_normalized(const RSeries &f, const char *who)
{
    if (f.order() < 1 || f[0] != 0 || f[1] != 1) {
        throw domain_error(std::string(who) + ": series must be x + O(x^2)");
    }
}

RSeries t_apply(const RSeries &f)
{
    require_normalized(f, "t_apply");
    // f/f' = x * (f/x) / f', both factors known to order N-1
    return shift_up(shift_down(f) / derivative(f));
}

RSeries t_inverse(const RSeries &f)
{
    require_normalized(f, "t_inverse");
    if (f.order() == 1) {
        return f;
    }
    RSeries x_over_f = RSeries::one(f.order() - 1) / shift_down(f);
    RSeries integrand = shift_down(x_over_f - RSeries::one(f.order() - 1));
    return shift_up(exp(integrate(integrand)));
}

RSeries t_power(const RSeries &f, int k)
{
    if (k > max_chain_power || k < -max_chain_power) {
        throw usage_error("chain power limited to |k| <= " + std::to_string(max_chain_power));
    }
    RSeries g = f;
    for (int i = 0; i < k; ++i) {
        g = t_apply(g);
    }
    for (int i = 0; i > k; --i) {
        g = t_inverse(g);
    }
    return g;
}

Chain chain(const RSeries &f, int k, std::size_t N)
{
    if (k > max_chain_power || k < -max_chain_power) {
        throw usage_error("chain power limited to |k| <= " + std::to_string(max_chain_power));
    }
    if (f.order() < N) {
        throw usage_error("seed order below requested chain order");
    }
    Chain c;
    c.links.push_back(f.truncate(N));
    c.powers.push_back(0);
    require_normalized(c.links.back(), "chain");
    int step = k >= 0 ? 1 : -1;
    for (int i = step; i != k + step; i += step) {
        c.links.push_back(step > 0 ? t_apply(c.links.back()) : t_inverse(c.links.back()));
        c.powers.push_back(i);
    }
    return c;
}

Report identities_310(const RSeries &f0, std::size_t N)
{
    if (f0.order() < N) {
        throw usage_error("series order below N");
    }
    RSeries f = f0.truncate(N);
    require_normalized(f, "identities_310");
    RSeries emx = gen::exp_scaled(-1, N);
    RSeries x = RSeries::x(N);
    RSeries fe = f * emx;
    RSeries tf = t_apply(f);
    Report r;

    RSeries lhs8 = comp_inverse(t_apply(fe));
    RSeries x_over = x / (RSeries::one(N) + x);
    RSeries rhs8 = compose(comp_inverse(tf), x_over);
    r.add("(T(f e^-x))^inv = (Tf)^inv o x/(1+x)", lhs8 == rhs8);

    RSeries lhs9 = x * exp(comp_inverse(fe));
    RSeries rhs9 = comp_inverse(x * exp(-comp_inverse(f)));
    r.add("x e^{(f e^-x)^inv} = (x e^{-f^inv})^inv", lhs9 == rhs9);

    RSeries lhs10 = t_apply(t_apply(fe));
    RSeries rhs10 = t_apply(tf) * (RSeries::one(N) - tf);
    r.add("T^2(f e^-x) = (T^2 f)(1 - Tf)", lhs10 == rhs10);
    return r;
}

std::optional<unsigned> find_period(const RSeries &f0, unsigned max_k, std::size_t N)
{
    if (max_k > static_cast<unsigned>(max_chain_power)) {
        throw usage_error("max_k limited to " + std::to_string(max_chain_power));
    }
    if (f0.order() < N) {
        throw usage_error("series order below N");
    }
    RSeries f = f0.truncate(N);
    require_normalized(f, "find_period");
    RSeries g = f;
    for (unsigned k = 1; k <= max_k; ++k) {
        g = t_apply(g);
        if (g == f) {
            return k;
        }
    }
    return std::nullopt;
}

ThetaResult theta_propagation(unsigned n, const Rational &theta, unsigned k, std::size_t N)
{
    if (n < 2 || N < n + 1) {
        throw usage_error("theta_propagation needs n >= 2 and N >= n + 1");
    }
    std::vector<Rational> c(N + 1);
    for (unsigned j = 1; j <= n; ++j) {
        c[j] = Rational(1) / Rational(factorial(j));
    }
    Rational fact = Rational(factorial(n + 1));
    c[n + 1] = theta / fact;
    RSeries g(std::move(c));
    for (unsigned i = 0; i < 2 * k; ++i) {
        g = t_apply(g);
    }
    ThetaResult out;
    out.direct = g[n + 1];
    Rational npow = pow(Rational(static_cast<long>(n)), 2L * k);
    out.closed_form = (1 - npow * (1 - theta)) / fact;
    out.pass = out.direct == out.closed_form;
    return out;
}

Report parity_check(const RSeries &f, unsigned max_k)
{
    require_normalized(f, "parity_check");
    Report r;
    std::size_t n = 2;
    while (n <= f.order() && f[n] == 0) {
        ++n;
    }
    if (n > f.order()) {
        return r;
    }
    RSeries g = f;
    for (unsigned k = 1; k <= max_k; ++k) {
        g = t_apply(g);
        Rational want = pow(Rational(1 - static_cast<long>(n)), static_cast<long>(k)) * f[n];
        r.add("[x^" + std::to_string(n) + "] T^" + std::to_string(k) + " f", g[n] == want);
    }
    return r;
}

ScanResult periodicity_scan(std::uint64_t seed, unsigned count, unsigned max_k, std::size_t N)
{
    ScanResult out;
    for (unsigned i = 0; i < count; ++i) {
        std::uint64_t s = seed + i;
        RSeries f = gen::random_normalized(s, N);
        ++out.tested;
        if (find_period(f, max_k, N)) {
            ++out.periodic;
            out.periodic_seeds.push_back(s);
        }
    }
    return out;
}

} // namespace dlog::tchain
