#include <dlog/trunc_series.hpp>

#include <sstream>

namespace dlog
{

namespace
{

void require_normalized(const RSeries &f, const char *op)
{
    if (!f.is_normalized()) {
        throw domain_error(std::string(op) + ": series must have the form x + O(x^2)");
    }
}

} // namespace

std::string to_string(const AlphaPoly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p[static_cast<std::size_t>(k)];
        if (c == 0) {
            continue;
        }
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            out << (neg ? "-" : "");
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) {
            out << mag.get_str() << "*";
        }
        out << p.var();
        if (k > 1) {
            out << "^" << k;
        }
    }
    return out.str();
}

RSeries comp_inverse(const RSeries &f)
{
    require_normalized(f, "comp_inverse");
    const std::size_t n = f.order();
    // h = t / f(t), a unit; [x^k] g = [t^(k-1)] h^k / k
    RSeries h = RSeries::one(n - 1) / shift_down(f);
    std::vector<Rational> g(n + 1);
    RSeries hp = RSeries::one(n - 1);
    for (std::size_t k = 1; k <= n; ++k) {
        hp = hp * h;
        g[k] = hp[k - 1] / Rational(static_cast<long>(k));
    }
    RSeries inv(std::move(g));
    if (compose(f, inv) != RSeries::x(n)) {
        throw consistency_error("comp_inverse: Lagrange residues failed the composition check");
    }
    return inv;
}

RSeries comp_inverse_newton(const RSeries &f)
{
    require_normalized(f, "comp_inverse_newton");
    const std::size_t n = f.order();
    // f' padded with a zero top coefficient; the missing term never reaches order n
    std::vector<Rational> dc = derivative(f).coeffs();
    dc.emplace_back();
    const RSeries df(std::move(dc));
    const RSeries id = RSeries::x(n);
    RSeries g = id;
    for (std::size_t prec = 1; prec < 2 * n + 2; prec *= 2) {
        RSeries residual = compose(f, g) - id;
        if (residual == RSeries(n)) {
            return g;
        }
        g = g - residual / compose(df, g);
    }
    if (compose(f, g) != id) {
        throw consistency_error("comp_inverse_newton: iteration did not converge");
    }
    return g;
}

std::vector<Rational> bernoulli_numbers(unsigned n)
{
    // t/(e^t - 1) = 1 / ((e^t - 1)/t)
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        c[k] = Rational(1) / Rational(factorial(k + 1));
    }
    RSeries q = RSeries::one(n) / RSeries(std::move(c));
    std::vector<Rational> b(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        b[k] = q[k] * Rational(factorial(k));
    }
    return b;
}

Rational bernoulli_number(unsigned n) { return bernoulli_numbers(n)[n]; }

Rational bernoulli_poly(unsigned q, const Rational &x)
{
    const auto b = bernoulli_numbers(q);
    Rational sum = 0;
    for (unsigned k = 0; k <= q; ++k) {
        sum += Rational(binomial(q, k)) * b[k] * pow(x, static_cast<long>(q - k));
    }
    return sum;
}

} // namespace dlog
