#include <dlog/generators.hpp>

#include <random>

namespace dlog::gen
{

namespace
{

// c^k / k! from k = 0.
RSeries exp_coeffs(const Rational &c, std::size_t order)
{
    std::vector<Rational> v(order + 1);
    Rational term = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        v[k] = term;
        term *= c / Rational(static_cast<long>(k + 1));
    }
    return RSeries(std::move(v));
}

RSeries odd_part(const RSeries &s)
{
    std::vector<Rational> v = s.coeffs();
    for (std::size_t k = 0; k < v.size(); k += 2) {
        v[k] = 0;
    }
    return RSeries(std::move(v));
}

} // namespace

RSeries identity(std::size_t order) { return RSeries::x(order); }

RSeries exp_series(std::size_t order) { return exp_coeffs(1, order); }

RSeries exp_scaled(const Rational &c, std::size_t order) { return exp_coeffs(c, order); }

RSeries expm1(std::size_t order) { return exp_series(order) - RSeries::one(order); }

RSeries log1p(std::size_t order)
{
    std::vector<Rational> v(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        v[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    }
    return RSeries(std::move(v));
}

RSeries delta(const Rational &p, std::size_t order)
{
    // sum p^{k-1} x^k / k!, which is x at p = 0
    std::vector<Rational> v(order + 1);
    Rational pw = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        v[k] = pw / Rational(factorial(static_cast<unsigned>(k)));
        pw *= p;
    }
    return RSeries(std::move(v));
}

RSeries y_p(const Rational &p, std::size_t order) { return delta(p, order) * exp_scaled(-1, order); }

RSeries x_exp_neg(std::size_t order) { return y_p(0, order); }

RSeries x_minus_x2(std::size_t order)
{
    std::vector<Rational> v(order + 1);
    if (order >= 1) {
        v[1] = 1;
    }
    if (order >= 2) {
        v[2] = -1;
    }
    return RSeries(std::move(v));
}

RSeries sin(std::size_t order)
{
    std::vector<Rational> v(order + 1);
    for (std::size_t k = 1; k <= order; k += 2) {
        v[k] = Rational((k / 2) % 2 == 0 ? 1 : -1) / Rational(factorial(static_cast<unsigned>(k)));
    }
    return RSeries(std::move(v));
}

RSeries cos(std::size_t order)
{
    std::vector<Rational> v(order + 1);
    for (std::size_t k = 0; k <= order; k += 2) {
        v[k] = Rational((k / 2) % 2 == 0 ? 1 : -1) / Rational(factorial(static_cast<unsigned>(k)));
    }
    return RSeries(std::move(v));
}

RSeries tan(std::size_t order) { return sin(order) / cos(order); }

RSeries sinh_p(const Rational &p, std::size_t order)
{
    if (p == 0) {
        return identity(order);
    }
    return rescale(odd_part(exp_series(order)), p) * Rational(1 / p);
}

RSeries tanh_p(const Rational &p, std::size_t order)
{
    if (p == 0) {
        return identity(order);
    }
    RSeries e = exp_series(order);
    RSeries odd = odd_part(e);
    RSeries even = e - odd;
    return rescale(odd / even, p) * Rational(1 / p);
}

RSeries atanh(std::size_t order)
{
    std::vector<Rational> v(order + 1);
    for (std::size_t k = 1; k <= order; k += 2) {
        v[k] = Rational(1, static_cast<long>(k));
    }
    return RSeries(std::move(v));
}

RSeries lambert_w(std::size_t order) { return comp_inverse(identity(order) * exp_series(order)); }

RSeries random_normalized(std::uint64_t seed, std::size_t order)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<Rational> v(order + 1);
    if (order >= 1) {
        v[1] = 1;
    }
    for (std::size_t k = 2; k <= order; ++k) {
        v[k] = Rational(num(rng), den(rng));
        v[k].canonicalize();
    }
    return RSeries(std::move(v));
}

RSeries by_name(const std::string &name, const Rational &p, std::size_t order)
{
    if (name == "x") {
        return identity(order);
    }
    if (name == "exp") {
        return delta(p, order);
    }
    if (name == "xexp") {
        return x_exp_neg(order);
    }
    if (name == "x-x2") {
        return x_minus_x2(order);
    }
    if (name == "sin") {
        return sin(order);
    }
    if (name == "sinh") {
        return sinh_p(p, order);
    }
    if (name == "tanh") {
        return tanh_p(p, order);
    }
    if (name == "y") {
        return y_p(p, order);
    }
    throw usage_error("unknown seed function '" + name + "'");
}

std::vector<std::string> names() { return {"x", "exp", "xexp", "x-x2", "sin", "sinh", "tanh", "y"}; }

} // namespace dlog::gen
