#include <doctest.h>

#include <dlog/errors.hpp>
#include <dlog/generators.hpp>
#include <dlog/series_json.hpp>
#include <dlog/trunc_series.hpp>

using namespace dlog;

namespace
{
RSeries from(std::vector<Rational> v) { return RSeries(std::move(v)); }
} // namespace

TEST_CASE("arithmetic keeps the order")
{
    RSeries a = gen::expm1(6);
    RSeries b = gen::log1p(6);
    CHECK((a + b).order() == 6);
    CHECK((a * b).order() == 6);
    CHECK(derivative(a).order() == 5);
    CHECK(integrate(a).order() == 7);
    CHECK(shift_down(a).order() == 5);
    CHECK(shift_up(a).order() == 7);
}

TEST_CASE("exp and log are mutually inverse")
{
    RSeries s = gen::sin(12);
    CHECK(log(exp(s)) == s);
    RSeries one_plus = RSeries::one(12) + gen::sinh_p(2, 12);
    CHECK(exp(log(one_plus)) == one_plus);
    CHECK(exp(gen::log1p(10)) == RSeries::one(10) + RSeries::x(10));
}

TEST_CASE("composition and inverse")
{
    RSeries e = gen::expm1(10);
    RSeries l = gen::log1p(10);
    CHECK(compose(e, l) == RSeries::x(10));
    CHECK(comp_inverse(e) == l);
    CHECK(comp_inverse_newton(e) == l);
    RSeries r = gen::random_normalized(7, 14);
    CHECK(comp_inverse(r) == comp_inverse_newton(r));
    CHECK(compose(r, comp_inverse(r)) == RSeries::x(14));
    CHECK_THROWS_AS(compose(e, RSeries::one(10)), domain_error);
    CHECK_THROWS_AS(comp_inverse(RSeries::one(5)), domain_error);
}

TEST_CASE("W coefficients (-n)^{n-1}/n!")
{
    RSeries w = gen::lambert_w(9);
    for (long n = 1; n <= 9; ++n) {
        Rational want = Rational(pow(Rational(-n), n - 1)) / Rational(factorial(static_cast<unsigned>(n)));
        CHECK(w[n] == want);
    }
}

TEST_CASE("division by a non-unit")
{
    CHECK_THROWS_AS(RSeries::one(4) / RSeries::x(4), singularity_error);
    CHECK_THROWS_AS(log(RSeries::x(4)), domain_error);
}

TEST_CASE("pow_scalar matches repeated products")
{
    RSeries f = RSeries::one(8) + gen::sin(8);
    CHECK(pow_scalar(f, Rational(3)) == f * f * f);
    RSeries h = pow_scalar(f, Rational(1, 2));
    CHECK(h * h == f);
    CHECK(pow_int(f, 2) * (RSeries::one(8) / f) == f);
}

TEST_CASE("tan = sin/cos and tanh_p")
{
    RSeries t = gen::tan(9);
    CHECK(t[1] == 1);
    CHECK(t[3] == Rational(1, 3));
    CHECK(t[5] == Rational(2, 15));
    CHECK(t[7] == Rational(17, 315));
    RSeries th = gen::tanh_p(2, 7);
    CHECK(th[1] == 1);
    CHECK(th[3] == Rational(-4, 3));
}

TEST_CASE("Bernoulli numbers and polynomials")
{
    auto b = bernoulli_numbers(12);
    CHECK(b[0] == 1);
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[12] == Rational(-691, 2730));
    CHECK(bernoulli_poly(2, Rational(1, 2)) == Rational(-1, 12));
    CHECK(bernoulli_poly(3, Rational(1, 3)) == Rational(1, 27));
}

TEST_CASE("polynomial coefficients over alpha")
{
    // exp(alpha * log(1+x)) = sum C(alpha, n) x^n
    PSeries e = exp(scale(lift(gen::log1p(6)), AlphaPoly::variable()));
    for (long n = 0; n <= 6; ++n) {
        CHECK(e[n] == gen_binomial(AlphaPoly::variable(), n));
    }
    CHECK(substitute(e, 3) == pow_int(RSeries::one(6) + RSeries::x(6), 3));
}

TEST_CASE("checked access and json round trip")
{
    RSeries f = from({0, 1, Rational(1, 2)});
    CHECK_THROWS_AS(f[3], usage_error);
    CHECK(series_from_json(to_json(f)) == f);
    CHECK_THROWS_AS(RSeries(std::vector<Rational>{}), usage_error);
}
