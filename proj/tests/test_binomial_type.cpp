#include <doctest.h>

#include <dlog/binomial_type.hpp>
#include <dlog/generators.hpp>

using namespace dlog;
using namespace dlog::binom;

namespace
{
AlphaPoly falling(std::size_t n)
{
    AlphaPoly a = AlphaPoly::constant(1);
    for (std::size_t j = 0; j < n; ++j) {
        a *= AlphaPoly(std::vector<Rational>{Rational(-static_cast<long>(j)), 1});
    }
    return a;
}
AlphaPoly abel(std::size_t n)
{
    // a (a+n)^{n-1}
    if (n == 0) {
        return AlphaPoly::constant(1);
    }
    AlphaPoly base(std::vector<Rational>{Rational(static_cast<long>(n)), 1});
    AlphaPoly acc = AlphaPoly::variable();
    for (std::size_t j = 1; j < n; ++j) {
        acc *= base;
    }
    return acc;
}
} // namespace

TEST_CASE("generators give the classical sequences")
{
    Sequence x = from_generator(RSeries::x(10), 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(x.polys[n] == AlphaPoly::monomial(1, n));
    }
    Sequence ff = from_generator(gen::expm1(10), 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(ff.polys[n] == falling(n));
    }
    Sequence w = from_generator(gen::x_exp_neg(6), 6);
    CHECK(w.polys[2] == AlphaPoly(std::vector<Rational>{0, 2, 1}));
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(w.polys[n] == abel(n));
        CHECK(w.polys[n].leading() == 1);
    }
    CHECK_THROWS_AS(from_generator(gen::exp_series(5), 5), domain_error);
}

TEST_CASE("convolution identity with a negative control")
{
    CHECK(convolution_check(from_generator(gen::expm1(10), 10)).pass());
    CHECK(convolution_check(from_generator(RSeries::x(10), 10)).pass());
    Sequence bad = from_generator(gen::expm1(6), 6);
    bad.polys[2] += AlphaPoly::constant(1);
    auto c = convolution_check(bad);
    REQUIRE_FALSE(c.pass());
    CHECK(c.failing.front() == 2);
}

TEST_CASE("operator series on polynomials")
{
    CHECK(apply_operator_series(RSeries::x(3), AlphaPoly::monomial(1, 3)) == AlphaPoly::monomial(3, 2));
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(apply_operator_series(gen::expm1(8), falling(n)) == falling(n - 1) * Rational(static_cast<long>(n)));
    }
    CHECK_THROWS_AS(apply_operator_series(RSeries::x(2), AlphaPoly::monomial(1, 3)), usage_error);
}

TEST_CASE("delta and T identities")
{
    for (const RSeries &f : {gen::expm1(12), gen::x_minus_x2(12), RSeries::x(12)}) {
        Sequence s = from_generator(f, 12);
        CHECK(delta_check(s).pass());
        CHECK(t_check(s).pass());
    }
}

TEST_CASE("exp deformation")
{
    Sequence ab = exp_deform(from_generator(RSeries::x(8), 8));
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(ab.polys[n] == abel(n));
    }
    Sequence d = exp_deform(from_generator(gen::expm1(8), 8));
    CHECK(d.polys == from_generator(RSeries::one(8) - gen::exp_scaled(-1, 8), 8).polys);
    CHECK(d.polys[0] == AlphaPoly::constant(1));
}

TEST_CASE("transform through T")
{
    CHECK(tchain_poly_transform(from_generator(gen::expm1(10), 10), 10).pass());
    CHECK(tchain_poly_transform(from_generator(gen::x_exp_neg(10), 10), 10).pass());
    CHECK(tchain_poly_transform(from_generator(RSeries::x(10), 10), 10).pass());
}

TEST_CASE("log deformation")
{
    RSeries a = log_deform_series(from_generator(RSeries::x(10), 10), 1, 10);
    CHECK(a[1] == 1);
    CHECK(log_deform_series(from_generator(gen::expm1(8), 8), 0, 8) == RSeries(8));
    CHECK_NOTHROW(log_deform_series(from_generator(gen::random_normalized(5, 8), 8), Rational(-2, 3), 8));
}

TEST_CASE("full property suite")
{
    std::vector<RSeries> gens = {RSeries::x(12), gen::expm1(12), gen::x_exp_neg(12), gen::x_minus_x2(12),
                                 gen::sin(12)};
    for (std::uint64_t s = 1; s <= 5; ++s) {
        gens.push_back(gen::random_normalized(s, 12));
    }
    for (const auto &g : gens) {
        Report r = property_suite(g, 12);
        CHECK(r.all_pass());
        CHECK(value_at_one_check(from_generator(g, 12)).pass());
    }
}
