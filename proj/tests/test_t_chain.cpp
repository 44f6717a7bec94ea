#include <doctest.h>

#include <dlog/generators.hpp>
#include <dlog/t_chain.hpp>

using namespace dlog;
using namespace dlog::tchain;

TEST_CASE("T on the basic examples")
{
    CHECK(t_apply(RSeries::x(10)) == RSeries::x(10));
    CHECK(t_apply(gen::expm1(12)) == RSeries::one(12) - gen::exp_scaled(-1, 12));
    CHECK(t_apply(gen::sin(9)) == gen::tan(9));
    RSeries d = gen::expm1(3);
    RSeries t = t_apply(d);
    CHECK(t[1] == 1);
    CHECK(t[2] == Rational(-1, 2));
    CHECK(t[3] == Rational(1, 6));
    CHECK_THROWS_AS(t_apply(gen::expm1(5) + RSeries::one(5)), domain_error);
}

TEST_CASE("inverse of T")
{
    CHECK(t_inverse(RSeries::x(8)) == RSeries::x(8));
    CHECK(t_inverse(RSeries::one(12) - gen::exp_scaled(-1, 12)) == gen::expm1(12));
    RSeries T = t_inverse(gen::x_exp_neg(10));
    CHECK(T[1] == 1);
    CHECK(T[2] == 1);
    CHECK(T[3] == Rational(3, 4));
    CHECK(t_apply(T) == gen::x_exp_neg(10));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RSeries f = gen::random_normalized(seed, 20);
        CHECK(t_apply(t_inverse(f)) == f);
        CHECK(t_inverse(t_apply(f)) == f);
    }
}

TEST_CASE("chains")
{
    Chain c = chain(RSeries::x(10), 5, 10);
    CHECK(c.links.size() == 6);
    for (const auto &l : c.links) {
        CHECK(l == RSeries::x(10));
    }
    Chain e = chain(gen::delta(2, 14), 2, 14);
    CHECK(e.links[2] == e.links[0]);
    CHECK(e.links[1] != e.links[0]);
    Chain s = chain(gen::sinh_p(1, 13), 1, 13);
    CHECK(s.links[1] == gen::tanh_p(1, 13));
    Chain th = chain(gen::tanh_p(1, 13), 1, 13);
    CHECK(th.links[1] == gen::sinh_p(2, 13));
    Chain b = chain(gen::sinh_p(2, 13), -1, 13);
    CHECK(b.powers[1] == -1);
    CHECK(b.links[1] == gen::tanh_p(1, 13));
    CHECK_THROWS_AS(chain(RSeries::x(4), 65, 4), usage_error);
}

TEST_CASE("rescaling commutes with T")
{
    RSeries f = gen::random_normalized(11, 12);
    Rational A(3, 2);
    RSeries lhs = t_apply(rescale(f, A) * Rational(1 / A));
    RSeries rhs = rescale(t_apply(f), A) * Rational(1 / A);
    CHECK(lhs == rhs);
}

TEST_CASE("deformation identities")
{
    CHECK(identities_310(gen::expm1(15), 15).all_pass());
    CHECK(identities_310(RSeries::x(15), 15).all_pass());
    for (std::uint64_t seed = 40; seed < 45; ++seed) {
        CHECK(identities_310(gen::random_normalized(seed, 12), 12).all_pass());
    }
}

TEST_CASE("periods")
{
    CHECK(find_period(RSeries::x(12), 8, 12) == 1U);
    for (Rational p : {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(-1)}) {
        CHECK(find_period(gen::delta(p, 25), 8, 25) == 2U);
    }
    RSeries xc(std::vector<Rational>{0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK_FALSE(find_period(xc, 10, 11).has_value());
}

TEST_CASE("theta propagation")
{
    auto a = theta_propagation(2, 1, 3, 6);
    CHECK(a.pass);
    CHECK(a.direct == Rational(1, 6));
    auto b = theta_propagation(2, 0, 1, 5);
    CHECK(b.direct == Rational(-1, 2));
    auto c = theta_propagation(3, 2, 2, 6);
    CHECK(c.direct == Rational(41, 12));
    for (unsigned n = 2; n <= 4; ++n) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (Rational th : {Rational(0), Rational(1), Rational(2), Rational(-1, 3)}) {
                CHECK(theta_propagation(n, th, k, n + 2).pass);
            }
        }
    }
}

TEST_CASE("first deviation scales by (1-n)^k")
{
    CHECK(parity_check(gen::random_normalized(3, 10), 4).all_pass());
    RSeries f(std::vector<Rational>{0, 1, 0, 0, Rational(5, 7), 1, 2, 0, 0});
    auto r = parity_check(f, 5);
    CHECK(r.size() == 5);
    CHECK(r.all_pass());
}

TEST_CASE("random series are not periodic")
{
    ScanResult s = periodicity_scan(1000, 40, 8, 16);
    CHECK(s.tested == 40);
    CHECK(s.periodic == 0);
}
