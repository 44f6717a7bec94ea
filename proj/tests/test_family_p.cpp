#include <doctest.h>

#include <cmath>

#include <dlog/family_p.hpp>
#include <dlog/generators.hpp>
#include <dlog/t_chain.hpp>

using namespace dlog;
using namespace dlog::family;

namespace
{

Rational q(long a, long b = 1) { return Rational(a, b); }

} // namespace

TEST_CASE("construct: known members")
{
    auto f1 = construct(1, 10);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(f1.gamma[n] == Rational(1) / Rational(long(n)));
    }
    CHECK(f1.t_big == gen::expm1(10));

    auto f2 = construct(2, 7);
    CHECK(f2.gamma[1] == 1);
    CHECK(f2.gamma[2] == 0);
    CHECK(f2.gamma[3] == q(-1, 6));
    CHECK(f2.gamma[5] == q(3, 40));
    CHECK(f2.omega == gen::atanh(7));

    auto f0 = construct(0, 9);
    for (unsigned n = 1; n <= 9; ++n) {
        CHECK(f0.gamma[n] == Rational(pow(Rational(long(n)), long(n) - 1) / Rational(factorial(n))));
    }
    CHECK_THROWS_AS(construct(1, 1), usage_error);
}

TEST_CASE("closed forms for gamma, omega, x e^gamma")
{
    for (auto p : {q(1), q(2), q(1, 2), q(-1), q(3)}) {
        auto f = construct(p, 10);
        INFO(to_string(p));
        CHECK(prop41_check(f).all_pass());
        CHECK(prop42_check(f).all_pass());
        CHECK(prop43_check(f).all_pass());
    }
    auto f0 = construct(0, 10);
    CHECK(prop42_check(f0).all_pass());
    CHECK(prop43_check(f0).all_pass());
    CHECK_THROWS_AS(prop41_check(f0), domain_error);
}

TEST_CASE("a corrupted member is rejected")
{
    auto f = construct(2, 8);
    auto c = f.gamma.coeffs();
    c[5] += q(1, 1000);
    f.gamma = RSeries(c);
    CHECK_FALSE(prop41_check(f).all_pass());
    CHECK_FALSE(prop43_check(f).all_pass());
}

TEST_CASE("observations")
{
    for (auto p : {q(0), q(1), q(2), q(1, 2), q(-1), q(3)}) {
        auto f = construct(p, 10);
        auto r = observations_check(f);
        INFO(to_string(p));
        for (const auto &n : r.failures()) {
            INFO(n);
            CHECK(false);
        }
        CHECK(r.size() >= 8);
    }
    // y_{3/2}(x) = -2 y_3(-x/2)
    auto y3 = gen::y_p(3, 10);
    CHECK(gen::y_p(q(3, 2), 10) == rescale(y3, q(-1, 2)) * q(-2));
}

TEST_CASE("T rescalings and products")
{
    for (auto p : {q(2), q(1, 2), q(-1), q(3), q(0), q(1)}) {
        INFO(to_string(p));
        CHECK(rescaling_check(construct(p, 12)).all_pass());
    }
    // T_{1/2}(2x) = 2 (e^x - 1) e^{e^x - 1}
    auto e1 = gen::expm1(10);
    CHECK(rescale(tchain::t_inverse(gen::y_p(q(1, 2), 10)), q(2)) == e1 * q(2) * exp(e1));
    for (unsigned n : {1u, 2u, 3u}) {
        CHECK(corollary41_check(n, 10).all_pass());
    }
    auto r = prop45_check(12);
    CHECK(r.size() == 5);
    CHECK(r.all_pass());
    auto psi2 = construct(2, 5).psi;
    CHECK(psi2[3] == q(1, 12));
}

TEST_CASE("expansion theorems")
{
    for (auto p : {q(1), q(2), q(1, 2), q(-1), q(3)}) {
        INFO(to_string(p));
        CHECK(thm41_check(p, 9).all_pass());
        CHECK(thm43_check(p, 12).all_pass());
        auto r45 = thm45_check(p, 10);
        CHECK(r45.size() == 4);
        CHECK(r45.all_pass());
        CHECK(remark42_check(p, 9).all_pass());
        CHECK(t2_factor_check(p, 12).all_pass());
    }
    CHECK(t2_factor_check(0, 10).all_pass());
    CHECK_THROWS_AS(thm41_check(2, max_composition_order + 1), usage_error);
    CHECK_THROWS_AS(thm43_check(0, 5), domain_error);
}

TEST_CASE("real pole limit")
{
    auto half = thm44_limit(q(1, 2));
    CHECK(std::fabs(half.value.to_double() - std::log(2.0)) < 1e-12);
    auto zero = thm44_limit(0);
    CHECK(std::fabs(zero.value.to_double() - (1 - std::log(2.0) / 2)) < 1e-12);
    auto third = thm44_limit(q(1, 3));
    CHECK(std::fabs((third.value - third.target).to_double()) < 1e-12);
    CHECK_THROWS_AS(thm44_limit(1), domain_error);
}

TEST_CASE("trend and explorer")
{
    auto tr = remark43_limit(q(1, 2), {10, 200});
    // 1/2 + binom(2n, n)/2^{2n+1}
    CHECK(std::fabs(tr[0].value.to_double() - (0.5 + 184756.0 / 2097152.0)) < 1e-12);
    CHECK(std::fabs(tr[1].value.to_double() - 0.5) < 0.02);
    auto t3 = remark43_limit(q(1, 3), {40, 160});
    CHECK(std::fabs(t3[1].value.to_double() - 0.5) < std::fabs(t3[0].value.to_double() - 0.5));
    // p = 1 collapses to zeta partial sums
    double z = 0;
    for (int n = 1; n <= 200; ++n) {
        z += 1.0 / (double(n) * n);
    }
    CHECK(std::fabs(mp_partial(1, BigFloat(2L, 128), 200).to_double() - z) < 1e-14);
    CHECK_THROWS_AS(mp_partial(2, BigFloat(2L, 128), 10), domain_error);
}

TEST_CASE("chain coherence")
{
    for (auto p : {q(0), q(1), q(2), q(1, 2), q(-1), q(3)}) {
        CHECK(chain_coherence(construct(p, 10)).all_pass());
    }
}
