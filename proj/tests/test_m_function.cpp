#include <doctest.h>

#include <cmath>

#include <dlog/m_function.hpp>
#include <dlog/numerics.hpp>

using namespace dlog;
using namespace dlog::mfun;

namespace
{
double d(const BigFloat &x) { return x.to_double(); }
BigFloat bf(const char *s, long prec = 128) { return BigFloat::parse(s, prec); }
} // namespace

TEST_CASE("partial exponential sums")
{
    CHECK(partial_exp_sum(1) == 2);
    CHECK(partial_exp_sum(2) == 5);
    CHECK(partial_exp_sum(3) == 13);
    CHECK(partial_exp_sum(4) == Rational(103, 3));
}

TEST_CASE("generating functions through W")
{
    CHECK(genfunc_checks(10).all_pass());
    CHECK(genfunc_checks(1).all_pass());
}

TEST_CASE("A_k(s)")
{
    auto A = a_polys(8);
    AlphaPoly s = AlphaPoly::variable("s");
    CHECK(A[0] == AlphaPoly::constant(1));
    CHECK(A[1] == s * Rational(2, 3));
    CHECK(A[2] == s * (s * Rational(4) + AlphaPoly::constant(5)) / Rational(18));
    CHECK(A[1].var() == "s");
    RSeries base = a_base_series(8);
    for (std::size_t k = 1; k <= 8; ++k) {
        CHECK(A[k](Rational(0)) == 0);
        CHECK(A[k](Rational(1)) == base[k]);
        CHECK(A[k].degree() <= static_cast<int>(k));
    }
    for (unsigned m = 0; m <= 5; ++m) {
        RSeries p = pow_int(base, m);
        for (std::size_t k = 0; k <= 8; ++k) {
            CHECK(A[k](Rational(m)) == p[k]);
        }
    }
}

TEST_CASE("closed-form values")
{
    SpecialValues v = m_special_values(4);
    CHECK(v.m0 == Rational(-13, 18));
    CHECK(v.half_m0_pipeline == Rational(-13, 36));
    CHECK(v.m_neg[0] == Rational(-31, 810));
    CHECK(v.m_neg[1] == Rational(-184, 127575));
    CHECK(v.residue[0] == Rational(1, 3));
    CHECK(v.residue[1] == Rational(-23, 540));
    CHECK(v.residue_zeros.empty());
    CHECK_THROWS_AS(m_special_values(9), usage_error);
}

TEST_CASE("closed forms against numeric continuation")
{
    SpecialValues v = m_special_values(3);
    BigFloat delta = bf("1e-12", 192);
    auto symmetric = [&](const BigFloat &s) { return (m_continued(s + delta) + m_continued(s - delta)) / 2L; };
    CHECK(std::fabs(d(symmetric(BigFloat(0L, 192))) - (-13.0 / 18)) < 1e-15);
    for (long n = 1; n <= 3; ++n) {
        double want = d(BigFloat(v.m_neg[n - 1], 192));
        CHECK(std::fabs(d(symmetric(BigFloat(-n, 192))) - want) < 1e-15);
    }
    BigFloat root = sqrt(2L / num::pi(192));
    for (long n = 0; n <= 3; ++n) {
        BigFloat s = BigFloat(1L, 192) / 2L - n;
        BigFloat res = (m_continued(s + delta) - m_continued(s - delta)) * delta / 2L / root;
        CHECK(std::fabs(d(res) - d(BigFloat(v.residue[n], 192))) < 1e-15);
    }
    CHECK_THROWS_AS(m_continued(BigFloat(-1L, 128)), singularity_error);
}

TEST_CASE("M(s) for s > 1, three routes")
{
    MNumeric m2 = m_numeric(BigFloat(2L, 128), 1000000);
    CHECK(std::fabs(d(m2.series.value) - 1.144934066848226436) < 1e-12);
    CHECK(std::fabs(d(m2.series.partial) - 1.144934066848226436) < 1e-5);
    CHECK(std::fabs(d(m2.i_log.value) - 1.144934066848226436) < 1e-16);
    CHECK(std::fabs(d(m2.i_parts.value) - 1.144934066848226436) < 1e-16);
    MNumeric m3 = m_numeric(BigFloat(3L, 128), 10000);
    CHECK(std::fabs(d(m3.i_log.value - m3.i_parts.value)) < 1e-25);
    CHECK(std::fabs(d(m3.series.value) - 0.86872356982626095207) < 1e-6);
    CHECK(std::fabs(d(m_continued(bf("2.5"))) - 0.95757450118078555730) < 1e-18);
    CHECK(std::fabs(d(gamma_fn(BigFloat(2L, 64))) - 1) < 1e-18);
    CHECK_THROWS_AS(m_series(BigFloat(1L, 64), 100), domain_error);
}

TEST_CASE("the limit at x -> 1")
{
    CHECK(edge_function(BigFloat(1L, 128)).is_zero());
    EdgeLimit r = remark11_limit(128, 100000);
    double target = 0.65342640972002734529;
    CHECK(std::fabs(d(r.target) - target) < 1e-18);
    CHECK(std::fabs(d(r.at_smallest_eps) - target) < 1e-3);
    CHECK(std::fabs(d(r.extrapolated) - target) < 1e-15);
    CHECK(std::fabs(d(r.direct_partial) - target) < 1e-2);
    CHECK(std::fabs(d(r.direct_partial + r.direct_tail) - target) < 1e-6);
    CHECK_THROWS_AS(edge_function(BigFloat(-1L, 64)), domain_error);
}

TEST_CASE("partial sums of the A_k expansion at s = 2")
{
    Trend17 t = trend_17(2, {10, 40, 160}, 96);
    REQUIRE(t.partial.size() == 3);
    CHECK(std::fabs(d(t.target) - 4 * 1.144934066848226436) < 1e-12);
    // approaching from below; no convergence claim
    CHECK(t.partial[0].second < t.partial[1].second);
    CHECK(t.partial[1].second < t.partial[2].second);
    CHECK(t.partial[2].second < t.target);
}
