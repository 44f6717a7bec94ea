#include <doctest.h>

#include <cmath>
#include <sstream>

#include <dlog/numerics.hpp>
#include <dlog/soldner.hpp>

using namespace dlog;
using namespace dlog::soldner;

namespace
{
double d(const BigFloat &x) { return x.to_double(); }
} // namespace

TEST_CASE("first coefficients")
{
    auto a = a_coeffs(14);
    std::vector<Rational> want = {0,
                                  1,
                                  -1,
                                  Rational(5, 4),
                                  Rational(-31, 18),
                                  Rational(361, 144),
                                  Rational(-4537, 1200),
                                  Rational(757517, 129600),
                                  Rational(-2922187, 317520),
                                  Rational(41478457, 2822400),
                                  Rational(-3255225203, 137168640),
                                  Rational(BigInt("2652290261711"), BigInt("68584320000")),
                                  Rational(BigInt("-29273706104263"), BigInt("461039040000")),
                                  Rational(BigInt("6268818642766711"), BigInt("59750659584000")),
                                  Rational(BigInt("-1257201118413824699"), BigInt("7212758192640000"))};
    for (std::size_t n = 1; n <= 14; ++n) {
        CHECK(a[n] == want[n]);
    }
    CHECK(a_composition_formula(13) == want[13]);
    RSeries psi = psi_series(14);
    CHECK(psi[14] == want[14]);
}

TEST_CASE("signs alternate and the recurrence is scale invariant")
{
    auto a = a_coeffs(60);
    for (std::size_t n = 1; n <= 60; ++n) {
        CHECK(((n % 2 == 1) == (a[n] > 0)));
    }
    // a_n C^n also satisfies (1-n) a_n = sum (n-k)/k a_k a_{n-k}
    for (std::size_t n = 2; n <= 20; ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k < n; ++k) {
            s += Rational(static_cast<long>(n - k), static_cast<long>(k)) * a[k] * pow(Rational(2), long(k)) * a[n - k] *
                 pow(Rational(2), long(n - k));
        }
        CHECK(Rational(1 - long(n)) * a[n] * pow(Rational(2), long(n)) == s);
    }
}

TEST_CASE("exp(psi) - 1 has coefficients a_n/n")
{
    auto a = a_coeffs(10);
    CHECK_FALSE(exp_psi_identity(a).has_value());
    CHECK_FALSE(exp_psi_identity(a_coeffs(1)).has_value());
    a[3] += 1;
    auto bad = exp_psi_identity(a);
    REQUIRE(bad.has_value());
    CHECK(*bad == 3);
}

TEST_CASE("b coefficients")
{
    BCoeffs b = b_coeffs(600, 128, 200);
    CHECK(b.exact_upto == 200);
    CHECK(b.overlap_rel_diff < 1e-30);
    CHECK(std::fabs(d(b.b[1]) - 0.561459483566885169824) < 1e-16);
    for (std::size_t n = 1; n <= 600; ++n) {
        CHECK(b.b[n] > 0.0);
    }
    // float-only start agrees with the hybrid
    BCoeffs f = b_coeffs(600, 128, 0);
    CHECK(std::fabs(d((f.b[600] - b.b[600]) / b.b[600])) < 1e-30);
    CHECK_THROWS_AS(b_coeffs(0, 128), usage_error);
}

TEST_CASE("series at 2000 terms")
{
    BCoeffs b = b_coeffs(2000, 96);
    auto one = series_theorem21(Which::one, b);
    CHECK(std::fabs(d(one.partial - one.target)) < 1e-3);
    CHECK(std::fabs(d(one.value - one.target)) < 1e-7);
    auto l2 = series_theorem21(Which::ln2, b);
    CHECK(std::fabs(d(l2.partial - l2.target)) < 2e-7);
    CHECK(std::fabs(d(l2.value - l2.target)) < 1e-11);
    auto m1 = series_theorem21(Which::mu_minus_one, b);
    CHECK(std::fabs(d(m1.value) - 0.451369234883381) < 1e-12);
    auto lm = series_theorem21(Which::ln_mu, b);
    CHECK_FALSE(lm.asserted);
    CHECK(lm.cesaro.has_value());
    CHECK(lm.euler.has_value());
}

TEST_CASE("the cubic series")
{
    BigFloat aux(64);
    BigFloat rhs = square_series_rhs(160, &aux);
    CHECK(std::fabs(d(rhs) - 0.614279333459567728126694440570570759640) < 1e-15);
    CHECK(std::fabs(d(aux) - 1.030654733388658708345720726075) < 1e-15);
    BCoeffs one = b_coeffs(1, 64);
    SquareSeries r1 = series_remark24(b_coeffs(20, 64));
    CHECK(r1.lhs < r1.rhs);
    CHECK(one.b[1] < rhs);
    SquareSeries r = series_remark24(b_coeffs(2000, 96));
    CHECK(std::fabs(d(r.lhs - r.rhs)) < 2e-10);
}

TEST_CASE("exploratory scans")
{
    BCoeffs b = b_coeffs(2000, 64, 64);
    HypothesisScan h = hypothesis_scan(b);
    CHECK(h.monotone_violations == 0);
    CHECK(h.nb_increase_violations == 0);
    // slow approach to 1; values from an independent double-precision run
    CHECK(std::fabs(h.cesaro_mean - 0.8611850800552658) < 1e-12);
    CHECK(std::fabs(h.nb_last - 0.8779129552651592) < 1e-12);
    CHECK(h.nb_last < 1.0);
}

TEST_CASE("Mellin-type integrals")
{
    BCoeffs b = b_coeffs(2000, 96);
    for (int s : {1, 2}) {
        MellinCheck m = mellin_check(s, b);
        CHECK(std::fabs(d(m.positive.series - m.positive.integral)) < 1e-6);
        CHECK(std::fabs(d(m.alternating.series - m.alternating.integral)) < 1e-6);
    }
    MellinCheck m1 = mellin_check(1, b);
    CHECK(std::fabs(d(m1.positive.integral) - 1) < 1e-18);
    CHECK(std::fabs(d(m1.alternating.integral) - 0.451369234883381050) < 1e-15);
    CHECK(std::fabs(d(mellin_check(2, b).alternating.integral) / 2 - 0.500102336270170606411958) < 1e-15);
    CHECK_THROWS_AS(mellin_check(3, b), usage_error);
}

TEST_CASE("csv export")
{
    BCoeffs b = b_coeffs(3, 64);
    std::ostringstream os;
    write_csv(os, a_coeffs(3), b, 10);
    std::string s = os.str();
    CHECK(s.rfind("n,a_n,b_n\n1,1,", 0) == 0);
    CHECK(s.find("3,5/4,") != std::string::npos);
    CHECK(parse_which("mu1") == Which::mu_minus_one);
    CHECK_FALSE(parse_which("bogus").has_value());
}
