#include <doctest.h>

#include <dlog/pyramid.hpp>

using namespace dlog;
using namespace dlog::pyramid;

namespace
{

// Reference slices n = 1..6, row by row.
const char *const reference =
    "n=1:\n"
    "k=1: 1\n"
    "n=2:\n"
    "k=1: 1 1\n"
    "k=2: 1\n"
    "n=3:\n"
    "k=1: 1 2 2\n"
    "k=2: 3 3\n"
    "k=3: 1\n"
    "n=4:\n"
    "k=1: 1 3 6 6\n"
    "k=2: 7 14 11\n"
    "k=3: 6 6\n"
    "k=4: 1\n"
    "n=5:\n"
    "k=1: 1 4 12 24 24\n"
    "k=2: 15 45 70 50\n"
    "k=3: 25 50 35\n"
    "k=4: 10 10\n"
    "k=5: 1\n"
    "n=6:\n"
    "k=1: 1 5 20 60 120 120\n"
    "k=2: 31 124 287 404 274\n"
    "k=3: 90 270 375 225\n"
    "k=4: 65 130 85\n"
    "k=5: 15 15\n"
    "k=6: 1\n";

} // namespace

TEST_CASE("slices up to 6 match the reference table")
{
    CHECK(format_slices(build(6)) == reference);
    CHECK(format_slices(build(9), 1, 6) == reference);
}

TEST_CASE("faces and positivity up to 12")
{
    auto t = build(12);
    auto r = faces_check(t);
    CHECK(r.all_pass());
    CHECK(r.size() == 3);
    CHECK(all_positive(t));
    CHECK(stirling2(12, 5) == 1379400);
    CHECK(stirling1_unsigned(12, 5) == 45995730);
    CHECK(t.at(12, 1, 12) == factorial(11));
}

TEST_CASE("alternating row sums equal partial Bell polynomials")
{
    auto t = build(10);
    for (const char *x : {"1", "2", "-3/5", "7/2"}) {
        INFO(x);
        CHECK(row_sum_check(t, parse_rational(x)).all_pass());
    }
    // a single corrupted interior entry is caught
    auto bad = build(6);
    bad.ref(5, 2, 3) += 1;
    CHECK_FALSE(row_sum_check(bad, 2).all_pass());
    CHECK_THROWS_AS(row_sum_check(t, 0), domain_error);
}

TEST_CASE("out-of-range entries are zero")
{
    auto t = build(4);
    CHECK(t.at(4, 3, 2) == 0);
    CHECK(t.at(5, 1, 1) == 0);
    CHECK(t.at(0, 0, 0) == 0);
    CHECK_THROWS_AS(build(0), usage_error);
}

TEST_CASE("derivative oracle agrees with the recurrence")
{
    CHECK(oracle_check_ei(8).all_pass());
    for (const char *p : {"0", "1", "2", "-1", "1/2", "3", "-2/3"}) {
        INFO(p);
        CHECK(oracle_check_tp(6, parse_rational(p)).all_pass());
    }
    CHECK_THROWS_AS(derivative_oracle(max_oracle_n + 1, 0), usage_error);
}

TEST_CASE("oracle detects a corrupted table")
{
    // second derivative of e^{a Ei}: a e^x/x - a e^x/x^2 + a^2 e^{2x}/x^2
    auto o = derivative_oracle(2, 0);
    NormalForm want;
    want[{1, 1, 1}] = 1;
    want[{1, 1, 2}] = -1;
    want[{2, 2, 2}] = 1;
    CHECK(o[2] == want);
    want[{1, 1, 2}] = 1;
    CHECK(o[2] != want);
}

TEST_CASE("p-tables")
{
    auto pt = build_p(7);
    // A at p = 0 is the integer pyramid
    CHECK(evaluate_int(pt.a, 0) == build(7));
    // B^2: (p - 1) at (1,1), 1 at (1,2), 1 at (2,2)
    CHECK(pt.b.at(2, 1, 1) == AlphaPoly(std::vector<Rational>{-1, 1}, "p"));
    CHECK(pt.b.at(2, 1, 2) == AlphaPoly::constant(1, "p"));
    // A^2_{1,1} = 1 independent of p
    CHECK(pt.a.at(2, 1, 1) == AlphaPoly::constant(1, "p"));
    // integer values at integer p
    CHECK_NOTHROW(evaluate_int(pt.a, 2));
    CHECK_NOTHROW(evaluate_int(pt.b, -1));
    auto s = format_slices(pt.b, 2, 2);
    CHECK(s.find("n=2:") == 0);
}
