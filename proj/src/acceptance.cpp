#include <dlog/acceptance.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <sstream>

#include <dlog/binomial_type.hpp>
#include <dlog/errors.hpp>
#include <dlog/family_p.hpp>
#include <dlog/generators.hpp>
#include <dlog/m_function.hpp>
#include <dlog/numerics.hpp>
#include <dlog/pyramid.hpp>
#include <dlog/soldner.hpp>
#include <dlog/t_chain.hpp>

namespace dlog::acceptance
{

namespace
{

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void need(bool ok, const std::string &what)
    {
        if (!ok) {
            if (!pass) {
                detail << "; ";
            } else {
                detail.str("");
            }
            pass = false;
            detail << what;
        }
    }
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double dist(const BigFloat &a, const BigFloat &b) { return std::fabs((a - b).to_double()); }

// b_n at N = 10^4, shared by criteria 2, 3 and 10.
struct Shared {
    std::unique_ptr<soldner::BCoeffs> b;
    const soldner::BCoeffs &bcoeffs()
    {
        if (!b) {
            b = std::make_unique<soldner::BCoeffs>(soldner::b_coeffs(10000, 128));
        }
        return *b;
    }
};

void c1(Outcome &o, Shared &)
{
    BigFloat mu = num::mu_root(256);
    // all printed digits of 1.451369...
    double scaled = std::floor(mu.to_double() * 1e6);
    o.need(scaled == 1451369.0, "mu = " + mu.to_string(12));
    o.detail << "mu = " << mu.to_string(20);
}

void c2(Outcome &o, Shared &sh)
{
    const auto &b = sh.bcoeffs();
    using soldner::Which;
    auto one = soldner::series_theorem21(Which::one, b);
    auto ln2 = soldner::series_theorem21(Which::ln2, b);
    auto mu1 = soldner::series_theorem21(Which::mu_minus_one, b);
    // raw partial sums, the tail model is not used here
    double d1 = dist(one.partial, one.target);
    double d2 = dist(ln2.partial, ln2.target);
    double d3 = dist(mu1.value, mu1.target);
    o.need(d1 < 2e-4, "sum/n off by " + sci(d1));
    o.need(d2 < 1e-7, "sum/n^2 off by " + sci(d2));
    o.need(d3 < 1e-4, "Euler sum off by " + sci(d3));
    if (o.pass) {
        o.detail << "N=10000 |1|: " << sci(d1) << ", |ln2|: " << sci(d2) << ", |mu-1|: " << sci(d3)
                 << " (exact a_n to n=" << b.exact_upto << ")";
    }
}

void c3(Outcome &o, Shared &sh)
{
    auto r = soldner::series_remark24(sh.bcoeffs());
    double raw = dist(r.lhs, r.rhs);
    double d = dist(r.lhs + r.tail, r.rhs);
    o.need(raw < 1e-9, "partial sum off by " + sci(raw));
    if (o.pass) {
        o.detail << "N=10000 partial sum off by " << sci(raw) << ", with tail " << sci(d);
    }
}

void c4(Outcome &o, Shared &)
{
    auto sv = mfun::m_special_values(2);
    o.need(sv.m0 == Rational(-13, 18), "M(0) = " + to_string(sv.m0));
    auto A = mfun::a_polys(2);
    AlphaPoly a1(std::vector<Rational>{0, Rational(2, 3)}, "s");
    AlphaPoly a2(std::vector<Rational>{0, Rational(5, 18), Rational(2, 9)}, "s");
    o.need(A[1] == a1, "A_1 = " + to_string(A[1]));
    o.need(A[2] == a2, "A_2 = " + to_string(A[2]));
    auto m = mfun::m_numeric(BigFloat(2L, 128), 1000000);
    double d1 = dist(m.series.value, m.i_log.value);
    double d2 = dist(m.series.value, m.i_parts.value);
    double d3 = dist(m.i_log.value, m.i_parts.value);
    double worst = std::max({d1, d2, d3});
    o.need(worst < 1e-5, "M(2) routes differ by " + sci(worst));
    if (o.pass) {
        o.detail << "M(0)=-13/18, A_1, A_2 exact; M(2)=" << m.series.value.to_string(12) << " spread " << sci(worst);
    }
}

const char *const appendix_slices =
    "n=1:\nk=1: 1\n"
    "n=2:\nk=1: 1 1\nk=2: 1\n"
    "n=3:\nk=1: 1 2 2\nk=2: 3 3\nk=3: 1\n"
    "n=4:\nk=1: 1 3 6 6\nk=2: 7 14 11\nk=3: 6 6\nk=4: 1\n"
    "n=5:\nk=1: 1 4 12 24 24\nk=2: 15 45 70 50\nk=3: 25 50 35\nk=4: 10 10\nk=5: 1\n"
    "n=6:\nk=1: 1 5 20 60 120 120\nk=2: 31 124 287 404 274\nk=3: 90 270 375 225\nk=4: 65 130 85\n"
    "k=5: 15 15\nk=6: 1\n";

void c5(Outcome &o, Shared &)
{
    auto t = pyramid::build(12);
    o.need(pyramid::format_slices(t, 1, 6) == appendix_slices, "slices n<=6 differ");
    o.need(pyramid::faces_check(t).all_pass(), "faces");
    o.need(pyramid::oracle_check_ei(8).all_pass(), "ei oracle");
    for (const char *p : {"0", "1", "2", "-1", "1/2"}) {
        o.need(pyramid::oracle_check_tp(6, parse_rational(p)).all_pass(), std::string("tp oracle p=") + p);
    }
    if (o.pass) {
        o.detail << "slices 1..6, faces n<=12, oracle ei n<=8, tp n<=6 at 5 values of p";
    }
}

void c6(Outcome &o, Shared &)
{
    for (const char *p : {"1", "2", "3", "1/2", "-1"}) {
        auto per = tchain::find_period(gen::delta(parse_rational(p), 25), 8, 25);
        o.need(per == 2U, std::string("period at p=") + p);
    }
    o.need(tchain::find_period(RSeries::x(25), 8, 25) == 1U, "period of x");
    auto scan = tchain::periodicity_scan(20240101, 500, 8, 16);
    o.need(scan.tested == 500 && scan.periodic == 0, std::to_string(scan.periodic) + " random series periodic");
    unsigned grid = 0;
    for (unsigned n = 2; n <= 4; ++n) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (Rational th : {Rational(0), Rational(1), Rational(2), Rational(-1, 3), Rational(5, 7)}) {
                ++grid;
                o.need(tchain::theta_propagation(n, th, k, n + 2).pass,
                       "theta n=" + std::to_string(n) + " k=" + std::to_string(k) + " theta=" + to_string(th));
            }
        }
    }
    if (o.pass) {
        o.detail << "periods 2 (5 values of p) and 1; 0/500 random periodic; theta grid " << grid << " cases";
    }
}

void c7(Outcome &o, Shared &)
{
    std::size_t checks = 0;
    for (const char *ps : {"1", "2", "1/2", "-1", "3"}) {
        Rational p = parse_rational(ps);
        family::PFamily f = family::construct(p, 12);
        Report r;
        r.merge(family::prop41_check(f));
        r.merge(family::prop42_check(f));
        r.merge(family::prop43_check(f));
        r.merge(family::rescaling_check(f));
        r.merge(family::observations_check(f));
        r.merge(family::remark42_check(p, 9));
        r.merge(family::t2_factor_check(p, 12));
        r.merge(family::thm41_check(p, 9));
        r.merge(family::thm43_check(p, 12));
        r.merge(family::thm45_check(p, 10));
        r.merge(family::chain_coherence(f));
        checks += r.size();
        for (const auto &name : r.failures()) {
            o.need(false, name);
        }
    }
    Report p45 = family::prop45_check(12);
    checks += p45.size();
    for (const auto &name : p45.failures()) {
        o.need(false, name);
    }
    if (o.pass) {
        o.detail << checks << " checks at p in {1, 2, 1/2, -1, 3}";
    }
}

void c8(Outcome &o, Shared &)
{
    auto half = family::thm44_limit(Rational(1, 2));
    auto zero = family::thm44_limit(0);
    BigFloat ln2 = num::ln2(256);
    double d1 = dist(half.value, ln2);
    double d0 = dist(zero.value, 1L - ln2 / 2L);
    o.need(d1 < 1e-3, "p=1/2 off by " + sci(d1));
    o.need(d0 < 1e-3, "p=0 off by " + sci(d0));
    if (o.pass) {
        o.detail << "p=1/2: " << half.value.to_string(10) << " (" << sci(d1) << "), p=0: " << zero.value.to_string(10)
                 << " (" << sci(d0) << ")";
    }
}

void c9(Outcome &o, Shared &)
{
    std::vector<std::pair<std::string, RSeries>> gens = {
        {"x", gen::identity(12)},         {"e^x-1", gen::expm1(12)}, {"xe^-x", gen::x_exp_neg(12)},
        {"x-x^2", gen::x_minus_x2(12)}, {"sin", gen::sin(12)},
    };
    for (std::uint64_t s = 1; s <= 5; ++s) {
        gens.push_back({"random seed " + std::to_string(s), gen::random_normalized(s, 12)});
    }
    std::size_t checks = 0;
    for (const auto &[name, f] : gens) {
        Report r = binom::property_suite(f, 12);
        checks += r.size();
        for (const auto &fail : r.failures()) {
            o.need(false, name + ": " + fail);
        }
    }
    if (o.pass) {
        o.detail << checks << " checks over " << gens.size() << " generators at n<=12";
    }
}

void c10(Outcome &o, Shared &sh)
{
    const auto &b = sh.bcoeffs();
    double worst = 0;
    for (int s : {1, 2}) {
        auto m = soldner::mellin_check(s, b);
        double dp = dist(m.positive.series, m.positive.integral);
        double da = dist(m.alternating.series, m.alternating.integral);
        o.need(dp < 1e-6, "positive side s=" + std::to_string(s) + " off by " + sci(dp));
        o.need(da < 1e-6, "alternating side s=" + std::to_string(s) + " off by " + sci(da));
        worst = std::max({worst, dp, da});
    }
    o.need(mfun::genfunc_checks(10).all_pass(), "generating functions at order 10");
    auto r11 = mfun::remark11_limit(128);
    double d = dist(r11.extrapolated, r11.target);
    o.need(d < 1e-3, "limit off by " + sci(d));
    if (o.pass) {
        o.detail << "integral/series spread " << sci(worst) << "; order-10 identities exact; limit off by " << sci(d)
                 << " (direct sum " << sci(dist(r11.direct_partial + r11.direct_tail, r11.target)) << ")";
    }
}

struct Spec {
    int id;
    const char *title;
    double limit;
    void (*fn)(Outcome &, Shared &);
};

const Spec specs[] = {
    {1, "Soldner constant to 7 digits", 5, c1},
    {2, "b_n series: 1, ln 2, mu - 1", 120, c2},
    {3, "cubic b_n series", 120, c3},
    {4, "M exact values and M(2) three ways", 600, c4},
    {5, "coefficient pyramid", 60, c5},
    {6, "periodicity", 60, c6},
    {7, "parameterized family identities", 600, c7},
    {8, "real pole limit", 600, c8},
    {9, "binomial-type property suite", 600, c9},
    {10, "integral and generating-function cross-checks", 600, c10},
};

} // namespace

std::vector<Result> run(const std::vector<int> &ids, const std::function<void(const Result &)> &on_done)
{
    Shared shared;
    std::vector<Result> out;
    for (const Spec &s : specs) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), s.id) == ids.end()) {
            continue;
        }
        Result r;
        r.id = s.id;
        r.title = s.title;
        r.limit_seconds = s.limit;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            s.fn(o, shared);
        } catch (const std::exception &e) {
            o.need(false, std::string("exception: ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.seconds > s.limit) {
            o.need(false, "took " + std::to_string(r.seconds) + " s, limit " + std::to_string(s.limit));
        }
        r.pass = o.pass;
        r.detail = o.detail.str();
        if (on_done) {
            on_done(r);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_line(const Result &r)
{
    char head[64];
    std::snprintf(head, sizeof head, "%s %2d  ", r.pass ? "PASS" : "FAIL", r.id);
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f s", r.seconds);
    return std::string(head) + r.title + "  (" + secs + ")  " + r.detail;
}

} // namespace dlog::acceptance
