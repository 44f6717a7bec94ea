// dlog: command line front end for the series, coefficient and verification
// routines. Exit codes: 0 ok, 1 failed check or internal error, 2 bad usage.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <dlog/acceptance.hpp>
#include <dlog/binomial_type.hpp>
#include <dlog/family_p.hpp>
#include <dlog/generators.hpp>
#include <dlog/m_function.hpp>
#include <dlog/numerics.hpp>
#include <dlog/pyramid.hpp>
#include <dlog/series_json.hpp>
#include <dlog/soldner.hpp>
#include <dlog/t_chain.hpp>

using nlohmann::json;
using namespace dlog;

namespace
{

constexpr std::uint64_t default_seed = 20240101;

struct Config {
    std::size_t order = 12;
    std::size_t terms = 10000;
    long prec = 256;
    std::string p = "1";
    std::string format = "plain";
    std::uint64_t seed = default_seed;

    Rational p_value() const { return parse_rational(p); }
};

// Collected output of one subcommand, printed once at the end.
struct Output {
    std::string subcommand;
    json config = json::object();
    json results = json::array();
    Report checks;
    std::ostringstream plain;
    std::optional<std::string> csv;
};

json config_json(const Config &c)
{
    return {{"order", c.order}, {"terms", c.terms}, {"prec", c.prec}, {"p", c.p}, {"seed", c.seed}};
}

json float_json(const BigFloat &v, const BigFloat &err)
{
    return {{"value", v.to_string()}, {"error", err.to_string(3)}};
}

std::string float_plain(const BigFloat &v, const BigFloat &err)
{
    return v.to_string() + " +- " + err.to_string(3);
}

std::string series_csv(const RSeries &s)
{
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t n = 0; n <= s.order(); ++n) {
        os << n << ',' << s[n].get_str() << '\n';
    }
    return os.str();
}

void series_plain(std::ostream &os, const RSeries &s)
{
    for (std::size_t n = 0; n <= s.order(); ++n) {
        os << n << ": " << s[n].get_str() << '\n';
    }
}

RSeries seed_series(const std::string &name, const Config &c, std::size_t order)
{
    if (name == "random") {
        return gen::random_normalized(c.seed, order);
    }
    return gen::by_name(name, c.p_value(), order);
}

void add_checks(Output &o, const Report &r, const std::string &prefix = {}) { o.checks.merge(r, prefix); }

// series ------------------------------------------------------------------

void run_series(Output &o, const Config &c, const std::string &fn, const std::string &op)
{
    RSeries f = seed_series(fn, c, c.order);
    RSeries out = f;
    if (op == "inverse") {
        out = comp_inverse(f);
        add_checks(o, Report().add("inverse by Newton agrees", comp_inverse_newton(f) == out));
    } else if (op == "t") {
        out = tchain::t_apply(f);
    } else if (op == "tinv") {
        out = tchain::t_inverse(f);
        add_checks(o, Report().add("T of result is the input", tchain::t_apply(out) == f));
    }
    o.config["fn"] = fn;
    o.config["op"] = op;
    o.results.push_back(to_json(out));
    series_plain(o.plain, out);
    o.csv = series_csv(out);
}

// binom -------------------------------------------------------------------

void run_binom(Output &o, const Config &c, const std::string &fn)
{
    RSeries f = seed_series(fn, c, c.order);
    auto seq = binom::from_generator(f, c.order);
    o.config["fn"] = fn;
    std::ostringstream csv;
    csv << "n,value\n";
    for (std::size_t n = 0; n < seq.size(); ++n) {
        o.results.push_back(to_json(n, seq.polys[n]));
        o.plain << "p_" << n << " = " << to_string(seq.polys[n]) << '\n';
        csv << n << ",\"" << to_string(seq.polys[n]) << "\"\n";
    }
    o.csv = csv.str();
    add_checks(o, binom::property_suite(f, c.order));
}

// tchain ------------------------------------------------------------------

void run_tchain(Output &o, const Config &c, const std::string &fn, int k, bool find_period, unsigned max_k,
                unsigned scan)
{
    o.config["seed_fn"] = fn;
    if (scan > 0) {
        auto s = tchain::periodicity_scan(c.seed, scan, max_k, c.order);
        json seeds = s.periodic_seeds;
        o.results.push_back({{"scan", {{"tested", s.tested}, {"periodic", s.periodic}, {"periodic_seeds", seeds}}}});
        o.plain << "scanned " << s.tested << " random series, " << s.periodic << " periodic\n";
        return;
    }
    RSeries f = seed_series(fn, c, c.order);
    if (find_period) {
        auto per = tchain::find_period(f, max_k, c.order);
        o.results.push_back({{"period", per ? json(*per) : json(nullptr)}, {"max_k", max_k}});
        o.plain << (per ? std::to_string(*per) : std::string("none")) << '\n';
        o.csv = "n,value\n0," + (per ? std::to_string(*per) : std::string("none")) + "\n";
        return;
    }
    auto ch = tchain::chain(f, k, c.order);
    std::ostringstream csv;
    csv << "power,n,value\n";
    for (std::size_t i = 0; i < ch.links.size(); ++i) {
        json link = to_json(ch.links[i]);
        link["power"] = ch.powers[i];
        o.results.push_back(link);
        o.plain << "T^" << ch.powers[i] << ":";
        for (std::size_t n = 1; n <= ch.links[i].order(); ++n) {
            o.plain << ' ' << ch.links[i][n].get_str();
            csv << ch.powers[i] << ',' << n << ',' << ch.links[i][n].get_str() << '\n';
        }
        o.plain << '\n';
    }
    o.csv = csv.str();
    add_checks(o, tchain::identities_310(f, c.order));
}

// soldner -----------------------------------------------------------------

void run_soldner(Output &o, const Config &c, const std::vector<std::string> &which, std::size_t exact_upto,
                 bool scan, bool mellin)
{
    auto b = soldner::b_coeffs(c.terms, c.prec, exact_upto);
    o.config["exact_upto"] = b.exact_upto;
    if (c.format == "csv") {
        std::ostringstream os;
        soldner::write_csv(os, soldner::a_coeffs(std::min(b.exact_upto, c.terms)), b);
        o.csv = os.str();
        return;
    }
    o.plain << "b_n to n=" << b.N() << " (exact a_n to n=" << b.exact_upto << ", overlap rel diff "
            << b.overlap_rel_diff << ")\n";
    for (const auto &name : which) {
        auto w = soldner::parse_which(name);
        if (!w) {
            throw usage_error("unknown series '" + name + "' (lnmu, mu1, one, ln2, pi2)");
        }
        if (*w == soldner::Which::pi2) {
            auto r = soldner::series_remark24(b);
            BigFloat err = abs(r.tail);
            o.results.push_back({{"series", name},
                                 {"partial", r.lhs.to_string()},
                                 {"value", float_json(r.lhs + r.tail, err)},
                                 {"target", r.rhs.to_string()}});
            o.plain << name << ": " << float_plain(r.lhs + r.tail, err) << "  target " << r.rhs.to_string(20) << '\n';
            BigFloat diff = abs(r.lhs + r.tail - r.rhs);
            o.checks.add(name + " within 1e-9", diff < 1e-9, diff.to_string(3));
            continue;
        }
        auto v = soldner::series_theorem21(*w, b);
        json j = {{"series", name},
                  {"terms", v.terms},
                  {"partial", v.partial.to_string()},
                  {"value", float_json(v.value, v.error)},
                  {"target", v.target.to_string()},
                  {"asserted", v.asserted}};
        o.plain << name << ": " << float_plain(v.value, v.error) << "  target " << v.target.to_string(20);
        if (v.cesaro) {
            j["cesaro"] = v.cesaro->to_string();
            o.plain << "  cesaro " << v.cesaro->to_string(12);
        }
        if (v.euler) {
            j["euler"] = v.euler->to_string();
            o.plain << "  euler " << v.euler->to_string(12);
        }
        o.plain << (v.asserted ? "" : "  (exploratory)") << '\n';
        o.results.push_back(j);
        if (v.asserted) {
            BigFloat diff = abs(v.value - v.target);
            o.checks.add(name + " value within 10 x error estimate + 1e-30", diff <= v.error * 10L + BigFloat(1e-30, c.prec),
                         diff.to_string(3));
        }
    }
    if (scan) {
        auto h = soldner::hypothesis_scan(b);
        json trend = json::array();
        for (auto &[n, v] : h.nb_trend) {
            trend.push_back({n, v});
        }
        o.results.push_back({{"hypothesis_scan",
                              {{"monotone_violations", h.monotone_violations},
                               {"nb_increase_violations", h.nb_increase_violations},
                               {"cesaro_mean", h.cesaro_mean},
                               {"nb_last", h.nb_last},
                               {"b_last", h.b_last},
                               {"nb_trend", trend}}}});
        o.plain << "scan: b_n monotone violations " << h.monotone_violations << ", n b_n increase violations "
                << h.nb_increase_violations << ", Cesaro mean of n b_n " << h.cesaro_mean << ", N b_N " << h.nb_last
                << '\n';
    }
    if (mellin) {
        for (int s : {1, 2}) {
            auto m = soldner::mellin_check(s, b);
            auto side = [&](const char *name, const soldner::MellinSide &ms) {
                BigFloat diff = abs(ms.series - ms.integral);
                o.results.push_back({{"mellin", name},
                                     {"s", s},
                                     {"series", float_json(ms.series, ms.series_error)},
                                     {"integral", float_json(ms.integral, ms.integral_error)}});
                o.plain << "mellin " << name << " s=" << s << ": series " << float_plain(ms.series, ms.series_error)
                        << ", integral " << float_plain(ms.integral, ms.integral_error) << '\n';
                o.checks.add(std::string("mellin ") + name + " s=" + std::to_string(s) + " within 1e-6", diff < 1e-6,
                             diff.to_string(3));
            };
            side("positive", m.positive);
            side("alternating", m.alternating);
        }
    }
}

// mfun --------------------------------------------------------------------

void run_mfun(Output &o, const Config &c, const std::optional<std::string> &s_text, std::optional<unsigned> special,
              bool check_integrals, bool edge_limit)
{
    if (special) {
        auto sv = mfun::m_special_values(*special);
        json neg = json::array(), res = json::array();
        o.plain << "M(0) = " << sv.m0.get_str() << '\n';
        for (std::size_t i = 0; i < sv.m_neg.size(); ++i) {
            neg.push_back(sv.m_neg[i].get_str());
            o.plain << "M(-" << i + 1 << ") = " << sv.m_neg[i].get_str() << '\n';
        }
        for (std::size_t i = 0; i < sv.residue.size(); ++i) {
            res.push_back(sv.residue[i].get_str());
            o.plain << "residue at s = 1/2 - " << i << ": " << sv.residue[i].get_str() << " * sqrt(2/pi)\n";
        }
        o.results.push_back({{"m0", sv.m0.get_str()},
                             {"m0_pipeline", sv.half_m0_pipeline.get_str()},
                             {"m_neg", neg},
                             {"residue_sqrt2_over_pi", res},
                             {"residue_zeros", sv.residue_zeros}});
        o.checks.add("M(0) two routes", sv.m0 == sv.half_m0_pipeline * 2);
        o.checks.add("M(0) = -13/18", sv.m0 == Rational(-13, 18));
        std::ostringstream csv;
        csv << "n,value\n";
        for (std::size_t i = 0; i < sv.m_neg.size(); ++i) {
            csv << -long(i + 1) << ',' << sv.m_neg[i].get_str() << '\n';
        }
        o.csv = csv.str();
    }
    if (s_text) {
        BigFloat s = BigFloat::parse(*s_text, c.prec);
        if (s > 1.0) {
            auto m = mfun::m_series(s, c.terms);
            o.results.push_back({{"s", *s_text}, {"series", float_json(m.value, m.error)}, {"partial", m.partial.to_string()}});
            o.plain << "M(" << *s_text << ") series: " << float_plain(m.value, m.error) << '\n';
            if (check_integrals) {
                auto i_log = mfun::m_integral_log(s);
                auto i_parts = mfun::m_integral_parts(s);
                o.results.push_back({{"integral_log", float_json(i_log.value, i_log.error)},
                                     {"integral_parts", float_json(i_parts.value, i_parts.error)}});
                o.plain << "integral of g^{s-1}(1+1/t): " << float_plain(i_log.value, i_log.error) << '\n';
                o.plain << "integral of g^s/t^3:     " << float_plain(i_parts.value, i_parts.error) << '\n';
                BigFloat worst = abs(i_log.value - i_parts.value);
                BigFloat d2 = abs(m.value - i_log.value);
                if (d2 > worst) {
                    worst = d2;
                }
                o.checks.add("series and integrals agree within 1e-5", worst < 1e-5, worst.to_string(3));
            }
        } else {
            BigFloat v = mfun::m_continued(s);
            o.results.push_back({{"s", *s_text}, {"continued", v.to_string()}});
            o.plain << "M(" << *s_text << ") continued: " << v.to_string() << '\n';
        }
    }
    if (edge_limit) {
        auto r = mfun::remark11_limit(std::min(c.prec, 256L));
        o.results.push_back({{"edge_limit",
                              {{"extrapolated", float_json(r.extrapolated, r.extrapolation_error)},
                               {"direct", float_json(r.direct_partial + r.direct_tail, r.direct_tail)},
                               {"target", r.target.to_string()}}}});
        o.plain << "limit: " << float_plain(r.extrapolated, r.extrapolation_error) << "  direct sum "
                << float_plain(r.direct_partial + r.direct_tail, r.direct_tail) << "  target " << r.target.to_string(20)
                << '\n';
        BigFloat diff = abs(r.extrapolated - r.target);
        o.checks.add("limit within 1e-3", diff < 1e-3, diff.to_string(3));
    }
    if (!special && !s_text && !edge_limit) {
        throw usage_error("mfun needs --s, --special or --edge-limit");
    }
}

// pyramid -----------------------------------------------------------------

template <typename Table>
json slices_json(const Table &t, unsigned n_max, const std::function<std::string(unsigned, unsigned, unsigned)> &cell)
{
    json out = json::array();
    for (unsigned n = 1; n <= n_max; ++n) {
        json rows = json::array();
        for (unsigned k = 1; k <= n; ++k) {
            json row = json::array();
            for (unsigned m = k; m <= n; ++m) {
                row.push_back(cell(n, k, m));
            }
            rows.push_back(row);
        }
        out.push_back({{"n", n}, {"rows", rows}});
    }
    (void)t;
    return out;
}

void run_pyramid(Output &o, unsigned n, const std::optional<std::string> &p_text, const std::string &variant, bool check)
{
    if (n < 1) {
        throw usage_error("--n must be >= 1");
    }
    o.config["n"] = n;
    o.config["variant"] = variant;
    std::ostringstream csv;
    csv << "n,k,m,value\n";
    if (!p_text) {
        if (variant != "a") {
            throw usage_error("--variant b needs --p");
        }
        auto t = pyramid::build(n);
        o.plain << pyramid::format_slices(t);
        o.results = slices_json(t, n, [&](unsigned a, unsigned k, unsigned m) { return t.at(a, k, m).get_str(); });
        for (unsigned a = 1; a <= n; ++a) {
            for (unsigned k = 1; k <= a; ++k) {
                for (unsigned m = k; m <= a; ++m) {
                    csv << a << ',' << k << ',' << m << ',' << t.at(a, k, m).get_str() << '\n';
                }
            }
        }
        if (check) {
            add_checks(o, pyramid::faces_check(t));
            o.checks.add("all entries positive", pyramid::all_positive(t));
            add_checks(o, pyramid::row_sum_check(t, 2));
            add_checks(o, pyramid::oracle_check_ei(std::min(n, pyramid::max_oracle_n)));
        }
    } else {
        o.config["p"] = *p_text;
        auto pt = pyramid::build_p(n);
        const auto &sym = variant == "b" ? pt.b : pt.a;
        if (*p_text == "sym") {
            o.plain << pyramid::format_slices(sym);
            o.results = slices_json(sym, n, [&](unsigned a, unsigned k, unsigned m) { return to_string(sym.at(a, k, m)); });
        } else {
            Rational p = parse_rational(*p_text);
            auto t = pyramid::evaluate(sym, p);
            o.plain << pyramid::format_slices(t, n);
            o.results = slices_json(t, n, [&](unsigned a, unsigned k, unsigned m) { return t.at(a, k, m).get_str(); });
            for (unsigned a = 1; a <= n; ++a) {
                for (unsigned k = 1; k <= a; ++k) {
                    for (unsigned m = k; m <= a; ++m) {
                        csv << a << ',' << k << ',' << m << ',' << t.at(a, k, m).get_str() << '\n';
                    }
                }
            }
            if (check) {
                add_checks(o, pyramid::oracle_check_tp(std::min(n, pyramid::max_oracle_n), p));
            }
        }
    }
    o.csv = csv.str();
}

// family ------------------------------------------------------------------

void run_family(Output &o, const Config &c, const std::string &check)
{
    Rational p = c.p_value();
    o.config["check"] = check;
    auto f = family::construct(p, c.order);
    const std::pair<const char *, const RSeries *> members[] = {{"delta", &f.delta}, {"y", &f.y},         {"gamma", &f.gamma},
                                                                {"omega", &f.omega}, {"T", &f.t_big}, {"psi", &f.psi}};
    std::ostringstream csv;
    csv << "member,n,value\n";
    for (auto &[name, s] : members) {
        json j = to_json(*s);
        j["member"] = name;
        o.results.push_back(j);
        o.plain << name << ":";
        for (std::size_t n = 1; n <= s->order(); ++n) {
            o.plain << ' ' << (*s)[n].get_str();
            csv << name << ',' << n << ',' << (*s)[n].get_str() << '\n';
        }
        o.plain << '\n';
    }
    o.csv = csv.str();
    bool all = check == "all";
    bool nz = p != 0;
    const std::size_t N = c.order;
    auto pole_limit = [&]() {
        if (p < 0 || p >= 1) {
            return;
        }
        auto L = family::thm44_limit(p, c.prec);
        o.results.push_back({{"pole_limit", float_json(L.value, L.error)}, {"target", L.target.to_string()}});
        o.plain << "pole limit: " << float_plain(L.value, L.error) << "  target " << L.target.to_string(20) << '\n';
        BigFloat d = abs(L.value - L.target);
        o.checks.add("pole limit within 1e-3", d < 1e-3, d.to_string(3));
    };
    if (all || check == "41") {
        if (nz) {
            add_checks(o, family::prop41_check(f));
            add_checks(o, family::thm41_check(p, std::min(N, family::max_composition_order)));
        }
    }
    if (all || check == "42") {
        add_checks(o, family::prop42_check(f));
        if (nz) {
            add_checks(o, family::remark42_check(p, N));
        }
    }
    if (all || check == "43") {
        add_checks(o, family::prop43_check(f));
        if (nz) {
            add_checks(o, family::thm43_check(p, N));
        }
    }
    if (all || check == "44") {
        add_checks(o, family::rescaling_check(f));
        pole_limit();
    }
    if (all || check == "45") {
        add_checks(o, family::prop45_check(N));
        add_checks(o, family::t2_factor_check(p, N));
        if (nz) {
            add_checks(o, family::thm45_check(p, N));
        }
    }
    if (all || check == "obs") {
        add_checks(o, family::observations_check(f, std::min(c.prec, 256L)));
        for (unsigned n : {2u, 3u}) {
            add_checks(o, family::corollary41_check(n, N));
        }
    }
    if (all) {
        add_checks(o, family::chain_coherence(f));
    }
}

// verify ------------------------------------------------------------------

void run_verify(Output &o, const Config &c, bool full, bool timing)
{
    o.config["mode"] = full ? "full" : "quick";
    auto results = acceptance::run();
    for (const auto &r : results) {
        json j = {{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
        if (timing) {
            j["seconds"] = r.seconds;
        }
        o.results.push_back(j);
        o.plain << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.title << "  " << r.detail;
        if (timing) {
            o.plain << "  (" << r.seconds << " s)";
        }
        o.plain << '\n';
        o.checks.add("criterion " + std::to_string(r.id), r.pass, r.detail);
    }
    if (!full) {
        return;
    }
    // wider sweeps than the acceptance list
    for (const char *ps : {"1", "2", "1/2", "-1", "3", "-2", "1/3", "2/3", "-1/2", "0"}) {
        add_checks(o, family::full_suite(parse_rational(ps), 14), std::string("family p=") + ps + ": ");
    }
    auto t = pyramid::build(20);
    add_checks(o, pyramid::faces_check(t), "pyramid n<=20: ");
    add_checks(o, pyramid::row_sum_check(t, Rational(3, 2)), "pyramid n<=20: ");
    add_checks(o, pyramid::oracle_check_ei(pyramid::max_oracle_n), "pyramid: ");
    for (const char *ps : {"3", "-2", "1/3", "-3/2"}) {
        add_checks(o, pyramid::oracle_check_tp(8, parse_rational(ps)), "pyramid: ");
    }
    auto scan = tchain::periodicity_scan(c.seed, 5000, 8, 16);
    o.checks.add("5000 random series not periodic", scan.periodic == 0, std::to_string(scan.periodic));
    for (std::uint64_t s = 0; s < 50; ++s) {
        add_checks(o, binom::property_suite(gen::random_normalized(c.seed + s, 12), 12),
                   "binomial seed " + std::to_string(c.seed + s) + ": ");
    }
    for (const char *pl : {"1/10", "1/4", "1/3", "2/3", "9/10"}) {
        auto L = family::thm44_limit(parse_rational(pl), c.prec);
        BigFloat d = abs(L.value - L.target);
        o.checks.add(std::string("pole limit p=") + pl, d < 1e-3, d.to_string(3));
    }
    o.plain << "extended checks: " << o.checks.size() - results.size() << " run\n";
}

void emit(const Output &o, const std::string &format)
{
    if (format == "json") {
        json checks = json::array();
        for (const auto &ch : o.checks.checks()) {
            checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        }
        json top = {{"subcommand", o.subcommand}, {"config", o.config}, {"results", o.results}, {"checks", checks}};
        std::cout << top.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        if (!o.csv) {
            throw usage_error("no CSV table for this subcommand");
        }
        std::cout << *o.csv;
        return;
    }
    std::cout << o.plain.str();
    if (o.checks.size() > 0) {
        std::size_t passed = 0;
        for (const auto &ch : o.checks.checks()) {
            passed += ch.pass ? 1 : 0;
            if (!ch.pass) {
                std::cout << "FAIL " << ch.name << (ch.detail.empty() ? "" : "  " + ch.detail) << '\n';
            }
        }
        std::cout << "checks: " << passed << "/" << o.checks.size() << " passed\n";
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Power series, coefficient tables and verification for the iterated logarithmic-derivative chain"};
    app.require_subcommand(1);
    Config cfg;
    auto common = [&](CLI::App *sub) {
        sub->add_option("--order,-N", cfg.order, "truncation order")->check(CLI::Range(1, 200));
        sub->add_option("--prec", cfg.prec, "working precision in bits")->check(CLI::Range(53, 8192));
        sub->add_option("--p", cfg.p, "parameter p (rational, e.g. 1/2)");
        sub->add_option("--format", cfg.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));
        sub->add_option("--seed", cfg.seed, "seed for random series");
    };

    std::string fn = "exp", op = "none";
    auto *series = app.add_subcommand("series", "expand a named series");
    common(series);
    series->add_option("--fn", fn, "x, exp, xexp, x-x2, sin, sinh, tanh, y or random");
    series->add_option("--op", op, "none, inverse, t, tinv")->check(CLI::IsMember({"none", "inverse", "t", "tinv"}));

    auto *binom_cmd = app.add_subcommand("binom", "polynomials of binomial type and their identities");
    common(binom_cmd);
    binom_cmd->add_option("--fn", fn, "generator name or random");

    int k = 2;
    bool find_period = false;
    unsigned max_k = 8, scan = 0;
    auto *tchain_cmd = app.add_subcommand("tchain", "iterates of the operator f -> f/f'");
    common(tchain_cmd);
    tchain_cmd->add_option("--seed-fn", fn, "seed series name or random");
    tchain_cmd->add_option("--k", k, "chain length (negative: inverse direction)");
    tchain_cmd->add_flag("--find-period", find_period, "smallest k with T^k f = f");
    tchain_cmd->add_option("--max-k", max_k, "largest period tried")->check(CLI::Range(1, 64));
    tchain_cmd->add_option("--scan", scan, "scan this many random series for periodicity");

    std::vector<std::string> which{"one", "ln2", "mu1"};
    std::size_t exact_upto = soldner::default_exact_upto;
    bool hyp = false, mellin = false;
    auto *sold = app.add_subcommand("soldner", "coefficients b_n and their series");
    common(sold);
    sold->add_option("--terms", cfg.terms, "number of coefficients")->check(CLI::Range(2, 1000000));
    sold->add_option("--series", which, "lnmu, mu1, one, ln2, pi2");
    sold->add_option("--exact-upto", exact_upto, "b_n from exact a_n up to this index");
    sold->add_flag("--scan", hyp, "monotonicity scan of b_n and n b_n");
    sold->add_flag("--mellin", mellin, "series against integrals at s = 1, 2");

    std::optional<std::string> s_text;
    std::optional<unsigned> special;
    bool check_integrals = false, edge_limit = false;
    auto *mf = app.add_subcommand("mfun", "the function M(s)");
    common(mf);
    mf->add_option("--terms", cfg.terms, "terms of the defining series")->check(CLI::Range(1, 100000000));
    mf->add_option("--s", s_text, "argument s (decimal)");
    mf->add_option("--special", special, "exact values at 0, -1..-N and residues")->check(CLI::Range(0u, mfun::max_special_n));
    mf->add_flag("--check-integrals", check_integrals, "compare with both integral forms");
    mf->add_flag("--edge-limit", edge_limit, "regularized limit at the boundary");

    unsigned pn = 6;
    std::optional<std::string> pp;
    std::string variant = "a";
    bool pcheck = false;
    auto *pyr = app.add_subcommand("pyramid", "coefficient pyramid of the n-th derivative");
    pyr->add_option("--n", pn, "largest slice")->check(CLI::Range(1u, 60u));
    pyr->add_option("--p", pp, "rational p, or sym for polynomials in p");
    pyr->add_option("--variant", variant, "a or b")->check(CLI::IsMember({"a", "b"}));
    pyr->add_flag("--check", pcheck, "faces, positivity, row sums, derivative oracle");
    pyr->add_option("--format", cfg.format, "plain, json or csv")->check(CLI::IsMember({"plain", "json", "csv"}));

    std::string fcheck = "all";
    auto *fam = app.add_subcommand("family", "the parameterized family Delta_p, y_p, gamma_p, omega_p, T_p, psi_p");
    common(fam);
    fam->add_option("--check", fcheck, "41, 42, 43, 44, 45, obs or all")
        ->check(CLI::IsMember({"41", "42", "43", "44", "45", "obs", "all"}));

    bool quick = false, full = false, timing = false;
    auto *ver = app.add_subcommand("verify", "acceptance suite");
    common(ver);
    ver->add_flag("--quick", quick, "the ten acceptance criteria (default)");
    ver->add_flag("--full", full, "acceptance criteria plus wider sweeps");
    ver->add_flag("--timing", timing, "report run times (output no longer reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    try {
        CLI::App *sub = app.get_subcommands().front();
        out.subcommand = sub->get_name();
        out.config = config_json(cfg);
        if (sub == series) {
            run_series(out, cfg, fn, op);
        } else if (sub == binom_cmd) {
            run_binom(out, cfg, fn);
        } else if (sub == tchain_cmd) {
            run_tchain(out, cfg, fn, k, find_period, max_k, scan);
        } else if (sub == sold) {
            run_soldner(out, cfg, which, exact_upto, hyp, mellin);
        } else if (sub == mf) {
            run_mfun(out, cfg, s_text, special, check_integrals, edge_limit);
        } else if (sub == pyr) {
            out.config = json::object();
            run_pyramid(out, pn, pp, variant, pcheck);
        } else if (sub == fam) {
            run_family(out, cfg, fcheck);
        } else if (sub == ver) {
            if (quick && full) {
                throw usage_error("--quick and --full exclude each other");
            }
            run_verify(out, cfg, full, timing);
        }
        emit(out, cfg.format);
    } catch (const usage_error &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const accuracy_error &e) {
        std::cerr << "accuracy error: " << e.what() << " (best value " << e.partial() << ")\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return out.checks.all_pass() ? 0 : 1;
}
