#include <dlog/binomial_type.hpp>

#include <string>

#include <dlog/generators.hpp>
#include <dlog/t_chain.hpp>

namespace dlog::binom
{

namespace
{

using BiPoly = Poly<AlphaPoly>;  // outer variable b, coefficients in Q[a]

// p(b) with Q[a]-constant coefficients.
BiPoly in_beta(const AlphaPoly &p)
{
    std::vector<AlphaPoly> c;
    for (const auto &x : p.coeffs()) {
        c.push_back(AlphaPoly::constant(x));
    }
    return BiPoly(std::move(c), "β");
}

std::string describe(const IndexCheck &c)
{
    if (c.pass()) {
        return {};
    }
    std::string s = "failing n:";
    for (auto n : c.failing) {
        s += " " + std::to_string(n);
    }
    return s;
}

} // namespace

Sequence from_generator(const RSeries &f, std::size_t N)
{
    if (f.order() < N) {
        throw usage_error("generator order below N");
    }
    tchain::require_normalized(f, "from_generator");
    Sequence s{f, comp_inverse(f.truncate(N)), {}};
    PSeries e = exp(scale(lift(s.phi), AlphaPoly::variable()));
    for (std::size_t n = 0; n <= N; ++n) {
        s.polys.push_back(e[n] * Rational(factorial(static_cast<unsigned>(n))));
    }
    return s;
}

IndexCheck convolution_check(const Sequence &seq)
{
    IndexCheck out;
    BiPoly a_plus_b(std::vector<AlphaPoly>{AlphaPoly::variable(), AlphaPoly::constant(1)}, "β");
    std::vector<BiPoly> pb;
    for (const auto &p : seq.polys) {
        pb.push_back(in_beta(p));
    }
    for (std::size_t n = 0; n < seq.size(); ++n) {
        BiPoly lhs = seq.polys[n].evaluate(a_plus_b);
        BiPoly rhs(std::vector<AlphaPoly>{}, "β");
        for (std::size_t k = 0; k <= n; ++k) {
            Rational c = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
            rhs += BiPoly::constant(seq.polys[k] * c, "β") * pb[n - k];
        }
        if (lhs != rhs) {
            out.failing.push_back(n);
        }
    }
    return out;
}

AlphaPoly apply_operator_series(const RSeries &op, const AlphaPoly &q)
{
    if (q.degree() > static_cast<int>(op.order())) {
        throw usage_error("operator series order below polynomial degree");
    }
    AlphaPoly acc(std::vector<Rational>{}, q.var());
    AlphaPoly d = q;
    for (std::size_t k = 0; !d.is_zero(); ++k) {
        if (op[k] != 0) {
            acc += d * op[k];
        }
        d = d.derivative();
    }
    return acc;
}

IndexCheck delta_check(const Sequence &seq)
{
    IndexCheck out;
    for (std::size_t n = 1; n < seq.size(); ++n) {
        AlphaPoly lhs = apply_operator_series(seq.generator, seq.polys[n]);
        if (lhs != seq.polys[n - 1] * Rational(static_cast<long>(n))) {
            out.failing.push_back(n);
        }
    }
    return out;
}

IndexCheck t_check(const Sequence &seq)
{
    IndexCheck out;
    RSeries tf = tchain::t_apply(seq.generator.truncate(seq.max_n()));
    for (std::size_t n = 1; n < seq.size(); ++n) {
        AlphaPoly lhs = apply_operator_series(tf, seq.polys[n]);
        AlphaPoly rhs = seq.polys[n].divide_by_var() * Rational(static_cast<long>(n));
        if (lhs != rhs) {
            out.failing.push_back(n);
        }
    }
    return out;
}

Sequence exp_deform(const Sequence &seq)
{
    std::size_t N = seq.max_n();
    RSeries g = seq.generator.truncate(N) * gen::exp_scaled(-1, N);
    Sequence regen = from_generator(g, N);
    AlphaPoly alpha = AlphaPoly::variable();
    for (std::size_t n = 0; n <= N; ++n) {
        if (n == 0) {
            continue;
        }
        Rational nn(static_cast<long>(n));
        auto [quot, rem] = seq.polys[n].shift(nn).divide_linear(nn);
        if (rem != 0) {
            throw consistency_error("p_n(a+n) not divisible by a+n at n = " + std::to_string(n));
        }
        AlphaPoly q = alpha * quot;
        if (q != regen.polys[n]) {
            throw consistency_error("deformed sequence disagrees with regeneration at n = " + std::to_string(n));
        }
    }
    return regen;
}

IndexCheck tchain_poly_transform(const Sequence &seq, std::size_t N)
{
    if (N > seq.max_n()) {
        throw usage_error("transform check beyond sequence length");
    }
    IndexCheck out;
    RSeries f = seq.generator.truncate(N);
    Sequence t = from_generator(tchain::t_apply(f), N);
    RSeries fp = derivative(f);
    RSeries op = RSeries::one(fp.order());
    for (std::size_t n = 1; n <= N; ++n) {
        op = op * fp;
        AlphaPoly lhs = apply_operator_series(op, seq.polys[n].divide_by_var());
        if (lhs != t.polys[n].divide_by_var()) {
            out.failing.push_back(n);
        }
    }
    return out;
}

RSeries log_deform_series(const Sequence &seq, const Rational &A, std::size_t N)
{
    if (N > seq.max_n()) {
        throw usage_error("log_deform_series beyond sequence length");
    }
    std::vector<Rational> c(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        Rational nn(static_cast<long>(n));
        Rational sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            sum += seq.polys[k](nn) * pow(A, static_cast<long>(n - k)) / Rational(factorial(static_cast<unsigned>(k)));
        }
        c[n] = sum / nn;
    }
    RSeries poly_route(std::move(c));

    RSeries gamma = comp_inverse(seq.generator.truncate(N) * gen::exp_scaled(-1, N));
    RSeries inner = RSeries::one(N) - RSeries::x(N) * exp(gamma) * A;
    RSeries direct = -log(inner);
    if (direct != poly_route) {
        throw consistency_error("log deformation: polynomial and direct routes disagree");
    }
    return poly_route;
}

IndexCheck value_at_one_check(const Sequence &seq)
{
    IndexCheck out;
    RSeries e = exp(seq.phi);
    for (std::size_t n = 0; n < seq.size(); ++n) {
        if (seq.polys[n](Rational(1)) != e[n] * Rational(factorial(static_cast<unsigned>(n)))) {
            out.failing.push_back(n);
        }
    }
    return out;
}

Report property_suite(const RSeries &f, std::size_t N)
{
    Report r;
    Sequence s = from_generator(f, N);
    auto c = convolution_check(s);
    r.add("convolution", c.pass(), describe(c));
    auto d = delta_check(s);
    r.add("delta operator", d.pass(), describe(d));
    auto t = t_check(s);
    r.add("T operator", t.pass(), describe(t));
    try {
        exp_deform(s);
        r.add("exp deformation", true);
    } catch (const consistency_error &e) {
        r.add("exp deformation", false, e.what());
    }
    auto tr = tchain_poly_transform(s, N);
    r.add("transform (f')^n", tr.pass(), describe(tr));
    auto v1 = value_at_one_check(s);
    r.add("p_n(1)", v1.pass(), describe(v1));
    r.merge(tchain::identities_310(f, N));
    return r;
}

} // namespace dlog::binom
