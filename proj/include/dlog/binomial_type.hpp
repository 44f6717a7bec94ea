#ifndef DLOG_BINOMIAL_TYPE_HPP
#define DLOG_BINOMIAL_TYPE_HPP

#include <cstddef>
#include <vector>

#include <dlog/report.hpp>
#include <dlog/trunc_series.hpp>

namespace dlog::binom
{

// p_n(a) = n! [x^n] exp(a phi(x)), phi = f^inv, for n = 0..N.
struct Sequence {
    RSeries generator;  // f, order >= N
    RSeries phi;        // f^inv at order N
    std::vector<AlphaPoly> polys;

    std::size_t size() const { return polys.size(); }
    std::size_t max_n() const { return polys.size() - 1; }
};

constexpr std::size_t default_n = 12;

Sequence from_generator(const RSeries &f, std::size_t N = default_n);

// Indices n where an identity failed; empty means it held for every n.
struct IndexCheck {
    std::vector<std::size_t> failing;
    bool pass() const { return failing.empty(); }
};

// p_n(a+b) = sum_k C(n,k) p_k(a) p_{n-k}(b) as a two-variable identity.
IndexCheck convolution_check(const Sequence &seq);

// sum_k op_k (d/da)^k q. The operator series must reach order deg q.
AlphaPoly apply_operator_series(const RSeries &op, const AlphaPoly &q);

// f(d/da) p_n = n p_{n-1}
IndexCheck delta_check(const Sequence &seq);
// (f/f')(d/da) p_n = n p_n / a
IndexCheck t_check(const Sequence &seq);

// Sequence of the generator f e^{-x}: q_n(a) = a p_n(a+n)/(a+n). Computed by
// the shift formula and again from the generator; consistency_error if the
// division leaves a remainder or the routes disagree.
Sequence exp_deform(const Sequence &seq);

// (f'(d/da))^n (p_n/a) = t_n/a, t_n generated by Tf.
IndexCheck tchain_poly_transform(const Sequence &seq, std::size_t N);

// -ln(1 - A x e^{gamma}) with gamma = (f e^{-x})^inv, coefficient n equal to
// (1/n) sum_{k<n} p_k(n) A^{n-k} / k!. Returns the polynomial route;
// consistency_error when the direct series expansion disagrees.
RSeries log_deform_series(const Sequence &seq, const Rational &A, std::size_t N);

// p_n(1) = n! [x^n] exp(phi) for each n.
IndexCheck value_at_one_check(const Sequence &seq);

// Convolution, delta, T, deformation, transform and the three T/deformation
// identities for one generator.
Report property_suite(const RSeries &f, std::size_t N);

} // namespace dlog::binom

#endif
