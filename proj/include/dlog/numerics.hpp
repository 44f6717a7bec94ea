#ifndef DLOG_NUMERICS_HPP
#define DLOG_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include <dlog/bigfloat.hpp>
#include <dlog/rational.hpp>

namespace dlog::num
{

constexpr long max_constant_prec = 4096;

struct ConstantSet {
    BigFloat gamma;
    BigFloat pi;
    BigFloat ln2;
};

// gamma (Euler-Maclaurin on the harmonic numbers), pi (Gauss-Legendre AGM)
// and ln 2 (atanh series), each compared against MPFR's own constant and a
// 60-digit literal. A disagreement raises consistency_error. Results are
// cached per precision.
const ConstantSet &constants(long prec);

inline BigFloat euler_gamma(long prec) { return constants(prec).gamma; }
inline BigFloat pi(long prec) { return constants(prec).pi; }
inline BigFloat ln2(long prec) { return constants(prec).ln2; }

// Euler-Maclaurin evaluation of gamma with an explicit remainder bound.
struct GammaEM {
    BigFloat value;
    BigFloat remainder_bound;
    unsigned n;  // harmonic cutoff
    unsigned m;  // Bernoulli terms used
};
GammaEM gamma_euler_maclaurin(long prec);
BigFloat pi_agm(long prec);
BigFloat ln2_series(long prec);

// Exponential integral Ei(x), x != 0, at the precision of x. Power series
// with enough guard bits to absorb the cancellation for x < 0; asymptotic
// series once -x exceeds the precision-dependent threshold below.
BigFloat ei(const BigFloat &x);
// E1(x) = -Ei(-x) for x > 0.
BigFloat e1(const BigFloat &x);
// li(x) = Ei(ln x), x > 0, x != 1.
BigFloat li(const BigFloat &x);
// The x < -threshold(prec) region uses the asymptotic expansion.
double ei_asymptotic_threshold(long prec);

// The positive zero of li, by bisection on [1.4, 1.5] then Newton.
BigFloat mu_root(long prec);

// Principal branch of Lambert W on (-1/e, inf) by Halley iteration.
BigFloat lambert_w(const BigFloat &x);

// Integrand of a definite integral. Besides x it receives the distances
// gap_left = x - a and gap_right = b - x computed without cancellation, so
// endpoint singularities such as log(1 - t) can be evaluated accurately.
// For a half-infinite interval gap_right is +inf.
using Integrand = std::function<BigFloat(const BigFloat &x, const BigFloat &gap_left, const BigFloat &gap_right)>;

struct QuadOptions {
    long prec = BigFloat::default_prec;
    double rel_tol = 1e-30;
    int max_level = 10;
};

struct QuadResult {
    BigFloat value;
    BigFloat error;  // |difference of the last two levels|
    int levels = 0;
    long evaluations = 0;
};

// Tanh-sinh quadrature on a finite interval [a, b]; halves the step until
// two levels agree to rel_tol. Throws accuracy_error (with the partial
// value) if max_level is reached first.
QuadResult quad(const Integrand &f, const BigFloat &a, const BigFloat &b, const QuadOptions &opt = {});
// Integral over [a, inf): [a, a+1] directly, then x = a + 1 + u/(1-u).
QuadResult quad_to_infinity(const Integrand &f, const BigFloat &a, const QuadOptions &opt = {});

enum class SumMode { plain, euler, cesaro };

struct SeriesEval {
    BigFloat value;
    BigFloat error;
    std::vector<BigFloat> partial_sums;
};

// sum_k c_k x^k from k = 0. plain: last partial sum, error = last term.
// euler: repeated averaging of neighbouring partial sums (alternating input).
// cesaro: arithmetic mean of the partial sums.
SeriesEval eval_series(const std::vector<BigFloat> &coeffs, const BigFloat &x, SumMode mode = SumMode::plain);
SeriesEval eval_series(const std::vector<Rational> &coeffs, const BigFloat &x, SumMode mode = SumMode::plain);

struct Accelerated {
    BigFloat value;
    BigFloat error;
};

// Euler-Knopp style: average the last depth+1 partial sums pairwise depth
// times. The error is the spread of the final pair.
Accelerated euler_average(const std::vector<BigFloat> &partial_sums, std::size_t depth);
Accelerated cesaro_mean(const std::vector<BigFloat> &partial_sums);

// Neville extrapolation of v(h) to h = 0 from samples (h_i, v_i).
Accelerated richardson(const std::vector<BigFloat> &h, const std::vector<BigFloat> &v);

} // namespace dlog::num

#endif
