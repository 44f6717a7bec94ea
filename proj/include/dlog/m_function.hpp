#ifndef DLOG_M_FUNCTION_HPP
#define DLOG_M_FUNCTION_HPP

#include <cstddef>
#include <vector>

#include <dlog/bigfloat.hpp>
#include <dlog/report.hpp>
#include <dlog/trunc_series.hpp>

namespace dlog::mfun
{

// sum_{k=0}^n n^k/k!
Rational partial_exp_sum(unsigned n);

// sum x^n P(n) = 1/(1+W(-x))^2 and sum x^n P(n)/n = -W(-x) - ln(1+W(-x)),
// both exactly to order N with W from compositional inversion of x e^x.
Report genfunc_checks(std::size_t N);

// [(-t - ln(1-t))/(t^2/2)]^s = sum A_k(s) t^k, k = 0..K, over Q[s].
std::vector<AlphaPoly> a_polys(std::size_t K);
// The base series 1 + 2t/3 + 2t^2/4 + ... at order K.
RSeries a_base_series(std::size_t K);

constexpr unsigned max_special_n = 8;

// Closed-form values. The half-integer residue
//   lim_{s -> -N} M(s + 1/2)(s + N) = residue[N] * sqrt(2/pi)
// is kept as its rational cofactor.
struct SpecialValues {
    Rational m0;                     // M(0)
    Rational half_m0_pipeline;       // A_0(0)/(-2) + lim A_2(s)/(2s)
    std::vector<Rational> m_neg;     // m_neg[N-1] = M(-N), N = 1..max
    std::vector<Rational> residue;   // residue[N], N = 0..max
    std::vector<unsigned> residue_zeros;
};
// M(0), M(-1..-N) and residues for N' = 0..N. The residue cofactor is also
// derived from 2^{1-s} A_{2N+1}(s) / (2 Gamma(s+1)) at s = 1/2 - N with the
// half-integer Gamma value in closed form; disagreement throws
// consistency_error.
SpecialValues m_special_values(unsigned N);

// M(s) from the defining series. n <= 64 uses exact partial sums; beyond,
// e^{-n} P(n) = 1/2 + (1 - theta(n)) n^n e^{-n}/n! with the asymptotic
// theta(n) and Stirling's series in long double, Kahan summed.
struct SeriesM {
    BigFloat partial;
    BigFloat tail;    // Euler-Maclaurin estimate of the remainder
    BigFloat value;   // partial + tail
    BigFloat error;   // twice the first neglected tail term, theta truncation, rounding
};
SeriesM m_series(const BigFloat &s, std::size_t terms);

struct IntegralM {
    BigFloat value;
    BigFloat error;
};
// Gamma(s) M(s) = int_0^1 g^{s-1} (1 + 1/t) dt, g = -t - ln(1-t); s > 1.
IntegralM m_integral_log(const BigFloat &s);
// Gamma(s) M(s) = (2/s) int_0^1 g^s / t^3 dt; s > 1.
IntegralM m_integral_parts(const BigFloat &s);

struct MNumeric {
    SeriesM series;
    IntegralM i_log, i_parts;
};
MNumeric m_numeric(const BigFloat &s, std::size_t terms);

// Analytic continuation of M through the shifted zeta sum:
//   2^{s-1} Gamma(s+1) M(s) = sum_{k<K} A_k(s)/(2s-2+k)
//       + sum_{k>=K} A_k(s) 2^{-(2s-2+k)}/(2s-2+k)
//       + int_{1/2}^1 t^{2s-3} (F(t)^s - sum_{k<K} A_k(s) t^k) dt
// with A_k(s) evaluated numerically. singularity_error at the poles of the
// individual terms (2s integer <= 2) and at negative integers.
BigFloat m_continued(const BigFloat &s);

// -W(-x/e) - ln(1 + W(-x/e)) + ln(1-x)/2 at x = 1 - eps.
BigFloat edge_function(const BigFloat &eps);

struct EdgeLimit {
    BigFloat extrapolated;
    BigFloat extrapolation_error;
    BigFloat at_smallest_eps;
    BigFloat direct_partial;   // sum_{n<=N} [e^{-n} P(n)/n - 1/(2n)]
    BigFloat direct_tail;      // (2/3) sqrt(2/(pi N)) leading remainder
    std::size_t direct_terms = 0;
    BigFloat target;           // 1 - ln 2 / 2
};
EdgeLimit remark11_limit(long prec, std::size_t direct_terms = 100000);

// Partial sums of sum_{k<=K} A_k(s)/(2s-2+k) for the given K and the value
// 2^{s-1} Gamma(s+1) M(s) they are compared with.
struct Trend17 {
    std::vector<std::pair<std::size_t, BigFloat>> partial;
    BigFloat target;
};
Trend17 trend_17(long s, const std::vector<std::size_t> &Ks, long prec);

} // namespace dlog::mfun

#endif
