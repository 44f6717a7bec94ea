#ifndef DLOG_SOLDNER_HPP
#define DLOG_SOLDNER_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <dlog/bigfloat.hpp>
#include <dlog/report.hpp>
#include <dlog/trunc_series.hpp>

namespace dlog::soldner
{

// a_1..a_N by (1-n) a_n = sum_{k=1}^{n-1} (n-k)/k a_k a_{n-k}. Index 0 holds 0.
// For n <= 12 the values are compared against the composition formula and
// against Lagrange inversion; a mismatch throws consistency_error.
std::vector<Rational> a_coeffs(std::size_t N);

// a_n = (1/n) sum_k (-n)^k/k! sum over compositions of n-1 into k parts of
// prod 1/(m_i m_i!). Evaluated by a convolution table.
Rational a_composition_formula(std::size_t n);

// psi = (x exp(int_0^x (e^t-1)/t dt))^inv at order N.
RSeries psi_series(std::size_t N);

// exp(psi) - 1 has coefficients a_n/n. Returns the first n where the series
// built from `a` breaks this, or nothing.
std::optional<std::size_t> exp_psi_identity(const std::vector<Rational> &a);

// b_n = (-1)^{n-1} a_n e^{-gamma n} > 0.
struct BCoeffs {
    std::vector<BigFloat> b;         // index 0 unused
    std::size_t exact_upto = 0;      // b_n for n <= exact_upto come from exact a_n
    long prec = 0;
    double overlap_rel_diff = 0;     // exact route vs float recurrence on the overlap
    std::size_t N() const { return b.size() - 1; }
};

constexpr std::size_t default_exact_upto = 256;

// Exact a_n for n <= exact_upto converted with one e^{-gamma} power ladder;
// past that the positive recurrence (n-1) b_n = sum (n-k)/k b_k b_{n-k},
// evaluated with fused multiply-adds at prec + 32 bits. The pure float
// recurrence started from b_1 = e^{-gamma} is compared with the exact route on
// the overlap; relative disagreement above 2^{-prec+log2 n+8} throws
// consistency_error.
BCoeffs b_coeffs(std::size_t N, long prec, std::size_t exact_upto = default_exact_upto);

enum class Which { ln_mu, mu_minus_one, one, ln2, pi2 };
std::optional<Which> parse_which(const std::string &name);  // lnmu, mu1, one, ln2, pi2
std::string which_name(Which w);

struct SeriesValue {
    Which which{};
    std::size_t terms = 0;
    BigFloat partial;           // raw partial sum
    BigFloat value;             // partial + tail model, or accelerated value
    BigFloat error;             // estimated remainder of `value`
    BigFloat target;            // closed form from the theorem
    std::optional<BigFloat> cesaro, euler;  // ln_mu only
    bool asserted = true;       // false for the ln_mu series
};

// The b-series
//   one:          sum b_n/n                 -> 1
//   ln2:          sum b_n/n^2               -> ln 2
//   pi2:          sum b_n/n^3               -> pi^2/6 - sum_{n>=0} 4^{-n}(2n+1)^{-2}
//   mu_minus_one: sum (-1)^{n-1} b_n/n      -> mu - 1 (Euler averaged)
//   ln_mu:        sum (-1)^{n-1} b_n        -> ln mu, convergence unknown;
//                 reported with Cesaro and Euler columns, never asserted.
SeriesValue series_theorem21(Which which, const BCoeffs &b);

// sum_{n>N} f(n)/n^{s+1} where f(t) = t b_t is modelled as c_0 + c_1/ln t +
// c_2/ln^2 t through n = N/4, N/2, N. `error` is the distance to the
// two-point linear model.
struct TailEstimate {
    BigFloat value;
    BigFloat error;
};
TailEstimate b_tail(const BCoeffs &b, int s);

struct SquareSeries {
    BigFloat lhs;       // partial sum of b_n/n^3
    BigFloat tail;      // modelled remainder
    BigFloat rhs;       // pi^2/6 - aux
    BigFloat aux;       // sum 4^{-n}(2n+1)^{-2}, n >= 0
};
SquareSeries series_remark24(const BCoeffs &b);
BigFloat square_series_rhs(long prec, BigFloat *aux = nullptr);

// Exploratory scans, not theorems.
struct HypothesisScan {
    std::size_t monotone_violations = 0;     // b_n <= b_{n+1}
    std::size_t nb_increase_violations = 0;  // n b_n >= (n+1) b_{n+1}
    double cesaro_mean = 0;                  // (b_1 + 2 b_2 + ... + N b_N)/N
    double nb_last = 0;                      // N b_N
    double b_last = 0;
    std::vector<std::pair<std::size_t, double>> nb_trend;
};
HypothesisScan hypothesis_scan(const BCoeffs &b);

// Gamma(s+1) sum b_n/n^s against int_0^inf E1(x)^s dx (first) and
// Gamma(s+1) sum (-1)^{n-1} b_n/n^s against int_0^{ln mu} (-Ei(x))^s dx.
struct MellinSide {
    BigFloat series;
    BigFloat series_error;
    BigFloat integral;
    BigFloat integral_error;
};
struct MellinCheck {
    int s = 0;
    MellinSide positive;     // E1 over [0, inf)
    MellinSide alternating;  // -Ei over [0, ln mu]
};
MellinCheck mellin_check(int s, const BCoeffs &b);

// n, a_n (exact, when known), b_n
void write_csv(std::ostream &out, const std::vector<Rational> &a, const BCoeffs &b, int digits = 20);

} // namespace dlog::soldner

#endif
