#ifndef DLOG_FAMILY_P_HPP
#define DLOG_FAMILY_P_HPP

#include <cstddef>
#include <vector>

#include <dlog/bigfloat.hpp>
#include <dlog/report.hpp>
#include <dlog/trunc_series.hpp>

namespace dlog::family
{

// Delta_p = (e^{px}-1)/p (x at p = 0), y = Delta_p e^{-x}, gamma = y^inv,
// omega = (T y)^inv, t_big = T^{-1} y, psi = t_big^inv.
struct PFamily {
    Rational p;
    std::size_t order = 0;
    RSeries delta{0}, y{0}, gamma{0}, omega{0}, t_big{0}, psi{0};
};

PFamily construct(const Rational &p, std::size_t N);

// Closed forms against the inversion-built members. p != 0 unless noted.
Report prop41_check(const PFamily &f);
Report prop42_check(const PFamily &f);  // p = 0: omega_0 = x/(1+x)
Report prop43_check(const PFamily &f);  // p = 0: x e^{gamma_0} = (x e^{-x})^inv

// Exact identities, one quadrature, addition laws at sample points
// (at prec bits); rescaling invariants y_{p/(p-1)}, gamma_{p/(p-1)}, y_{-p}.
Report observations_check(const PFamily &f, long prec = 128);
Report obs47a_check(const PFamily &f);

// T_{p/(p-1)}, psi_{p/(p-1)}, T_{-p}; the rescaling applied twice is the identity.
Report rescaling_check(const PFamily &f);
// Both product formulas for n.
Report corollary41_check(unsigned n, std::size_t N);
// psi_1, psi_{-1}, psi_2, psi_{-2}, psi_{1/2}.
Report prop45_check(std::size_t N);

constexpr std::size_t max_composition_order = 12;
// Composition sum with Bernoulli polynomials vs (e^{a psi} - 1)/a over Q[a].
Report thm41_check(const Rational &p, std::size_t N);
// ln gamma' coefficients.
Report thm43_check(const Rational &p, std::size_t N);
// The four binomial expansions for the inverses of y, T y, T^2 y, y y'.
Report thm45_check(const Rational &p, std::size_t N);
// a(nu(a+p-1) - nu(a-1))/p = n nu(a), nu_n = n! [x^n] e^{a psi}.
Report remark42_check(const Rational &p, std::size_t N);
// T^2 y = Delta_p (1 - Delta_{-p}) = y y' e^{(2-p)x}.
Report t2_factor_check(const Rational &p, std::size_t N);
// t_apply(t_big) = y, inverses of inverses, T y vs omega.
Report chain_coherence(const PFamily &f);

// Everything above that applies at p, exact parts at order N.
Report full_suite(const Rational &p, std::size_t N, long prec = 128);

struct LimitResult {
    BigFloat value;
    BigFloat error;   // Richardson spread
    BigFloat target;  // (p-2)/(2p) ln(1-p) - ln(2)/2, 1 - ln(2)/2 at p = 0
};
// lim_{x->1-} ln gamma'(pi_p x) + ln(1-x)/2 for p in [0, 1), evaluated as
// -ln y'(u) + ln(1 - y(u)/pi_p)/2 with u -> u* from below.
LimitResult thm44_limit(const Rational &p, long prec = 256);

struct TrendPoint {
    unsigned n;
    BigFloat value;
};
// (1-p)^{n(1-p)/p} sum_k binom(n/p, k) p^k (1-p)^{n-k}, p in (0, 1).
std::vector<TrendPoint> remark43_limit(const Rational &p, const std::vector<unsigned> &ns, long prec = 128);

// Partial sum of sum_n w_n S_n / n^s with the weights above, p in (0, 1].
// Exploration only.
BigFloat mp_partial(const Rational &p, const BigFloat &s, unsigned terms);

} // namespace dlog::family

#endif
