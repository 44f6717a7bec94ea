#ifndef DLOG_T_CHAIN_HPP
#define DLOG_T_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <dlog/report.hpp>
#include <dlog/trunc_series.hpp>

namespace dlog::tchain
{

constexpr int max_chain_power = 64;

// c_0 = 0, c_1 = 1 and order >= 1, else domain_error.
void require_normalized(const RSeries &f, const char *who);

// T f = f / f', same order as f.
RSeries t_apply(const RSeries &f);
// T^{-1} f = x exp(int_0^x (1/f(t) - 1/t) dt), same order as f.
RSeries t_inverse(const RSeries &f);
// T^k for any integer k, |k| <= max_chain_power.
RSeries t_power(const RSeries &f, int k);

struct Chain {
    std::vector<RSeries> links;  // links[0] is the seed
    std::vector<int> powers;     // T-power of each link
};

// Links T^0 f .. T^k f (T^{-1}, T^{-2}, ... for k < 0) at order N.
Chain chain(const RSeries &f, int k, std::size_t N);

// The three identities relating T to the e^{-x} deformation:
//   (T(f e^{-x}))^inv = (Tf)^inv o (x/(1+x))
//   x exp((f e^{-x})^inv) = (x exp(-f^inv))^inv
//   T^2(f e^{-x}) = (T^2 f)(1 - Tf)
Report identities_310(const RSeries &f, std::size_t N);

// Least k <= max_k with T^k f = f at order N.
std::optional<unsigned> find_period(const RSeries &f, unsigned max_k, std::size_t N);

struct ThetaResult {
    Rational direct;       // [x^{n+1}] T^{2k} f
    Rational closed_form;  // (1 - n^{2k}(1 - theta)) / (n+1)!
    bool pass = false;
};
// f = sum_{j=1}^n x^j/j! + theta x^{n+1}/(n+1)! at order N >= n+1.
ThetaResult theta_propagation(unsigned n, const Rational &theta, unsigned k, std::size_t N);

// If f = x + c x^n + O(x^{n+1}) with c != 0, checks [x^n] T^k f = (1-n)^k c
// for k = 1..max_k. Returns an empty report when f = x to its order.
Report parity_check(const RSeries &f, unsigned max_k);

struct ScanResult {
    unsigned tested = 0;
    unsigned periodic = 0;
    std::vector<std::uint64_t> periodic_seeds;
};
// find_period over `count` seeded random normalized series.
ScanResult periodicity_scan(std::uint64_t seed, unsigned count, unsigned max_k, std::size_t N);

} // namespace dlog::tchain

#endif
