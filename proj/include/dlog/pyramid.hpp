#ifndef DLOG_PYRAMID_HPP
#define DLOG_PYRAMID_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <dlog/poly.hpp>
#include <dlog/report.hpp>

namespace dlog::pyramid
{

// Triangular array T[n][k][m], 1 <= k <= m <= n; index 0 unused.
template <typename E>
class Table
{
public:
    Table() = default;
    explicit Table(unsigned n_max) : n_max_(n_max), e_(n_max + 1)
    {
        for (unsigned n = 1; n <= n_max; ++n) {
            e_[n].assign(n + 1, std::vector<E>(n + 1));
        }
    }
    unsigned n_max() const { return n_max_; }
    // Zero outside 1 <= k <= m <= n.
    E at(unsigned n, unsigned k, unsigned m) const
    {
        if (n < 1 || n > n_max_ || k < 1 || m < k || m > n) {
            return E{};
        }
        return e_[n][k][m];
    }
    E &ref(unsigned n, unsigned k, unsigned m) { return e_[n][k][m]; }

    friend bool operator==(const Table &a, const Table &b) { return a.n_max_ == b.n_max_ && a.e_ == b.e_; }

private:
    unsigned n_max_ = 0;
    std::vector<std::vector<std::vector<E>>> e_;
};

using IntTable = Table<BigInt>;
using PTable = Table<AlphaPoly>;  // entries in Q[p]

// A^{n+1}_{k,m} = k A^n_{k,m} + (m-1) A^n_{k,m-1} + A^n_{k-1,m-1}, A^1_{1,1} = 1.
IntTable build(unsigned n_max);

// Diagonal = Stirling 2nd kind, last column = unsigned Stirling 1st kind,
// first row = (n-1)!/(n-m)!; reference values from their own recurrences.
Report faces_check(const IntTable &t);
BigInt stirling2(unsigned n, unsigned k);
BigInt stirling1_unsigned(unsigned n, unsigned k);

// Alternating row sums sum_m (-1)^{k-m} x^{-m} A(n,k,m) against the partial
// Bell polynomial B_{n,k}(r_1(x), r_2(x), ...), where Ei^{(j)}(x) = e^x r_j(x).
// Exact at the given rational x != 0.
Report row_sum_check(const IntTable &t, const Rational &x);

// Every entry > 0.
bool all_positive(const IntTable &t);

// The p-tables
//   A^{n+1}_{k,m} = (p(m-k) + k) A_{k,m} + (m-1) A_{k,m-1} + A_{k-1,m-1}
//   B^{n+1}_{k,m} = (p m - k) B_{k,m} + (m-1) B_{k,m-1} + B_{k-1,m-1}
struct PTables {
    PTable a;
    PTable b;
};
PTables build_p(unsigned n_max);
IntTable evaluate_int(const PTable &t, const Rational &p);  // throws if not integral
Table<Rational> evaluate(const PTable &t, const Rational &p);

// Expansion of [d^n/dx^n F^a] F^{-a} where (ln F)' = e^x / D and
// D' = 1 + p D, as a map (k, j, m) -> coefficient of a^k e^{jx} D^{-m}.
// p = 0 with D = x is e^{a Ei(x)}; otherwise F = T_p, D = Delta_p.
using NormalForm = std::map<std::tuple<unsigned, unsigned, unsigned>, Rational>;
std::vector<NormalForm> derivative_oracle(unsigned n_max, const Rational &p);

constexpr unsigned max_oracle_n = 9;

// Recurrence table vs oracle, exact. Ei variant: coefficient (-1)^{k-m} A.
// Tp variant at rational p: B-form (-1)^{n-k} B and the A-form after
// e^{p(m-k)x} = (1 + p D)^{m-k}.
Report oracle_check_ei(unsigned n_max);
Report oracle_check_tp(unsigned n_max, const Rational &p);

// Appendix-style slices:
//   n=4:
//   k=1: 1 3 6 6
//   k=2: 7 14 11
std::string format_slices(const IntTable &t, unsigned from = 1, unsigned to = 0);
std::string format_slices(const PTable &t, unsigned from = 1, unsigned to = 0);
std::string format_slices(const Table<Rational> &t, unsigned n_max);

} // namespace dlog::pyramid

#endif
