#ifndef DLOG_GENERATORS_HPP
#define DLOG_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <dlog/trunc_series.hpp>

namespace dlog::gen
{

// Exact Taylor expansions to the given order.
RSeries identity(std::size_t order);
RSeries exp_series(std::size_t order);                     // e^x
RSeries exp_scaled(const Rational &c, std::size_t order);  // e^{cx}
RSeries expm1(std::size_t order);                          // e^x - 1
RSeries log1p(std::size_t order);                          // ln(1+x)
RSeries delta(const Rational &p, std::size_t order);       // (e^{px}-1)/p, x at p = 0
RSeries y_p(const Rational &p, std::size_t order);         // delta_p e^{-x}
RSeries x_exp_neg(std::size_t order);                      // x e^{-x}
RSeries x_minus_x2(std::size_t order);                     // x - x^2
RSeries sin(std::size_t order);
RSeries cos(std::size_t order);
RSeries tan(std::size_t order);
RSeries sinh_p(const Rational &p, std::size_t order);      // sinh(px)/p
RSeries tanh_p(const Rational &p, std::size_t order);      // tanh(px)/p
RSeries atanh(std::size_t order);
RSeries lambert_w(std::size_t order);                      // (x e^x)^inv

// Normalized series x + c_2 x^2 + ... with small random rational
// coefficients drawn from a seeded generator.
RSeries random_normalized(std::uint64_t seed, std::size_t order);

// Seed functions by name: x, exp (= (e^{px}-1)/p), xexp, x-x2, sin, sinh,
// tanh, y. Unknown names raise usage_error.
RSeries by_name(const std::string &name, const Rational &p, std::size_t order);
std::vector<std::string> names();

} // namespace dlog::gen

#endif
