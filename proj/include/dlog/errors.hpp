#ifndef DLOG_ERRORS_HPP
#define DLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlog
{

// Bad arguments from a caller: mismatched orders, unknown names, out-of-range
// parameters. The CLI maps this to exit code 2.
class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// The input lies outside the domain of the operation (e.g. a series that is
// not of the form x + O(x^2) handed to compositional inversion).
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Division by a series whose constant term is not a unit, or a function
// evaluated at a pole.
class singularity_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Two independent computation routes disagreed. Always a bug somewhere.
class consistency_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// A numerical procedure failed to reach its tolerance.
class accuracy_error : public std::runtime_error
{
public:
    accuracy_error(const std::string &what, std::string partial)
        : std::runtime_error(what), partial_(std::move(partial))
    {
    }
    // Decimal rendering of the best value reached before giving up.
    const std::string &partial() const noexcept { return partial_; }

private:
    std::string partial_;
};

} // namespace dlog

#endif
