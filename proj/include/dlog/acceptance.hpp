#ifndef DLOG_ACCEPTANCE_HPP
#define DLOG_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace dlog::acceptance
{

struct Result {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

constexpr int count = 10;

// Runs the selected criteria (1..10, empty = all) in order. Exceptions
// inside a criterion turn into a failed result carrying the message.
// on_done is called after each criterion.
std::vector<Result> run(const std::vector<int> &ids = {}, const std::function<void(const Result &)> &on_done = {});

// "PASS  3  <title>  (1.2 s)  <detail>"
std::string format_line(const Result &r);

} // namespace dlog::acceptance

#endif
