#ifndef DLOG_REPORT_HPP
#define DLOG_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace dlog
{

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Ordered list of named pass/fail results.
class Report
{
public:
    Report &add(std::string name, bool pass, std::string detail = {})
    {
        checks_.push_back({std::move(name), pass, std::move(detail)});
        return *this;
    }
    Report &merge(const Report &other, const std::string &prefix = {})
    {
        for (const auto &c : other.checks_) {
            checks_.push_back({prefix + c.name, c.pass, c.detail});
        }
        return *this;
    }
    bool all_pass() const
    {
        for (const auto &c : checks_) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
    std::vector<std::string> failures() const
    {
        std::vector<std::string> out;
        for (const auto &c : checks_) {
            if (!c.pass) {
                out.push_back(c.name);
            }
        }
        return out;
    }
    const std::vector<Check> &checks() const { return checks_; }
    std::size_t size() const { return checks_.size(); }

private:
    std::vector<Check> checks_;
};

} // namespace dlog

#endif
