#ifndef DLOG_SERIES_JSON_HPP
#define DLOG_SERIES_JSON_HPP

#include <json.hpp>

#include <dlog/trunc_series.hpp>

namespace dlog
{

inline nlohmann::json to_json(const RSeries &s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    return {{"order", s.order()}, {"coeffs", coeffs}};
}

inline RSeries series_from_json(const nlohmann::json &j)
{
    if (!j.contains("order") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw usage_error("series JSON needs 'order' and 'coeffs'");
    }
    std::vector<Rational> c;
    for (const auto &e : j["coeffs"]) {
        c.push_back(parse_rational(e.get<std::string>()));
    }
    if (c.size() != j["order"].get<std::size_t>() + 1) {
        throw usage_error("series JSON: coefficient count does not match order");
    }
    return RSeries(std::move(c));
}

// {"n": k, "coeffs": [...]} with ascending degree.
inline nlohmann::json to_json(std::size_t n, const AlphaPoly &p)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : p.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    return {{"n", n}, {"coeffs", coeffs}};
}

} // namespace dlog

#endif
