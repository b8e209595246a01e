#pragma once

// JSON encodings shared by the verification reports and the command line.

#include <json.hpp>

#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "board.hpp"
#include "integer.hpp"
#include "partition.hpp"
#include "pnk.hpp"
#include "qpoly.hpp"
#include "symfun.hpp"
#include "tableau.hpp"

namespace qyt::io {

using Json = nlohmann::ordered_json;

/// Integers that fit int64 become JSON numbers, anything wider a decimal string.
inline Json to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Json to_json(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const Partition& p) { return p.parts(); }

/// [[degree, coeff], ...], ascending degree, nonzero terms only.
inline Json to_json(const QPoly& p) {
    Json a = Json::array();
    for (int d = 0; d <= p.degree(); ++d)
        if (p[d] != 0) a.push_back(Json::array({d, to_json(p[d])}));
    return a;
}

inline Json to_json(const std::vector<QPoly>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

/// [[q, t, coeff], ...]
inline Json to_json(const QTPoly& p) {
    Json a = Json::array();
    for (const auto& [k, c] : p.terms()) a.push_back(Json::array({k.first, k.second, to_json(c)}));
    return a;
}

inline Json to_json(const SchurExpansion& e) {
    Json a = Json::array();
    for (const auto& [lambda, c] : e.ordered()) a.push_back(Json{{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
    return a;
}

inline Json to_json(const FerrersBoard& b) { return Json{{"n", b.n()}, {"heights", b.heights()}}; }

inline Json to_json(const Tableau& t) { return t.str(); }

inline Json to_json(const PnkPoly& p) { return Json{{"n", p.n}, {"k", p.k}, {"a", to_json(p.a)}}; }

/// Comma-joined list, for text and CSV output.
template <class Range>
std::string join(const Range& r, const std::string& sep = ",") {
    std::string out;
    bool first = true;
    for (const auto& x : r) {
        if (!first) out += sep;
        first = false;
        if constexpr (std::is_convertible_v<decltype(x), std::string>) out += x;
        else if constexpr (std::is_arithmetic_v<std::decay_t<decltype(x)>>) out += std::to_string(x);
        else out += x.str();
    }
    return out;
}

}  // namespace qyt::io
