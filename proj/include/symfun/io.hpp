#pragma once

#include <string>

#include "json.hpp"

#include "symfun/series.hpp"

namespace sf {

// {"cap": int|null, "terms": [{"coeff": "p/q", "mono": {"x1": 2, ...}}, ...]} in canonical order.
nlohmann::ordered_json to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

// Header "coeff,<var>,..." over the variables that occur, one row per monomial.
std::string to_csv(const TruncSeries& s);
// One line per geometric weight.
std::string to_pretty(const TruncSeries& s);

}  // namespace sf
