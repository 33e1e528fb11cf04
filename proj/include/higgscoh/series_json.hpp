#pragma once

#include <json.hpp>

#include "higgscoh/series.hpp"

namespace higgs {

/// Wire form: {"var":"t","coeffs":["1","4","1"],"exact_through":null|N}.
/// Coefficients are decimal strings so the encoding is bit-exact and
/// language-neutral.
nlohmann::json to_json(const PoincareSeries& s);
PoincareSeries series_from_json(const nlohmann::json& j);

}  // namespace higgs
