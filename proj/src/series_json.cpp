#include "higgscoh/series_json.hpp"

#include <stdexcept>

namespace higgs {

nlohmann::json to_json(const PoincareSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  nlohmann::json j;
  j["var"] = "t";
  j["coeffs"] = std::move(coeffs);
  if (s.exact_through())
    j["exact_through"] = *s.exact_through();
  else
    j["exact_through"] = nullptr;
  return j;
}

PoincareSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("var", "") != "t" || !j.contains("coeffs"))
    throw std::invalid_argument("series_from_json: malformed series object");
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (!c.is_string())
      throw std::invalid_argument("series_from_json: coefficients must be decimal strings");
    mpz_class v;
    if (v.set_str(c.get<std::string>(), 10) != 0)
      throw std::invalid_argument("series_from_json: bad integer literal '" +
                                  c.get<std::string>() + "'");
    coeffs.push_back(std::move(v));
  }
  std::optional<int> bound;
  if (j.contains("exact_through") && !j.at("exact_through").is_null())
    bound = j.at("exact_through").get<int>();
  return PoincareSeries(std::move(coeffs), bound);
}

}  // namespace higgs
