#include "polytorus/series_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace polytorus {

using nlohmann::json;

std::string toJson(const FourierSeries& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms()) {
    json alphaJson = json::array();
    for (int e : alpha.entries()) alphaJson.push_back(e);
    terms.push_back({{"alpha", std::move(alphaJson)}, {"re", c.real()}, {"im", c.imag()}});
  }
  json doc = {{"dim", f.dim()}, {"terms", std::move(terms)}};
  return doc.dump();
}

FourierSeries seriesFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("series JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array() ||
      !doc.contains("dim")) {
    throw std::invalid_argument("series JSON: expected an object with \"dim\" and a \"terms\" array");
  }
  try {
    FourierSeries f;
    for (const auto& term : doc["terms"]) {
      const auto alpha = term.at("alpha").get<std::vector<int>>();
      const double re = term.value("re", 0.0);
      const double im = term.value("im", 0.0);
      f.add(MultiIndex(alpha), {re, im});
    }
    const auto dim = doc["dim"].get<long long>();
    if (dim < 0) throw std::invalid_argument("series JSON: negative dim");
    if (static_cast<std::size_t>(dim) < f.supportDim()) {
      throw std::invalid_argument("series JSON: dim smaller than the largest alpha");
    }
    f.setDim(static_cast<std::size_t>(dim));
    return f;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("series JSON: ") + e.what());
  }
}

}  // namespace polytorus
