#include "arcmap/domain_json.hpp"

#include <fstream>
#include <stdexcept>

namespace arcmap {

using nlohmann::json;

namespace {

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

ArcPolygon arc_polygon_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("centers") ||
      !j.contains("indicators"))
    throw std::invalid_argument(
        "domain JSON needs vertices, centers and indicators");
  ArcPolygon poly;
  for (const auto& v : j.at("vertices"))
    poly.vertices.push_back(complex_from(v));
  for (const auto& c : j.at("centers")) {
    if (c.is_null())
      poly.centers.push_back(std::nullopt);
    else
      poly.centers.push_back(complex_from(c));
  }
  for (const auto& d : j.at("indicators")) {
    if (!d.is_number_integer())
      throw std::invalid_argument("indicators must be integers");
    poly.indicators.push_back(d.get<int>());
  }
  poly.validate();
  return poly;
}

json arc_polygon_to_json(const ArcPolygon& poly) {
  json j;
  j["vertices"] = json::array();
  j["centers"] = json::array();
  j["indicators"] = json::array();
  for (const auto& v : poly.vertices)
    j["vertices"].push_back({v.real(), v.imag()});
  for (const auto& c : poly.centers) {
    if (c)
      j["centers"].push_back({c->real(), c->imag()});
    else
      j["centers"].push_back(nullptr);
  }
  for (int d : poly.indicators) j["indicators"].push_back(d);
  return j;
}

ArcPolygon load_arc_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open domain file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed domain JSON: " +
                                std::string(e.what()));
  }
  return arc_polygon_from_json(j);
}

}  // namespace arcmap
