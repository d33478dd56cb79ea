#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "neighborly/common.hpp"
#include "neighborly/divide.hpp"
#include "neighborly/gale.hpp"
#include "neighborly/geometry.hpp"
#include "neighborly/travel.hpp"

namespace neighborly {

using Json = nlohmann::json;

/// Points file format: a JSON array of points, each an array of rational
/// strings in canonical lowest terms ("p/q", integers written plainly).
/// Gale diagrams share the format.
inline Json points_to_json(const std::vector<std::vector<Rat>>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json jr = Json::array();
    for (const Rat& v : row) jr.push_back(rat_to_string(v));
    arr.push_back(std::move(jr));
  }
  return arr;
}

inline std::vector<std::vector<Rat>> points_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw input_error("points: expected a nonempty JSON array");
  std::vector<std::vector<Rat>> rows;
  for (const Json& jr : j) {
    if (!jr.is_array()) throw input_error("points: each point must be an array");
    std::vector<Rat> row;
    for (const Json& v : jr) {
      if (!v.is_string()) throw input_error("points: coordinates must be rational strings");
      row.push_back(parse_rat(v.get<std::string>()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json config_to_json(const PointConfig& x) { return points_to_json(x.pts); }

inline PointConfig config_from_json(const Json& j) {
  PointConfig x;
  x.pts = points_from_json(j);
  x.validate();
  return x;
}

inline Json diagram_to_json(const GaleDiagram& g) { return points_to_json(g.vectors); }

inline GaleDiagram diagram_from_json(const Json& j) {
  GaleDiagram g;
  g.vectors = points_from_json(j);
  g.validate();
  return g;
}

/// Travel serialization used inside certificates: {kind, breakpoints}.
inline Json travel_to_json(const Travel& t) {
  return Json{{"kind", travel_kind_name(t.kind)}, {"breakpoints", t.breakpoints}};
}

inline Json hyperplane_to_json(const Hyperplane& h) {
  Json c = Json::array();
  for (const Rat& v : h.c) c.push_back(rat_to_string(v));
  return Json{{"c", std::move(c)}, {"delta", rat_to_string(h.delta)}};
}

inline Hyperplane hyperplane_from_json(const Json& j) {
  Hyperplane h;
  for (const Json& v : j.at("c")) h.c.push_back(parse_rat(v.get<std::string>()));
  h.delta = parse_rat(j.at("delta").get<std::string>());
  return h;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace neighborly
