#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "metric1/coarse.hpp"
#include "metric1/error.hpp"
#include "metric1/ext_weight.hpp"
#include "metric1/fincat.hpp"
#include "metric1/limits.hpp"
#include "metric1/metric_space.hpp"
#include "metric1/weights.hpp"

namespace metric1::json_io {

using Json = nlohmann::ordered_json;

// Parse errors carry nlohmann's byte position and line/column text.
inline Json parse(const std::string& text, const std::string& source = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline std::size_t index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where + ": expected a non-negative integer, got " + j.dump());
  return j.get<std::size_t>();
}

inline std::vector<std::size_t> index_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<std::size_t> out;
  for (const auto& e : j) out.push_back(index(e, where));
  return out;
}

inline Rational rational(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return parse_rational(j.dump());
    // Floats are read through their shortest decimal rendering.
    if (j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a number or rational string, got " + j.dump());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Weights

inline ExtWeight weight_from_json(const Json& j, const std::string& where = "weight") {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtWeight::infinity();
  return ExtWeight(detail::rational(j, where));
}

// Integers as numbers, everything else as strings.
inline Json weight_to_json(const ExtWeight& w) {
  if (w.is_finite() && w.value().get_den() == 1 && w.value().get_num().fits_slong_p()) return w.value().get_num().get_si();
  return w.to_string();
}

inline Json rational_to_json(const Rational& r) { return weight_to_json(ExtWeight(r)); }

// ---------------------------------------------------------------------------
// Categories

inline FiniteCategory category_from_json(const Json& j) {
  const Json& objects = detail::field(j, "objects", "category");
  const Json& arrows = detail::field(j, "arrows", "category");
  if (!objects.is_array() || !arrows.is_array()) throw InputError("category: objects and arrows must be arrays");

  std::vector<std::string> labels(objects.size());
  std::vector<bool> seen(objects.size(), false);
  for (const auto& o : objects) {
    std::size_t id = detail::index(detail::field(o, "id", "object"), "object id");
    if (id >= objects.size() || seen[id]) throw InputError("object ids must be 0.." + std::to_string(objects.size() - 1) + " without repeats");
    seen[id] = true;
    if (auto it = o.find("label"); it != o.end()) labels[id] = it->get<std::string>();
  }

  std::vector<ArrowInfo> infos(arrows.size());
  std::vector<bool> seen_arrow(arrows.size(), false);
  for (const auto& a : arrows) {
    std::size_t id = detail::index(detail::field(a, "id", "arrow"), "arrow id");
    if (id >= arrows.size() || seen_arrow[id]) throw InputError("arrow ids must be 0.." + std::to_string(arrows.size() - 1) + " without repeats");
    seen_arrow[id] = true;
    std::size_t dom = detail::index(detail::field(a, "dom", "arrow"), "arrow dom");
    std::size_t cod = detail::index(detail::field(a, "cod", "arrow"), "arrow cod");
    std::string label;
    if (auto it = a.find("label"); it != a.end()) label = it->get<std::string>();
    infos[id] = {ObjectId(dom), ObjectId(cod), label};
  }

  std::vector<std::optional<ArrowId>> ids(objects.size());
  if (auto it = j.find("identities"); it != j.end()) {
    if (!it->is_object()) throw InputError("identities must map object ids to arrow ids");
    for (const auto& [key, value] : it->items()) {
      std::size_t obj;
      try {
        std::size_t used = 0;
        obj = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError("identities: key \"" + key + "\" is not an object id");
      }
      if (obj >= ids.size()) throw InputError("identities: object " + key + " does not exist");
      ids[obj] = ArrowId(detail::index(value, "identity arrow"));
    }
  }

  std::vector<CompositionEntry> table;
  if (auto it = j.find("compose"); it != j.end()) {
    if (!it->is_array()) throw InputError("compose must be an array of triples");
    for (const auto& t : *it) {
      auto v = detail::index_list(t, "compose triple");
      if (v.size() != 3) throw InputError("compose entries must be [first, second, result]");
      table.push_back({ArrowId(v[0]), ArrowId(v[1]), ArrowId(v[2])});
    }
  }
  return FiniteCategory(std::move(labels), std::move(infos), std::move(ids), table);
}

inline Json category_to_json(const FiniteCategory& c) {
  Json j;
  j["objects"] = Json::array();
  for (ObjectId o : c.all_objects()) j["objects"].push_back({{"id", o.value}, {"label", c.object_label(o)}});
  j["arrows"] = Json::array();
  for (ArrowId a : c.all_arrows())
    j["arrows"].push_back({{"id", a.value}, {"dom", c.dom(a).value}, {"cod", c.cod(a).value}, {"label", c.arrow(a).label}});
  j["identities"] = Json::object();
  for (ObjectId o : c.all_objects())
    if (auto id = c.identity_entry(o)) j["identities"][std::to_string(o.value)] = id->value;
  j["compose"] = Json::array();
  for (const auto& e : c.composition_entries()) j["compose"].push_back({e.first.value, e.second.value, e.result.value});
  return j;
}

// ---------------------------------------------------------------------------
// Weighted categories

template <class Scale = AdditiveScale>
basic_metric1_space<Scale> space_from_json(const Json& j) {
  FiniteCategory c = category_from_json(j);
  const Json& w = detail::field(j, "weights", "weighted category");
  if (!w.is_array() || w.size() != c.arrow_count())
    throw InputError("weights must list one value per arrow (" + std::to_string(c.arrow_count()) + ")");
  std::vector<ExtWeight> weights;
  for (std::size_t i = 0; i < w.size(); ++i) weights.push_back(weight_from_json(w[i], "weights[" + std::to_string(i) + "]"));
  return basic_metric1_space<Scale>(std::move(c), std::move(weights));
}

template <class Scale>
Json space_to_json(const basic_metric1_space<Scale>& x) {
  Json j = category_to_json(x.category());
  j["weights"] = Json::array();
  for (const auto& w : x.weights()) j["weights"].push_back(weight_to_json(w));
  return j;
}

// ---------------------------------------------------------------------------
// Sequences, functors, generators

inline ArrowSequence sequence_from_json(const Json& j) {
  ArrowSequence s;
  for (std::size_t a : detail::index_list(detail::field(j, "preperiod", "sequence"), "preperiod")) s.preperiod.push_back(ArrowId(a));
  for (std::size_t a : detail::index_list(detail::field(j, "period", "sequence"), "period")) s.period.push_back(ArrowId(a));
  if (s.period.empty()) throw InputError("sequence: period must be non-empty");
  return s;
}

inline Json sequence_to_json(const ArrowSequence& s) {
  Json j;
  j["preperiod"] = Json::array();
  for (ArrowId a : s.preperiod) j["preperiod"].push_back(a.value);
  j["period"] = Json::array();
  for (ArrowId a : s.period) j["period"].push_back(a.value);
  return j;
}

inline Functor functor_from_json(const Json& j) {
  Functor f;
  for (std::size_t o : detail::index_list(detail::field(j, "objMap", "functor"), "objMap")) f.object_map.push_back(ObjectId(o));
  for (std::size_t a : detail::index_list(detail::field(j, "arrMap", "functor"), "arrMap")) f.arrow_map.push_back(ArrowId(a));
  return f;
}

inline Json functor_to_json(const Functor& f) {
  Json j;
  j["objMap"] = Json::array();
  for (ObjectId o : f.object_map) j["objMap"].push_back(o.value);
  j["arrMap"] = Json::array();
  for (ArrowId a : f.arrow_map) j["arrMap"].push_back(a.value);
  return j;
}

inline CoarseGenerators generators_from_json(const FiniteCategory& c, const Json& j) {
  const Json& list = detail::field(j, "list", "generators");
  if (!list.is_array() || list.empty()) throw InputError("generators: list must be a non-empty array");
  std::vector<ArrowSet> sets;
  for (const auto& entry : list) {
    ArrowSet s(c.arrow_count());
    for (std::size_t a : detail::index_list(entry, "generator set")) {
      if (a >= c.arrow_count()) throw InputError("generators: arrow " + std::to_string(a) + " does not exist");
      s.insert(ArrowId(a));
    }
    sets.push_back(std::move(s));
  }
  std::size_t constant_from = list.size() - 1;
  if (auto it = j.find("constantFrom"); it != j.end()) constant_from = detail::index(*it, "constantFrom");
  return normalize_generators(c, sets, constant_from);
}

// ---------------------------------------------------------------------------
// Metric spaces

inline FiniteMetricSpace metric_space_from_json(const Json& j) {
  FiniteMetricSpace m;
  const Json& points = detail::field(j, "points", "metric space");
  if (!points.is_array()) throw InputError("metric space: points must be an array");
  for (const auto& p : points) m.points.push_back(p.is_string() ? p.get<std::string>() : p.dump());
  const Json& d = detail::field(j, "d", "metric space");
  if (!d.is_array()) throw InputError("metric space: d must be a matrix");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_array()) throw InputError("metric space: d must be a matrix");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < d[i].size(); ++k)
      row.push_back(detail::rational(d[i][k], "d[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    m.d.push_back(std::move(row));
  }
  return m;
}

inline Json metric_space_to_json(const FiniteMetricSpace& m) {
  Json j;
  j["points"] = m.points;
  j["d"] = Json::array();
  for (const auto& row : m.d) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    j["d"].push_back(std::move(r));
  }
  return j;
}

inline Json report_to_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["violations"] = Json::array();
  for (const auto& v : r.violations()) j["violations"].push_back({{"rule", v.rule}, {"detail", v.detail}});
  return j;
}

}  // namespace metric1::json_io
