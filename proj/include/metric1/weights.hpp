#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metric1/ext_weight.hpp"
#include "metric1/fincat.hpp"
#include "metric1/metric_space.hpp"
#include "metric1/report.hpp"

namespace metric1 {

// A finite category with one weight per arrow, on the scale `Scale`.
// Construction does not validate; use validate_metric1 or make_metric1.
template <class Scale>
class basic_metric1_space {
 public:
  using scale_type = Scale;

  basic_metric1_space() = default;
  basic_metric1_space(FiniteCategory category, std::vector<ExtWeight> weights)
      : category_(std::move(category)), weights_(std::move(weights)) {}

  const FiniteCategory& category() const { return category_; }
  const std::vector<ExtWeight>& weights() const { return weights_; }
  const ExtWeight& weight(ArrowId a) const { return weights_[a.index()]; }
  const ExtWeight& operator[](ArrowId a) const { return weights_[a.index()]; }

  std::size_t object_count() const { return category_.object_count(); }
  std::size_t arrow_count() const { return category_.arrow_count(); }

 private:
  FiniteCategory category_;
  std::vector<ExtWeight> weights_;
};

using Metric1Space = basic_metric1_space<AdditiveScale>;
using BiLipSpace = basic_metric1_space<MultiplicativeScale>;

template <class Scale>
ValidationReport validate_metric1(const basic_metric1_space<Scale>& x) {
  ValidationReport report = validate_category(x.category());
  if (report.fatal()) return report;
  const auto& c = x.category();
  if (x.weights().size() != c.arrow_count()) {
    report.add_fatal("structure", "expected " + std::to_string(c.arrow_count()) + " weights, got " +
                                      std::to_string(x.weights().size()));
    return report;
  }
  if (!report.ok()) return report;

  for (ArrowId a : c.all_arrows())
    if (!Scale::in_range(x[a])) report.add("range", "w(" + c.arrow_name(a) + ") = " + x[a].to_string() + " is out of range");
  for (ObjectId o : c.all_objects()) {
    ArrowId id = c.identity(o);
    if (!Scale::is_unit(x[id])) report.add("reflexivity", "w(" + c.arrow_name(id) + ") = " + x[id].to_string());
  }
  if (report.mentions("range")) return report;
  for (ArrowId psi : c.all_arrows()) {
    for (ArrowId phi : c.out_arrows(c.cod(psi))) {
      ArrowId comp = c.then(psi, phi);
      const ExtWeight& wc = x[comp];
      const std::string pair = "(" + c.arrow_name(psi) + ", " + c.arrow_name(phi) + ")";
      ExtWeight upper = Scale::combine(x[psi], x[phi]);
      if (wc > upper)
        report.add("triangle-upper", pair + ": w(" + c.arrow_name(comp) + ") = " + wc.to_string() + " > " + upper.to_string());
      if (auto lower = Scale::spread(x[psi], x[phi]); lower && *lower > wc)
        report.add("triangle-lower", pair + ": spread " + lower->to_string() + " > w(" + c.arrow_name(comp) +
                                         ") = " + wc.to_string());
    }
  }
  return report;
}

template <class Scale>
basic_metric1_space<Scale> make_metric1_as(FiniteCategory c, std::vector<ExtWeight> w) {
  basic_metric1_space<Scale> x(std::move(c), std::move(w));
  auto report = validate_metric1(x);
  if (!report.ok()) throw ValidationError(report);
  return x;
}

inline Metric1Space make_metric1(FiniteCategory c, std::vector<ExtWeight> w) {
  return make_metric1_as<AdditiveScale>(std::move(c), std::move(w));
}

template <class Scale>
bool is_locally_finite(const basic_metric1_space<Scale>& x) {
  for (const auto& w : x.weights())
    if (w.is_infinite()) return false;
  return true;
}

template <class Scale>
bool is_nondegenerate(const basic_metric1_space<Scale>& x) {
  for (ArrowId a : x.category().all_arrows())
    if (Scale::is_unit(x[a]) && !x.category().is_identity(a)) return false;
  return true;
}

template <class Scale>
basic_metric1_space<Scale> opposite_space(const basic_metric1_space<Scale>& x) {
  return basic_metric1_space<Scale>(opposite(x.category()), x.weights());
}

// Weighted indiscrete category; w[i][j] is the weight of the arrow i -> j.
inline Metric1Space indiscrete_space(const std::vector<std::vector<ExtWeight>>& w) {
  const std::size_t n = w.size();
  std::vector<ExtWeight> weights(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) weights[i * n + j] = w[i][j];
  return Metric1Space(indiscrete(n), std::move(weights));
}

inline Metric1Space from_metric_space(const FiniteMetricSpace& m) {
  auto report = validate_metric_space(m);
  if (!report.ok()) throw ValidationError(report);
  std::vector<std::vector<ExtWeight>> w(m.size(), std::vector<ExtWeight>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) w[i][j] = ExtWeight(m.d[i][j]);
  Metric1Space x = indiscrete_space(w);
  std::vector<std::string> labels = m.points;
  std::vector<ArrowInfo> arrows = x.category().arrows();
  for (auto& a : arrows) a.label = labels[a.dom.index()] + "->" + labels[a.cod.index()];
  std::vector<std::optional<ArrowId>> ids;
  for (ObjectId o : x.category().all_objects()) ids.push_back(x.category().identity(o));
  Metric1Space out(FiniteCategory(labels, arrows, ids, x.category().composition_entries()), x.weights());
  auto check = validate_metric1(out);
  if (!check.ok()) throw InternalError("indiscrete embedding failed validation:\n" + check.to_string());
  return out;
}

// ---------------------------------------------------------------------------
// Lawvere space

template <class Scale = AdditiveScale>
struct LawvereSpace {
  std::vector<std::string> points;
  std::vector<std::vector<ExtWeight>> d;

  std::size_t size() const { return points.size(); }
  const ExtWeight& operator()(std::size_t i, std::size_t j) const { return d[i][j]; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (d[i][j] != d[j][i]) return false;
    return true;
  }
};

// d(x, y) is the least weight of an arrow x -> y, or infinity if there is none.
template <class Scale>
LawvereSpace<Scale> lawvere(const basic_metric1_space<Scale>& x) {
  const auto& c = x.category();
  const std::size_t n = c.object_count();
  LawvereSpace<Scale> out;
  out.points = c.object_labels();
  out.d.assign(n, std::vector<ExtWeight>(n, ExtWeight::infinity()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (ArrowId a : c.hom(ObjectId(i), ObjectId(j)))
        if (x[a] < out.d[i][j]) out.d[i][j] = x[a];
  return out;
}

template <class Scale>
ValidationReport validate_lawvere(const LawvereSpace<Scale>& l) {
  ValidationReport report;
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!Scale::is_unit(l.d[i][i])) report.add("reflexivity", "d(" + l.points[i] + "," + l.points[i] + ") = " + l.d[i][i].to_string());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (l.d[i][k] > Scale::combine(l.d[i][j], l.d[j][k]))
          report.add("triangle", "d(" + l.points[i] + "," + l.points[k] + ") > d(" + l.points[i] + "," + l.points[j] +
                                     ") + d(" + l.points[j] + "," + l.points[k] + ")");
  return report;
}

// Largest spread between an arrow x -> y and an arrow y -> x. A pair of two
// infinite weights contributes nothing, matching the waived lower bound.
inline ExtWeight asymmetry_defect(const Metric1Space& x, ObjectId a, ObjectId b) {
  const auto& c = x.category();
  const auto& there = c.hom(a, b);
  const auto& back = c.hom(b, a);
  if (there.empty() || back.empty())
    throw PreconditionError("no arrows between " + c.object_label(a) + " and " + c.object_label(b));
  ExtWeight best;
  for (ArrowId p : there)
    for (ArrowId q : back)
      if (auto s = AdditiveScale::spread(x[p], x[q]); s && *s > best) best = *s;
  return best;
}

}  // namespace metric1
