#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metric1/continuity.hpp"
#include "metric1/fincat.hpp"
#include "metric1/mapping.hpp"
#include "metric1/weights.hpp"

namespace metric1 {

// Arrow involution ψ ↦ ψ†, identity on objects.
struct Dagger {
  std::vector<ArrowId> map;

  ArrowId operator()(ArrowId a) const { return map[a.index()]; }
  friend auto operator<=>(const Dagger&, const Dagger&) = default;

  // The dagger as a functor C -> C^op.
  Functor as_functor(const FiniteCategory& c) const { return Functor{c.all_objects(), map}; }
};

enum class SymmetryClass { none = 0, continuous = 1, uniform = 2, iso = 3, groupoidal = 4 };

inline std::string to_string(SymmetryClass s) {
  switch (s) {
    case SymmetryClass::none: return "none";
    case SymmetryClass::continuous: return "continuous";
    case SymmetryClass::uniform: return "uniform";
    case SymmetryClass::iso: return "iso";
    case SymmetryClass::groupoidal: return "groupoidal";
  }
  return "?";
}

inline ValidationReport validate_dagger(const FiniteCategory& c, const Dagger& d) {
  ValidationReport report;
  if (d.map.size() != c.arrow_count()) {
    report.add_fatal("structure", "dagger must map every arrow");
    return report;
  }
  for (ArrowId a : d.map)
    if (a.index() >= c.arrow_count()) {
      report.add_fatal("structure", "dagger image " + to_string(a) + " is missing");
      return report;
    }
  for (ArrowId a : c.all_arrows())
    if (c.dom(d(a)) != c.cod(a) || c.cod(d(a)) != c.dom(a))
      report.add("swap", c.arrow_name(a) + "† must run " + c.object_label(c.cod(a)) + " -> " + c.object_label(c.dom(a)));
  if (!report.ok()) {
    report.add_fatal("structure", "domain/codomain swap fails, remaining laws skipped");
    return report;
  }
  for (ObjectId x : c.all_objects())
    if (d(c.identity(x)) != c.identity(x)) report.add("identity", "id_" + c.object_label(x) + "† is not the identity");
  for (ArrowId a : c.all_arrows())
    if (d(d(a)) != a) report.add("involution", c.arrow_name(a) + "†† ≠ " + c.arrow_name(a));
  for (ArrowId psi : c.all_arrows())
    for (ArrowId phi : c.out_arrows(c.cod(psi)))
      if (d(c.then(psi, phi)) != c.then(d(phi), d(psi)))
        report.add("contravariance", "(" + c.arrow_name(phi) + "∘" + c.arrow_name(psi) + ")† ≠ " + c.arrow_name(psi) +
                                         "†∘" + c.arrow_name(phi) + "†");
  return report;
}

inline Dagger canonical_groupoid_dagger(const FiniteCategory& c) {
  auto inv = is_groupoid(c);
  if (!inv) throw PreconditionError("not a groupoid: some arrow has no inverse");
  return Dagger{*inv};
}

struct DaggerClassification {
  SymmetryClass symmetry = SymmetryClass::none;
  bool contracting = false;  // w(ψ†) ≤ w(ψ) for every ψ
};

// Strongest of iso, uniform, continuous that the dagger achieves, where the
// continuity tiers treat † as a functor X -> X^op.
template <class Scale>
DaggerClassification classify_dagger(const basic_metric1_space<Scale>& x, const Dagger& d) {
  const auto& c = x.category();
  auto report = validate_dagger(c, d);
  if (!report.ok()) throw PreconditionError("not a dagger:\n" + report.to_string());
  DaggerClassification out;
  bool iso = true;
  out.contracting = true;
  for (ArrowId a : c.all_arrows()) {
    if (x[d(a)] != x[a]) iso = false;
    if (x[d(a)] > x[a]) out.contracting = false;
  }
  // w(ψ) = w(ψ††) ≤ w(ψ†) ≤ w(ψ) whenever † never increases weight.
  if (out.contracting && !iso) throw InternalError("weight-contracting dagger that is not iso");
  if (iso) {
    out.symmetry = SymmetryClass::iso;
    return out;
  }
  auto op = opposite_space(x);
  Functor f = d.as_functor(c);
  if (uniformly_continuous(x, op, f)) {
    out.symmetry = SymmetryClass::uniform;
  } else if (forward_continuous(x, op, f) && backward_continuous(x, op, f)) {
    out.symmetry = SymmetryClass::continuous;
  }
  return out;
}

// Involutive identity-on-objects maps pairing hom(x, y) with hom(y, x)
// bijectively, filtered by validate_dagger; lexicographic order.
inline std::vector<Dagger> enumerate_daggers(const FiniteCategory& c, EnumerationGuard guard = {}) {
  const std::size_t n = c.object_count();
  std::vector<Dagger> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (c.hom(ObjectId(x), ObjectId(y)).size() != c.hom(ObjectId(y), ObjectId(x)).size()) return out;

  detail::NodeCounter counter{0, guard.max_nodes, "dagger enumeration"};
  Dagger d{std::vector<ArrowId>(c.arrow_count(), ArrowId(0))};
  std::vector<bool> assigned(c.arrow_count(), false);
  std::vector<ArrowId> order = c.all_arrows();

  std::function<void(std::size_t)> go = [&](std::size_t i) {
    while (i < order.size() && assigned[order[i].index()]) ++i;
    if (i == order.size()) {
      if (validate_dagger(c, d).ok()) out.push_back(d);
      return;
    }
    ArrowId a = order[i];
    if (c.is_identity(a)) {
      counter.tick();
      d.map[a.index()] = a;
      assigned[a.index()] = true;
      go(i + 1);
      assigned[a.index()] = false;
      return;
    }
    for (ArrowId b : c.hom(c.cod(a), c.dom(a))) {
      if (assigned[b.index()] && b != a) continue;
      if (c.is_identity(b)) continue;
      counter.tick();
      d.map[a.index()] = b;
      d.map[b.index()] = a;
      assigned[a.index()] = assigned[b.index()] = true;
      go(i + 1);
      assigned[a.index()] = assigned[b.index()] = false;
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

struct SymmetryResult {
  SymmetryClass symmetry = SymmetryClass::none;
  std::optional<Dagger> dagger;  // a dagger achieving the class
};

// Groupoids are groupoidal (the inverse dagger is iso); otherwise the best
// class over all daggers. At iso or above the Lawvere space must be symmetric.
template <class Scale>
SymmetryResult symmetry_hierarchy(const basic_metric1_space<Scale>& x, EnumerationGuard guard = {}) {
  const auto& c = x.category();
  SymmetryResult out;
  if (is_groupoid(c)) {
    Dagger d = canonical_groupoid_dagger(c);
    if (classify_dagger(x, d).symmetry != SymmetryClass::iso)
      throw InternalError("inverse dagger on a groupoid is not iso");
    out = {SymmetryClass::groupoidal, d};
  } else {
    for (const auto& d : enumerate_daggers(c, guard)) {
      auto cls = classify_dagger(x, d).symmetry;
      if (!out.dagger || cls > out.symmetry) out = {cls, d};
      if (cls == SymmetryClass::iso) break;
    }
    if (!out.dagger) out.symmetry = SymmetryClass::none;
  }
  if (out.symmetry >= SymmetryClass::iso && !lawvere(x).is_symmetric())
    throw InternalError("iso dagger present but the Lawvere space is not symmetric");
  return out;
}

}  // namespace metric1
