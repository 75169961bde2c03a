#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metric1/error.hpp"
#include "metric1/report.hpp"

namespace metric1 {

// Dense index into one category's objects or arrows.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}
  constexpr explicit Id(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit Id(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(const Id&, const Id&) = default;
};

using ObjectId = Id<struct ObjectTag>;
using ArrowId = Id<struct ArrowTag>;

inline std::string to_string(ObjectId x) { return "#" + std::to_string(x.value); }
inline std::string to_string(ArrowId a) { return "a" + std::to_string(a.value); }

struct ArrowInfo {
  ObjectId dom;
  ObjectId cod;
  std::string label;
};

// One row of a composition table: second ∘ first.
struct CompositionEntry {
  ArrowId first;
  ArrowId second;
  ArrowId result;
};

// A finite category stored as explicit tables.
//
// compose(first, second) is the diagrammatic composite "second after first",
// i.e. second ∘ first. The constructor accepts arbitrary table data and never
// throws; validate_category() reports what is wrong with it. All other
// operations assume a category that validates.
class FiniteCategory {
 public:
  FiniteCategory() = default;

  FiniteCategory(std::vector<std::string> object_labels, std::vector<ArrowInfo> arrows,
                 std::vector<std::optional<ArrowId>> identities, const std::vector<CompositionEntry>& table)
      : object_labels_(std::move(object_labels)),
        arrows_(std::move(arrows)),
        identities_(std::move(identities)),
        table_(arrows_.size() * arrows_.size(), kNone),
        hom_(object_labels_.size() * object_labels_.size()) {
    identities_.resize(object_labels_.size());
    const std::size_t n = object_labels_.size();
    const std::size_t m = arrows_.size();
    for (std::size_t a = 0; a < m; ++a) {
      const auto& info = arrows_[a];
      if (info.dom.index() < n && info.cod.index() < n) hom_[info.dom.index() * n + info.cod.index()].push_back(ArrowId(a));
    }
    for (const auto& e : table) {
      if (e.first.index() >= m || e.second.index() >= m || e.result.index() >= m) {
        dangling_.push_back(e);
        continue;
      }
      auto& slot = table_[e.first.index() * m + e.second.index()];
      if (slot != kNone && slot != e.result.value) {
        conflicts_.push_back(e);
        continue;
      }
      slot = e.result.value;
    }
  }

  std::size_t object_count() const { return object_labels_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  ObjectId dom(ArrowId a) const { return arrows_[a.index()].dom; }
  ObjectId cod(ArrowId a) const { return arrows_[a.index()].cod; }
  const ArrowInfo& arrow(ArrowId a) const { return arrows_[a.index()]; }
  const std::string& object_label(ObjectId x) const { return object_labels_[x.index()]; }
  const std::vector<std::string>& object_labels() const { return object_labels_; }
  const std::vector<ArrowInfo>& arrows() const { return arrows_; }

  std::string arrow_name(ArrowId a) const {
    const auto& label = arrows_[a.index()].label;
    return label.empty() ? to_string(a) : label;
  }

  std::optional<ArrowId> identity_entry(ObjectId x) const { return identities_[x.index()]; }

  ArrowId identity(ObjectId x) const {
    const auto& id = identities_[x.index()];
    if (!id) throw InputError("object " + to_string(x) + " has no identity");
    return *id;
  }

  bool is_identity(ArrowId a) const {
    const auto& id = identities_[dom(a).index()];
    return id && *id == a;
  }

  bool composable(ArrowId first, ArrowId second) const { return cod(first) == dom(second); }

  // second ∘ first if the table defines it.
  std::optional<ArrowId> compose(ArrowId first, ArrowId second) const {
    auto v = table_[first.index() * arrows_.size() + second.index()];
    if (v == kNone) return std::nullopt;
    return ArrowId(v);
  }

  // second ∘ first; the pair must be composable.
  ArrowId then(ArrowId first, ArrowId second) const {
    auto r = compose(first, second);
    if (!r) throw InputError("composite of " + arrow_name(first) + " then " + arrow_name(second) + " is undefined");
    return *r;
  }

  // Arrows x -> y in increasing id order.
  const std::vector<ArrowId>& hom(ObjectId x, ObjectId y) const { return hom_[x.index() * object_count() + y.index()]; }

  std::vector<ArrowId> all_arrows() const {
    std::vector<ArrowId> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a) out.emplace_back(a);
    return out;
  }

  std::vector<ObjectId> all_objects() const {
    std::vector<ObjectId> out;
    for (std::size_t x = 0; x < object_count(); ++x) out.emplace_back(x);
    return out;
  }

  // Arrows whose domain is x.
  std::vector<ArrowId> out_arrows(ObjectId x) const {
    std::vector<ArrowId> out;
    for (std::size_t y = 0; y < object_count(); ++y)
      for (ArrowId a : hom(x, ObjectId(y))) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Arrows whose codomain is y.
  std::vector<ArrowId> in_arrows(ObjectId y) const {
    std::vector<ArrowId> out;
    for (std::size_t x = 0; x < object_count(); ++x)
      for (ArrowId a : hom(ObjectId(x), y)) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Full composition table as entries, lexicographic by (first, second).
  std::vector<CompositionEntry> composition_entries() const {
    std::vector<CompositionEntry> out;
    const std::size_t m = arrows_.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (auto v = table_[i * m + j]; v != kNone) out.push_back({ArrowId(i), ArrowId(j), ArrowId(v)});
    return out;
  }

  const std::vector<CompositionEntry>& dangling_entries() const { return dangling_; }
  const std::vector<CompositionEntry>& conflicting_entries() const { return conflicts_; }

  // Equality of the combinatorial data, ignoring labels.
  friend bool structurally_equal(const FiniteCategory& a, const FiniteCategory& b) {
    if (a.object_count() != b.object_count() || a.arrow_count() != b.arrow_count()) return false;
    for (std::size_t i = 0; i < a.arrow_count(); ++i)
      if (a.arrows_[i].dom != b.arrows_[i].dom || a.arrows_[i].cod != b.arrows_[i].cod) return false;
    return a.identities_ == b.identities_ && a.table_ == b.table_;
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::string> object_labels_;
  std::vector<ArrowInfo> arrows_;
  std::vector<std::optional<ArrowId>> identities_;
  std::vector<std::uint32_t> table_;
  std::vector<std::vector<ArrowId>> hom_;
  std::vector<CompositionEntry> dangling_;
  std::vector<CompositionEntry> conflicts_;
};

// Incremental construction for hand-written fixtures. Every object gets an
// identity arrow and the identity laws are filled in automatically; the
// caller supplies composites of non-identity pairs.
class CategoryBuilder {
 public:
  ObjectId add_object(std::string label = {}) {
    ObjectId x(labels_.size());
    if (label.empty()) label = "x" + std::to_string(x.value);
    labels_.push_back(label);
    ArrowId id(arrows_.size());
    arrows_.push_back({x, x, "id_" + label});
    identities_.push_back(id);
    return x;
  }

  ArrowId add_arrow(ObjectId dom, ObjectId cod, std::string label = {}) {
    ArrowId a(arrows_.size());
    if (label.empty()) label = "f" + std::to_string(a.value);
    arrows_.push_back({dom, cod, std::move(label)});
    return a;
  }

  // Declares second ∘ first = result.
  CategoryBuilder& set_composite(ArrowId first, ArrowId second, ArrowId result) {
    table_.push_back({first, second, result});
    return *this;
  }

  ArrowId identity(ObjectId x) const { return identities_[x.index()]; }

  FiniteCategory build() const {
    std::vector<CompositionEntry> table = table_;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      const auto& info = arrows_[a];
      table.push_back({identities_[info.dom.index()], ArrowId(a), ArrowId(a)});
      if (!(identities_[info.cod.index()] == ArrowId(a)))
        table.push_back({ArrowId(a), identities_[info.cod.index()], ArrowId(a)});
    }
    std::vector<std::optional<ArrowId>> ids(identities_.begin(), identities_.end());
    return FiniteCategory(labels_, arrows_, std::move(ids), table);
  }

 private:
  std::vector<std::string> labels_;
  std::vector<ArrowInfo> arrows_;
  std::vector<ArrowId> identities_;
  std::vector<CompositionEntry> table_;
};

// ---------------------------------------------------------------------------
// Validation

inline ValidationReport validate_category(const FiniteCategory& c) {
  ValidationReport report;
  const std::size_t n = c.object_count();
  const std::size_t m = c.arrow_count();

  for (std::size_t a = 0; a < m; ++a) {
    const auto& info = c.arrow(ArrowId(a));
    if (info.dom.index() >= n || info.cod.index() >= n)
      report.add_fatal("structure", "arrow " + to_string(ArrowId(a)) + " references a missing object");
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto id = c.identity_entry(ObjectId(x));
    if (!id)
      report.add_fatal("structure", "object " + to_string(ObjectId(x)) + " has no identity");
    else if (id->index() >= m)
      report.add_fatal("structure", "identity of " + to_string(ObjectId(x)) + " is a missing arrow");
  }
  for (const auto& e : c.dangling_entries())
    report.add_fatal("structure", "composition entry [" + std::to_string(e.first.value) + "," +
                                      std::to_string(e.second.value) + "," + std::to_string(e.result.value) +
                                      "] references a missing arrow");
  if (report.fatal()) return report;

  for (const auto& e : c.conflicting_entries())
    report.add("composition", "conflicting entries for " + c.arrow_name(e.first) + " then " + c.arrow_name(e.second));

  for (std::size_t x = 0; x < n; ++x) {
    ArrowId id = *c.identity_entry(ObjectId(x));
    if (c.dom(id) != ObjectId(x) || c.cod(id) != ObjectId(x))
      report.add("identity", "identity of " + c.object_label(ObjectId(x)) + " is not an endo-arrow of it");
  }

  // Composition is defined exactly on composable pairs, with the right ends.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ArrowId f(i), g(j);
      auto r = c.compose(f, g);
      if (c.composable(f, g)) {
        if (!r) {
          report.add("composition", "missing composite of " + c.arrow_name(f) + " then " + c.arrow_name(g));
        } else if (c.dom(*r) != c.dom(f) || c.cod(*r) != c.cod(g)) {
          report.add("composition", "composite of " + c.arrow_name(f) + " then " + c.arrow_name(g) +
                                        " has wrong domain or codomain");
        }
      } else if (r) {
        report.add("composition",
                   "composite defined for non-composable pair " + c.arrow_name(f) + ", " + c.arrow_name(g));
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    ArrowId f(i);
    ArrowId id_dom = *c.identity_entry(c.dom(f));
    ArrowId id_cod = *c.identity_entry(c.cod(f));
    if (c.compose(id_dom, f) != std::optional<ArrowId>(f))
      report.add("neutrality", c.arrow_name(f) + " ∘ id ≠ " + c.arrow_name(f));
    if (c.compose(f, id_cod) != std::optional<ArrowId>(f))
      report.add("neutrality", "id ∘ " + c.arrow_name(f) + " ≠ " + c.arrow_name(f));
  }

  // Exhaustive associativity over composable triples f, g, h.
  for (std::size_t i = 0; i < m; ++i) {
    ArrowId f(i);
    for (ArrowId g : c.out_arrows(c.cod(f))) {
      auto fg = c.compose(f, g);
      if (!fg) continue;
      for (ArrowId h : c.out_arrows(c.cod(g))) {
        auto gh = c.compose(g, h);
        if (!gh) continue;
        auto left = c.compose(*fg, h);
        auto right = c.compose(f, *gh);
        if (left && right && *left != *right)
          report.add("associativity", "(" + c.arrow_name(h) + "∘" + c.arrow_name(g) + ")∘" + c.arrow_name(f) +
                                          " ≠ " + c.arrow_name(h) + "∘(" + c.arrow_name(g) + "∘" +
                                          c.arrow_name(f) + ")");
      }
    }
  }
  return report;
}

inline void require_valid(const FiniteCategory& c, const char* what = "category") {
  auto report = validate_category(c);
  if (!report.ok()) throw PreconditionError(std::string(what) + " is not a category:\n" + report.to_string());
}

// ---------------------------------------------------------------------------
// Constructions

// One arrow for every ordered pair; arrow x -> y has id x * n + y.
inline FiniteCategory indiscrete(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("x" + std::to_string(x));
  std::vector<ArrowInfo> arrows;
  std::vector<std::optional<ArrowId>> ids;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) arrows.push_back({ObjectId(x), ObjectId(y), labels[x] + "->" + labels[y]});
  for (std::size_t x = 0; x < n; ++x) ids.emplace_back(ArrowId(x * n + x));
  std::vector<CompositionEntry> table;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) table.push_back({ArrowId(x * n + y), ArrowId(y * n + z), ArrowId(x * n + z)});
  return FiniteCategory(std::move(labels), std::move(arrows), std::move(ids), table);
}

inline ArrowId indiscrete_arrow(std::size_t n, std::size_t x, std::size_t y) { return ArrowId(x * n + y); }

inline FiniteCategory terminal_category() { return indiscrete(1); }

// Same arrow ids with domain and codomain swapped; compose_op(f, g) = compose(g, f).
// Labels are kept unchanged so that opposite is an exact involution.
inline FiniteCategory opposite(const FiniteCategory& c) {
  std::vector<ArrowInfo> arrows;
  for (const auto& info : c.arrows()) arrows.push_back({info.cod, info.dom, info.label});
  std::vector<std::optional<ArrowId>> ids;
  for (std::size_t x = 0; x < c.object_count(); ++x) ids.push_back(c.identity_entry(ObjectId(x)));
  std::vector<CompositionEntry> table;
  for (const auto& e : c.composition_entries()) table.push_back({e.second, e.first, e.result});
  return FiniteCategory(c.object_labels(), std::move(arrows), std::move(ids), table);
}

// Cyclic group Z/k as a one-object category; arrow i is g^i, arrow 0 is the identity.
inline FiniteCategory cyclic_group(std::size_t k) {
  if (k == 0) throw InputError("cyclic group of order 0");
  std::vector<ArrowInfo> arrows;
  for (std::size_t i = 0; i < k; ++i) arrows.push_back({ObjectId(0), ObjectId(0), i == 0 ? "id" : "g" + std::to_string(i)});
  std::vector<CompositionEntry> table;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table.push_back({ArrowId(i), ArrowId(j), ArrowId((i + j) % k)});
  return FiniteCategory({"*"}, std::move(arrows), {ArrowId(0)}, table);
}

// One-object category on {id, e} with e∘e = e.
inline FiniteCategory idempotent_monoid() {
  CategoryBuilder b;
  ObjectId x = b.add_object("*");
  ArrowId e = b.add_arrow(x, x, "e");
  b.set_composite(e, e, e);
  return b.build();
}

// Two objects and a single non-identity arrow x -> y.
inline FiniteCategory free_arrow() {
  CategoryBuilder b;
  ObjectId x = b.add_object("x");
  ObjectId y = b.add_object("y");
  b.add_arrow(x, y, "f");
  return b.build();
}

// Thin category of a preorder. `relation[x][y]` must be reflexive and
// transitive; the arrow x -> y exists iff relation[x][y].
inline FiniteCategory preorder_category(const std::vector<std::vector<bool>>& relation) {
  const std::size_t n = relation.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (relation[x].size() != n || !relation[x][x]) throw InputError("preorder relation must be square and reflexive");
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (relation[x][y] && relation[y][z] && !relation[x][z]) throw InputError("preorder relation is not transitive");
  }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("x" + std::to_string(x));
  std::vector<ArrowInfo> arrows;
  std::vector<std::vector<std::uint32_t>> index(n, std::vector<std::uint32_t>(n, 0));
  std::vector<std::optional<ArrowId>> ids(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (relation[x][y]) {
        index[x][y] = static_cast<std::uint32_t>(arrows.size());
        if (x == y) ids[x] = ArrowId(arrows.size());
        arrows.push_back({ObjectId(x), ObjectId(y), labels[x] + "<=" + labels[y]});
      }
  std::vector<CompositionEntry> table;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (relation[x][y] && relation[y][z])
          table.push_back({ArrowId(index[x][y]), ArrowId(index[y][z]), ArrowId(index[x][z])});
  return FiniteCategory(std::move(labels), std::move(arrows), std::move(ids), table);
}

// Free category on a directed acyclic multigraph: arrows are the paths.
// `edges` lists (source, target) pairs; edge i becomes a generator. Throws
// if the graph has a cycle. Path arrows are returned together with the
// edge sequence each one spells, so callers can define functors by edges.
struct FreeCategory {
  FiniteCategory category;
  std::vector<std::vector<std::size_t>> paths;  // per arrow, the edge indices in order
};

inline FreeCategory free_category(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                  std::size_t max_arrows = 4096) {
  for (auto [s, t] : edges)
    if (s >= n || t >= n) throw InputError("edge references a missing vertex");
  std::vector<std::vector<std::size_t>> paths;
  std::vector<ArrowInfo> arrows;
  std::vector<std::optional<ArrowId>> ids(n);
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::uint32_t> path_index;  // keyed by (start, path)
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  auto add_path = [&](std::vector<std::size_t> p, std::size_t s, std::size_t t) {
    ArrowId a(arrows.size());
    std::string label;
    if (p.empty()) {
      label = "id_x" + std::to_string(s);
      ids[s] = a;
    } else {
      for (std::size_t i = 0; i < p.size(); ++i) label += (i ? "." : "") + std::string("e") + std::to_string(p[i]);
    }
    arrows.push_back({ObjectId(s), ObjectId(t), label});
    path_index[{s, p}] = a.value;
    paths.push_back(std::move(p));
    ends.emplace_back(s, t);
  };
  for (std::size_t x = 0; x < n; ++x) add_path({}, x, x);
  // Breadth-first extension of paths; acyclicity bounds path length by n.
  std::size_t frontier_begin = n;
  for (std::size_t e = 0; e < edges.size(); ++e) add_path({e}, edges[e].first, edges[e].second);
  while (frontier_begin < paths.size()) {
    std::size_t frontier_end = paths.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].first != ends[i].second) continue;
        auto p = paths[i];
        if (p.size() >= n) throw InputError("free category on a cyclic graph is infinite");
        p.push_back(e);
        add_path(std::move(p), ends[i].first, edges[e].second);
        if (arrows.size() > max_arrows) throw SizeGuardError("free category exceeds arrow bound");
      }
    }
    frontier_begin = frontier_end;
  }
  std::vector<CompositionEntry> table;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = 0; j < paths.size(); ++j) {
      if (ends[i].second != ends[j].first) continue;
      auto p = paths[i];
      p.insert(p.end(), paths[j].begin(), paths[j].end());
      table.push_back({ArrowId(i), ArrowId(j), ArrowId(path_index.at({ends[i].first, p}))});
    }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("x" + std::to_string(x));
  return {FiniteCategory(std::move(labels), std::move(arrows), std::move(ids), table), std::move(paths)};
}

// Product category; object (x, y) has id x * |ob D| + y and arrow (f, g)
// has id f * |arr D| + g.
inline FiniteCategory product(const FiniteCategory& c, const FiniteCategory& d) {
  const std::size_t nd = d.object_count();
  const std::size_t md = d.arrow_count();
  std::vector<std::string> labels;
  for (const auto& a : c.object_labels())
    for (const auto& b : d.object_labels()) labels.push_back("(" + a + "," + b + ")");
  std::vector<ArrowInfo> arrows;
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    for (std::size_t g = 0; g < md; ++g) {
      const auto& fi = c.arrow(ArrowId(f));
      const auto& gi = d.arrow(ArrowId(g));
      arrows.push_back({ObjectId(fi.dom.index() * nd + gi.dom.index()), ObjectId(fi.cod.index() * nd + gi.cod.index()),
                        "(" + c.arrow_name(ArrowId(f)) + "," + d.arrow_name(ArrowId(g)) + ")"});
    }
  std::vector<std::optional<ArrowId>> ids;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    for (std::size_t y = 0; y < nd; ++y)
      ids.emplace_back(ArrowId(c.identity(ObjectId(x)).index() * md + d.identity(ObjectId(y)).index()));
  std::vector<CompositionEntry> table;
  for (const auto& ec : c.composition_entries())
    for (const auto& ed : d.composition_entries())
      table.push_back({ArrowId(ec.first.index() * md + ed.first.index()), ArrowId(ec.second.index() * md + ed.second.index()),
                       ArrowId(ec.result.index() * md + ed.result.index())});
  return FiniteCategory(std::move(labels), std::move(arrows), std::move(ids), table);
}

// Disjoint union; objects and arrows of d are shifted after those of c.
inline FiniteCategory coproduct(const FiniteCategory& c, const FiniteCategory& d) {
  const std::size_t nc = c.object_count();
  const std::size_t mc = c.arrow_count();
  std::vector<std::string> labels = c.object_labels();
  for (const auto& l : d.object_labels()) labels.push_back(l + "'");
  std::vector<ArrowInfo> arrows = c.arrows();
  for (const auto& info : d.arrows()) arrows.push_back({ObjectId(info.dom.index() + nc), ObjectId(info.cod.index() + nc), info.label + "'"});
  std::vector<std::optional<ArrowId>> ids;
  for (std::size_t x = 0; x < nc; ++x) ids.push_back(c.identity_entry(ObjectId(x)));
  for (std::size_t y = 0; y < d.object_count(); ++y) ids.emplace_back(ArrowId(d.identity(ObjectId(y)).index() + mc));
  std::vector<CompositionEntry> table = c.composition_entries();
  for (const auto& e : d.composition_entries())
    table.push_back({ArrowId(e.first.index() + mc), ArrowId(e.second.index() + mc), ArrowId(e.result.index() + mc)});
  return FiniteCategory(std::move(labels), std::move(arrows), std::move(ids), table);
}

// ---------------------------------------------------------------------------
// Groupoids

// Two-sided inverse of every arrow, or nothing if some arrow has none.
inline std::optional<std::vector<ArrowId>> is_groupoid(const FiniteCategory& c) {
  std::vector<ArrowId> inverse;
  inverse.reserve(c.arrow_count());
  for (ArrowId f : c.all_arrows()) {
    std::optional<ArrowId> found;
    for (ArrowId g : c.hom(c.cod(f), c.dom(f))) {
      if (c.then(f, g) == c.identity(c.dom(f)) && c.then(g, f) == c.identity(c.cod(f))) {
        found = g;
        break;
      }
    }
    if (!found) return std::nullopt;
    inverse.push_back(*found);
  }
  return inverse;
}

// All two-sided inverses of f (at most one in a valid category).
inline std::vector<ArrowId> inverses_of(const FiniteCategory& c, ArrowId f) {
  std::vector<ArrowId> out;
  for (ArrowId g : c.hom(c.cod(f), c.dom(f)))
    if (c.then(f, g) == c.identity(c.dom(f)) && c.then(g, f) == c.identity(c.cod(f))) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

struct Functor {
  std::vector<ObjectId> object_map;
  std::vector<ArrowId> arrow_map;

  ObjectId operator()(ObjectId x) const { return object_map[x.index()]; }
  ArrowId operator()(ArrowId a) const { return arrow_map[a.index()]; }

  friend auto operator<=>(const Functor&, const Functor&) = default;
};

inline Functor identity_functor(const FiniteCategory& c) {
  Functor f;
  f.object_map = c.all_objects();
  f.arrow_map = c.all_arrows();
  return f;
}

inline Functor constant_functor(const FiniteCategory& source, const FiniteCategory& target, ObjectId value) {
  Functor f;
  f.object_map.assign(source.object_count(), value);
  f.arrow_map.assign(source.arrow_count(), target.identity(value));
  return f;
}

inline Functor compose_functors(const Functor& first, const Functor& second) {
  Functor out;
  for (ObjectId x : first.object_map) out.object_map.push_back(second(x));
  for (ArrowId a : first.arrow_map) out.arrow_map.push_back(second(a));
  return out;
}

inline ValidationReport validate_functor(const FiniteCategory& source, const FiniteCategory& target, const Functor& f) {
  ValidationReport report;
  if (f.object_map.size() != source.object_count() || f.arrow_map.size() != source.arrow_count()) {
    report.add_fatal("structure", "functor maps do not cover the source category");
    return report;
  }
  for (ObjectId x : f.object_map)
    if (x.index() >= target.object_count()) report.add_fatal("structure", "object image " + to_string(x) + " is missing");
  for (ArrowId a : f.arrow_map)
    if (a.index() >= target.arrow_count()) report.add_fatal("structure", "arrow image " + to_string(a) + " is missing");
  if (report.fatal()) return report;
  for (ArrowId a : source.all_arrows()) {
    ArrowId fa = f(a);
    if (target.dom(fa) != f(source.dom(a)) || target.cod(fa) != f(source.cod(a)))
      report.add_fatal("structure", "image of " + source.arrow_name(a) + " has the wrong domain or codomain");
  }
  if (report.fatal()) return report;

  for (ObjectId x : source.all_objects())
    if (f(source.identity(x)) != target.identity(f(x)))
      report.add("identity", "F(id_" + source.object_label(x) + ") is not an identity");
  for (ArrowId a : source.all_arrows())
    for (ArrowId b : source.out_arrows(source.cod(a))) {
      ArrowId ab = source.then(a, b);
      if (f(ab) != target.then(f(a), f(b)))
        report.add("composition", "F(" + source.arrow_name(b) + "∘" + source.arrow_name(a) + ") ≠ F(" +
                                      source.arrow_name(b) + ")∘F(" + source.arrow_name(a) + ")");
    }
  return report;
}

struct NatTransformation {
  Functor source;  // F
  Functor target;  // G
  std::vector<ArrowId> components;  // component at x: F(x) -> G(x)

  ArrowId operator[](ObjectId x) const { return components[x.index()]; }
  friend auto operator<=>(const NatTransformation&, const NatTransformation&) = default;
};

inline NatTransformation identity_transformation(const FiniteCategory& source, const FiniteCategory& target,
                                                 const Functor& f) {
  NatTransformation t{f, f, {}};
  for (ObjectId x : source.all_objects()) t.components.push_back(target.identity(f(x)));
  return t;
}

inline ValidationReport validate_nat_transformation(const FiniteCategory& source, const FiniteCategory& target,
                                                    const NatTransformation& t) {
  ValidationReport report;
  if (t.components.size() != source.object_count()) {
    report.add_fatal("structure", "one component per source object is required");
    return report;
  }
  for (ObjectId x : source.all_objects()) {
    ArrowId c = t[x];
    if (c.index() >= target.arrow_count()) {
      report.add_fatal("structure", "component at " + source.object_label(x) + " is a missing arrow");
      continue;
    }
    if (target.dom(c) != t.source(x) || target.cod(c) != t.target(x))
      report.add_fatal("structure", "component at " + source.object_label(x) + " is not F(x) -> G(x)");
  }
  if (report.fatal()) return report;
  for (ArrowId a : source.all_arrows()) {
    ObjectId x = source.dom(a), y = source.cod(a);
    if (target.then(t[x], t.target(a)) != target.then(t.source(a), t[y]))
      report.add("naturality", "square at " + source.arrow_name(a) + " does not commute");
  }
  return report;
}

// (β ∘ α)_x = β_x ∘ α_x.
inline NatTransformation vertical_compose(const FiniteCategory& target, const NatTransformation& alpha,
                                          const NatTransformation& beta) {
  if (alpha.target != beta.source) throw InputError("vertical composition needs α: F -> G and β: G -> H");
  NatTransformation out{alpha.source, beta.target, {}};
  out.components.reserve(alpha.components.size());
  for (std::size_t x = 0; x < alpha.components.size(); ++x)
    out.components.push_back(target.then(alpha.components[x], beta.components[x]));
  return out;
}

}  // namespace metric1
