#pragma once

#include <map>
#include <string>
#include <vector>

#include "metric1/continuity.hpp"
#include "metric1/fincat.hpp"
#include "metric1/weights.hpp"

namespace metric1 {

// Bound on backtracking nodes visited by an enumeration.
struct EnumerationGuard {
  std::size_t max_nodes = 2'000'000;
};

namespace detail {

struct NodeCounter {
  std::size_t count = 0;
  std::size_t limit;
  const char* what;
  void tick() {
    if (++count > limit) throw SizeGuardError(std::string(what) + " exceeds the search bound of " + std::to_string(limit) + " nodes");
  }
};

}  // namespace detail

// All functors source -> target, lexicographic on (object map, arrow map).
inline std::vector<Functor> enumerate_functors(const FiniteCategory& source, const FiniteCategory& target,
                                               EnumerationGuard guard = {}) {
  const std::size_t n = source.object_count();
  const std::size_t m = source.arrow_count();
  std::vector<Functor> out;
  if (n > 0 && target.object_count() == 0) return out;
  detail::NodeCounter counter{0, guard.max_nodes, "functor enumeration"};

  // Composable pairs (f, g) whose constraint can be checked once max(f, g, f;g) is assigned.
  std::vector<std::vector<CompositionEntry>> checks(m);
  for (const auto& e : source.composition_entries()) {
    std::size_t last = std::max({e.first.index(), e.second.index(), e.result.index()});
    checks[last].push_back(e);
  }

  Functor f;
  f.object_map.assign(n, ObjectId(0));
  f.arrow_map.assign(m, ArrowId(0));

  std::function<void(std::size_t)> assign_arrow = [&](std::size_t i) {
    if (i == m) {
      out.push_back(f);
      return;
    }
    ArrowId a(i);
    ObjectId dom = f(source.dom(a));
    ObjectId cod = f(source.cod(a));
    for (ArrowId cand : target.hom(dom, cod)) {
      counter.tick();
      if (source.is_identity(a) && cand != target.identity(dom)) continue;
      f.arrow_map[i] = cand;
      bool ok = true;
      for (const auto& e : checks[i])
        if (target.then(f(e.first), f(e.second)) != f(e.result)) {
          ok = false;
          break;
        }
      if (ok) assign_arrow(i + 1);
    }
  };

  std::function<void(std::size_t)> assign_object = [&](std::size_t i) {
    if (i == n) {
      assign_arrow(0);
      return;
    }
    for (ObjectId cand : target.all_objects()) {
      counter.tick();
      f.object_map[i] = cand;
      assign_object(i + 1);
    }
  };
  assign_object(0);
  return out;
}

// All natural transformations F -> G, lexicographic on components.
inline std::vector<NatTransformation> enumerate_nat_transformations(const FiniteCategory& source, const FiniteCategory& target,
                                                                    const Functor& f, const Functor& g,
                                                                    EnumerationGuard guard = {}) {
  const std::size_t n = source.object_count();
  std::vector<NatTransformation> out;
  detail::NodeCounter counter{0, guard.max_nodes, "transformation enumeration"};
  // Naturality at an arrow x -> y is checked once max(x, y) is assigned.
  std::vector<std::vector<ArrowId>> checks(n);
  for (ArrowId a : source.all_arrows())
    checks[std::max(source.dom(a).index(), source.cod(a).index())].push_back(a);

  NatTransformation t{f, g, std::vector<ArrowId>(n, ArrowId(0))};
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) {
      out.push_back(t);
      return;
    }
    for (ArrowId cand : target.hom(f(ObjectId(i)), g(ObjectId(i)))) {
      counter.tick();
      t.components[i] = cand;
      bool ok = true;
      for (ArrowId a : checks[i]) {
        ObjectId x = source.dom(a), y = source.cod(a);
        if (target.then(t[x], g(a)) != target.then(f(a), t[y])) {
          ok = false;
          break;
        }
      }
      if (ok) assign(i + 1);
    }
  };
  assign(0);
  return out;
}

// max over x of w(α_x); 0 for an empty source.
template <class Scale>
ExtWeight nat_weight(const NatTransformation& alpha, const basic_metric1_space<Scale>& y) {
  ExtWeight w = Scale::unit();
  for (ArrowId a : alpha.components)
    if (y[a] > w) w = y[a];
  return w;
}

struct MappingSpace {
  Metric1Space space;
  std::vector<Functor> functors;                   // object i of the space
  std::vector<NatTransformation> transformations;  // arrow j of the space
};

// [X, Y]: continuous functors, all natural transformations, vertical
// composition, and the sup weight. On finite spaces forward, backward and
// uniform continuity agree, so the uniform criterion selects the objects.
inline MappingSpace mapping_space(const Metric1Space& x, const Metric1Space& y, EnumerationGuard guard = {}) {
  const auto& cx = x.category();
  const auto& cy = y.category();
  MappingSpace out;
  for (auto& f : enumerate_functors(cx, cy, guard))
    if (uniformly_continuous(x, y, f)) out.functors.push_back(std::move(f));

  const std::size_t n = out.functors.size();
  std::vector<std::string> labels;
  std::vector<ArrowInfo> arrows;
  std::vector<std::optional<ArrowId>> ids(n);
  std::map<std::vector<ArrowId>, std::uint32_t> index;  // key: source, target, components
  auto key_of = [](std::size_t s, std::size_t t, const std::vector<ArrowId>& comps) {
    std::vector<ArrowId> k{ArrowId(s), ArrowId(t)};
    k.insert(k.end(), comps.begin(), comps.end());
    return k;
  };
  for (std::size_t i = 0; i < n; ++i) labels.push_back("F" + std::to_string(i));
  std::vector<std::size_t> arrow_source, arrow_target;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto& t : enumerate_nat_transformations(cx, cy, out.functors[i], out.functors[j], guard)) {
        ArrowId a(arrows.size());
        bool is_id = i == j && t == identity_transformation(cx, cy, out.functors[i]);
        if (is_id) ids[i] = a;
        arrows.push_back({ObjectId(i), ObjectId(j), (is_id ? "id_F" : "t") + std::to_string(is_id ? i : a.index())});
        index.emplace(key_of(i, j, t.components), a.value);
        arrow_source.push_back(i);
        arrow_target.push_back(j);
        out.transformations.push_back(std::move(t));
      }
  std::vector<CompositionEntry> table;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    for (std::size_t b = 0; b < arrows.size(); ++b) {
      if (arrow_target[a] != arrow_source[b]) continue;
      NatTransformation comp = vertical_compose(cy, out.transformations[a], out.transformations[b]);
      auto it = index.find(key_of(arrow_source[a], arrow_target[b], comp.components));
      if (it == index.end()) throw InternalError("vertical composite is not among the enumerated transformations");
      table.push_back({ArrowId(a), ArrowId(b), ArrowId(it->second)});
    }
  std::vector<ExtWeight> weights;
  for (const auto& t : out.transformations) weights.push_back(nat_weight(t, y));
  out.space = Metric1Space(FiniteCategory(std::move(labels), std::move(arrows), std::move(ids), table), std::move(weights));
  return out;
}

}  // namespace metric1
