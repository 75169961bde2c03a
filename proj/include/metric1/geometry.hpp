#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "metric1/error.hpp"
#include "metric1/ext_weight.hpp"
#include "metric1/fincat.hpp"
#include "metric1/metric_space.hpp"
#include "metric1/weights.hpp"

namespace metric1 {

// ---------------------------------------------------------------------------
// Bi-Lipschitz maps

// C_f = max over distinct pairs of max(d(fx, fx') / d(x, x'), d(x, x') / d(fx, fx')).
inline Rational bilip_constant(const FiniteMetricSpace& source, const FiniteMetricSpace& target,
                               const std::vector<std::size_t>& map) {
  if (map.size() != source.size()) throw InputError("point map must cover the source");
  for (std::size_t p : map)
    if (p >= target.size()) throw InputError("point map leaves the target");
  Rational c(1);
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = i + 1; j < map.size(); ++j) {
      const Rational& d = source(i, j);
      const Rational& fd = target(map[i], map[j]);
      if (sgn(fd) == 0) throw PreconditionError("not bi-Lipschitz: points " + std::to_string(i) + " and " + std::to_string(j) + " collide");
      Rational up = fd / d;
      Rational down = d / fd;
      if (up > c) c = up;
      if (down > c) c = down;
    }
  return c;
}

struct BiLipSlice {
  BiLipSpace space;
  std::vector<std::vector<std::size_t>> maps;  // point map of each arrow
};

// Spaces as objects, all bijections between them as arrows, weighted by C_f
// on the multiplicative scale.
inline BiLipSlice bilip_slice(const std::vector<FiniteMetricSpace>& spaces, std::size_t max_arrows = 20000) {
  const std::size_t k = spaces.size();
  for (const auto& s : spaces)
    if (auto r = validate_metric_space(s); !r.ok()) throw ValidationError(r);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("X" + std::to_string(i));
  std::vector<ArrowInfo> arrows;
  std::vector<std::vector<std::size_t>> maps;
  std::vector<std::optional<ArrowId>> ids(k);
  std::map<std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>, std::uint32_t> index;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (spaces[i].size() != spaces[j].size()) continue;
      std::vector<std::size_t> perm(spaces[i].size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        ArrowId a(arrows.size());
        std::string label = labels[i] + "->" + labels[j] + "[";
        for (std::size_t p = 0; p < perm.size(); ++p) label += (p ? "," : "") + std::to_string(perm[p]);
        arrows.push_back({ObjectId(i), ObjectId(j), label + "]"});
        bool identity = i == j && std::is_sorted(perm.begin(), perm.end());
        if (identity) ids[i] = a;
        index.emplace(std::make_pair(std::make_pair(i, j), perm), a.value);
        maps.push_back(perm);
        if (arrows.size() > max_arrows) throw SizeGuardError("bi-Lipschitz slice exceeds the arrow bound");
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  std::vector<CompositionEntry> table;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    for (std::size_t b = 0; b < arrows.size(); ++b) {
      if (arrows[a].cod != arrows[b].dom) continue;
      std::vector<std::size_t> comp(maps[a].size());
      for (std::size_t p = 0; p < comp.size(); ++p) comp[p] = maps[b][maps[a][p]];
      auto key = std::make_pair(std::make_pair(arrows[a].dom.index(), arrows[b].cod.index()), comp);
      table.push_back({ArrowId(a), ArrowId(b), ArrowId(index.at(key))});
    }
  std::vector<ExtWeight> weights;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    weights.emplace_back(bilip_constant(spaces[arrows[a].dom.index()], spaces[arrows[a].cod.index()], maps[a]));
  BiLipSpace space(FiniteCategory(std::move(labels), std::move(arrows), std::move(ids), table), std::move(weights));
  if (auto r = validate_metric1(space); !r.ok()) throw InternalError("bi-Lipschitz slice failed validation:\n" + r.to_string());
  return {std::move(space), std::move(maps)};
}

// Least C_f over bijections, or nothing when the sizes differ.
inline std::optional<Rational> lipschitz_distance(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  if (x.size() != y.size()) return std::nullopt;
  std::vector<std::size_t> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Rational> best;
  do {
    Rational c = bilip_constant(x, y, perm);
    if (!best || c < *best) best = c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Hausdorff distance

inline Rational hausdorff_distance(const std::vector<std::vector<Rational>>& d, const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) throw PreconditionError("Hausdorff distance of an empty subset");
  auto directed = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to) {
    Rational worst(0);
    for (std::size_t p : from) {
      Rational nearest = d[p][to.front()];
      for (std::size_t q : to)
        if (d[p][q] < nearest) nearest = d[p][q];
      if (nearest > worst) worst = nearest;
    }
    return worst;
  };
  Rational ab = directed(a, b);
  Rational ba = directed(b, a);
  return ab > ba ? ab : ba;
}

inline Rational hausdorff_distance(const FiniteMetricSpace& z, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return hausdorff_distance(z.d, a, b);
}

// ---------------------------------------------------------------------------
// Gluings

// Cross distances r(x, y) making X ⊔ Y a (semi)metric space.
struct Gluing {
  std::vector<std::vector<Rational>> r;
};

// Distance matrix of X ⊔ Y, X first.
inline std::vector<std::vector<Rational>> glued_distances(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Gluing& g) {
  const std::size_t n = x.size(), m = y.size();
  std::vector<std::vector<Rational>> d(n + m, std::vector<Rational>(n + m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = x(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) d[n + i][n + j] = y(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) d[i][n + j] = d[n + j][i] = g.r[i][j];
  return d;
}

inline ValidationReport validate_semimetric(const std::vector<std::vector<Rational>>& d) {
  ValidationReport report;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(d[i][j]) < 0) report.add("positivity", "negative distance at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (d[i][j] != d[j][i]) report.add("symmetry", "asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      for (std::size_t k = 0; k < n; ++k)
        if (d[i][k] > d[i][j] + d[j][k])
          report.add("triangle", "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" + std::to_string(i) + "," +
                                     std::to_string(j) + ") + d(" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
  return report;
}

inline ValidationReport validate_gluing(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Gluing& g) {
  if (g.r.size() != x.size()) {
    ValidationReport r;
    r.add_fatal("structure", "cross matrix has the wrong shape");
    return r;
  }
  for (const auto& row : g.r)
    if (row.size() != y.size()) {
      ValidationReport r;
      r.add_fatal("structure", "cross matrix has the wrong shape");
      return r;
    }
  return validate_semimetric(glued_distances(x, y, g));
}

// d_H(X, Y) inside the glued space.
inline Rational gluing_hausdorff(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Gluing& g) {
  std::vector<std::size_t> a(x.size()), b(y.size());
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), x.size());
  return hausdorff_distance(glued_distances(x, y, g), a, b);
}

// ---------------------------------------------------------------------------
// Gromov-Hausdorff distance

struct GhGuard {
  std::size_t max_points = 6;
  std::size_t max_nodes = 50'000'000;
};

namespace detail {

// All distances of both spaces as integers over one common denominator.
struct IntegerScale {
  mpz_class denominator = 1;

  explicit IntegerScale(std::initializer_list<const FiniteMetricSpace*> spaces) {
    for (const auto* s : spaces)
      for (const auto& row : s->d)
        for (const auto& v : row) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(), v.get_den_mpz_t());
  }

  std::int64_t operator()(const Rational& v) const {
    Rational scaled = v * denominator;
    if (scaled.get_den() != 1) throw InternalError("scaling left a fraction");
    if (!scaled.get_num().fits_slong_p() || abs(scaled.get_num()) > mpz_class(1) << 40)
      throw SizeGuardError("distances too large for exact integer scaling");
    return scaled.get_num().get_si();
  }

  Rational back(std::int64_t v, long extra_den = 1) const {
    Rational r(mpz_class(static_cast<long>(v)), denominator * extra_den);
    r.canonicalize();
    return r;
  }
};

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Closed difference-bound matrix over doubled variables: node 2v stands for
// +v and 2v+1 for -v, an entry D[a][b] bounds value(b) - value(a).
class Octagon {
 public:
  explicit Octagon(std::size_t vars) : n_(2 * vars), d_(n_ * n_, kInf) {
    for (std::size_t i = 0; i < n_; ++i) at(i, i) = 0;
  }

  static std::size_t pos(std::size_t v) { return 2 * v; }
  static std::size_t neg(std::size_t v) { return 2 * v + 1; }

  std::int64_t& at(std::size_t a, std::size_t b) { return d_[a * n_ + b]; }
  std::int64_t at(std::size_t a, std::size_t b) const { return d_[a * n_ + b]; }

  // u - v ≤ c
  void add_difference(std::size_t u, std::size_t v, std::int64_t c) {
    edge(pos(v), pos(u), c);
    edge(neg(u), neg(v), c);
  }
  // -u - v ≤ c
  void add_negative_sum(std::size_t u, std::size_t v, std::int64_t c) {
    if (u == v) {
      edge(pos(u), neg(u), c);
      return;
    }
    edge(pos(v), neg(u), c);
    edge(pos(u), neg(v), c);
  }

  void close() {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i) {
        if (at(i, k) >= kInf) continue;
        for (std::size_t j = 0; j < n_; ++j)
          if (at(k, j) < kInf && at(i, k) + at(k, j) < at(i, j)) at(i, j) = at(i, k) + at(k, j);
      }
  }

  // Adds edge a -> b and restores closure in O(n²).
  void add_edge_closed(std::size_t a, std::size_t b, std::int64_t c) {
    if (c >= at(a, b)) return;
    std::vector<std::int64_t> to_a(n_), from_b(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      to_a[i] = at(i, a);
      from_b[i] = at(b, i);
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (to_a[i] >= kInf) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (from_b[j] < kInf && to_a[i] + c + from_b[j] < at(i, j)) at(i, j) = to_a[i] + c + from_b[j];
    }
  }

  // u - v ≤ c on a closed matrix.
  void add_difference_closed(std::size_t u, std::size_t v, std::int64_t c) {
    add_edge_closed(pos(v), pos(u), c);
    add_edge_closed(neg(u), neg(v), c);
  }

  // Twice the least value of v: -D(+v -> -v).
  std::int64_t twice_lower_bound(std::size_t v) const { return -at(pos(v), neg(v)); }

  bool consistent() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (at(i, i) < 0) return false;
    return true;
  }

 private:
  void edge(std::size_t a, std::size_t b, std::int64_t c) {
    if (c < at(a, b)) at(a, b) = c;
  }

  std::size_t n_;
  std::vector<std::int64_t> d_;
};

inline void check_gh_inputs(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const GhGuard& guard) {
  if (x.size() == 0 || y.size() == 0) throw PreconditionError("Gromov-Hausdorff distance of an empty space");
  if (x.size() > guard.max_points || y.size() > guard.max_points)
    throw SizeGuardError("Gromov-Hausdorff inputs exceed " + std::to_string(guard.max_points) + " points");
  for (const auto* s : {&x, &y})
    if (auto r = validate_metric_space(*s); !r.ok()) throw ValidationError(r);
}

// Mixed triangle constraints of a gluing over variables r(i, j) = i * m + j;
// variable n * m is the objective t.
inline Octagon gluing_constraints(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const IntegerScale& scale) {
  const std::size_t n = x.size(), m = y.size();
  Octagon o(n * m + 1);
  auto r = [m](std::size_t i, std::size_t j) { return i * m + j; };
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        std::int64_t dx = scale(x(i, k));
        if (i != k) o.add_difference(r(i, j), r(k, j), dx);
        o.add_negative_sum(r(i, j), r(k, j), -dx);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        std::int64_t dy = scale(y(j, l));
        if (j != l) o.add_difference(r(i, j), r(i, l), dy);
        o.add_negative_sum(r(i, j), r(i, l), -dy);
      }
  o.close();
  return o;
}

}  // namespace detail

// Gluing route: d_GH = min over cross matrices of d_H(X, Y) in X ⊔ Y. Fixing
// which y is nearest each x and which x is nearest each y turns the
// objective into t ≥ r(x, σx), t ≥ r(τy, y), a system of two-variable unit
// constraints whose least t is read off the shortest-path closure. The
// patterns are searched depth first, pruned by the closure's bound.
inline Rational gh_distance_gluing(const FiniteMetricSpace& x, const FiniteMetricSpace& y, GhGuard guard = {}) {
  detail::check_gh_inputs(x, y, guard);
  const std::size_t n = x.size(), m = y.size();
  const std::size_t t = n * m;
  detail::IntegerScale scale{&x, &y};
  detail::Octagon root = detail::gluing_constraints(x, y, scale);
  if (!root.consistent()) throw InternalError("gluing constraints are inconsistent");

  std::int64_t best = detail::kInf;  // twice the scaled optimum
  std::size_t nodes = 0;
  // Levels 0..n-1 choose σ(x), levels n..n+m-1 choose τ(y).
  std::function<void(std::size_t, const detail::Octagon&)> search = [&](std::size_t level, const detail::Octagon& o) {
    if (++nodes > guard.max_nodes) throw SizeGuardError("Gromov-Hausdorff gluing search exceeds its node bound");
    std::int64_t bound = o.twice_lower_bound(t);
    if (bound >= best) return;
    if (level == n + m) {
      best = bound;
      return;
    }
    const std::size_t choices = level < n ? m : n;
    // Try the choice whose cross variable is currently smallest first.
    std::vector<std::pair<std::int64_t, std::size_t>> order;
    for (std::size_t c = 0; c < choices; ++c) {
      std::size_t var = level < n ? level * m + c : c * m + (level - n);
      order.emplace_back(o.twice_lower_bound(var), c);
    }
    std::sort(order.begin(), order.end());
    for (auto [lb, c] : order) {
      if (lb >= best) break;
      std::size_t var = level < n ? level * m + c : c * m + (level - n);
      detail::Octagon next = o;
      next.add_difference_closed(var, t, 0);
      search(level + 1, next);
    }
  };
  search(0, root);
  return scale.back(best, 2);
}

// Least t for one assignment pattern: r(x, σx) ≤ t and r(τy, y) ≤ t.
inline Rational gh_pattern_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const std::vector<std::size_t>& sigma,
                                 const std::vector<std::size_t>& tau, GhGuard guard = {}) {
  detail::check_gh_inputs(x, y, guard);
  const std::size_t n = x.size(), m = y.size();
  if (sigma.size() != n || tau.size() != m) throw InputError("pattern must assign every point");
  detail::IntegerScale scale{&x, &y};
  detail::Octagon o = detail::gluing_constraints(x, y, scale);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= m) throw InputError("pattern leaves Y");
    o.add_difference_closed(i * m + sigma[i], n * m, 0);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (tau[j] >= n) throw InputError("pattern leaves X");
    o.add_difference_closed(tau[j] * m + j, n * m, 0);
  }
  return scale.back(o.twice_lower_bound(n * m), 2);
}

// Correspondence route: half the least distortion over relations
// graph(f) ∪ graph(g)ᵀ for f: X -> Y, g: Y -> X. Every correspondence
// contains one of these, and distortion is monotone in the relation.
inline Rational gh_distance_correspondence(const FiniteMetricSpace& x, const FiniteMetricSpace& y, GhGuard guard = {}) {
  detail::check_gh_inputs(x, y, guard);
  const std::size_t n = x.size(), m = y.size();
  detail::IntegerScale scale{&x, &y};
  std::vector<std::vector<std::int64_t>> dx(n, std::vector<std::int64_t>(n)), dy(m, std::vector<std::int64_t>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dx[i][j] = scale(x(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) dy[i][j] = scale(y(i, j));

  std::int64_t best = detail::kInf;
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::function<void(std::size_t, std::int64_t)> search = [&](std::size_t level, std::int64_t dis) {
    if (++nodes > guard.max_nodes) throw SizeGuardError("correspondence search exceeds its node bound");
    if (dis >= best) return;
    if (level == n + m) {
      best = dis;
      return;
    }
    for (std::size_t c = 0; c < (level < n ? m : n); ++c) {
      auto pair = level < n ? std::make_pair(level, c) : std::make_pair(c, level - n);
      std::int64_t worst = dis;
      for (auto [a, b] : rel) worst = std::max(worst, std::abs(dx[a][pair.first] - dy[b][pair.second]));
      rel.push_back(pair);
      search(level + 1, worst);
      rel.pop_back();
    }
  };
  search(0, 0);
  return scale.back(best, 2);
}

// Both routes; they must agree exactly.
inline Rational gh_distance(const FiniteMetricSpace& x, const FiniteMetricSpace& y, GhGuard guard = {}) {
  Rational glued = gh_distance_gluing(x, y, guard);
  Rational oracle = gh_distance_correspondence(x, y, guard);
  if (glued != oracle)
    throw InternalError("Gromov-Hausdorff routes disagree: gluing " + to_string(glued) + ", correspondences " + to_string(oracle));
  return glued;
}

// An optimal cross matrix: fix σ, τ from the best pattern, then pin each
// variable to its least feasible value in turn, re-closing over rationals.
inline Gluing gh_optimal_gluing(const FiniteMetricSpace& x, const FiniteMetricSpace& y, GhGuard guard = {}) {
  const Rational target = gh_distance_gluing(x, y, guard);
  const std::size_t n = x.size(), m = y.size();
  const std::size_t vars = n * m + 1;
  const std::size_t nodes = 2 * vars;
  std::vector<std::vector<std::optional<Rational>>> d(nodes, std::vector<std::optional<Rational>>(nodes));
  auto edge = [&](std::size_t a, std::size_t b, const Rational& c) {
    if (!d[a][b] || c < *d[a][b]) d[a][b] = c;
  };
  auto pos = [](std::size_t v) { return 2 * v; };
  auto neg = [](std::size_t v) { return 2 * v + 1; };
  auto difference = [&](std::size_t u, std::size_t v, const Rational& c) {
    edge(pos(v), pos(u), c);
    edge(neg(u), neg(v), c);
  };
  auto negative_sum = [&](std::size_t u, std::size_t v, const Rational& c) {
    if (u == v) return edge(pos(u), neg(u), c);
    edge(pos(v), neg(u), c);
    edge(pos(u), neg(v), c);
  };
  auto fix = [&](std::size_t v, const Rational& value) {
    edge(neg(v), pos(v), Rational(2 * value));
    edge(pos(v), neg(v), Rational(-2 * value));
  };
  auto close = [&] {
    for (std::size_t i = 0; i < nodes; ++i) d[i][i] = d[i][i] ? std::min(*d[i][i], Rational(0)) : Rational(0);
    for (std::size_t k = 0; k < nodes; ++k)
      for (std::size_t i = 0; i < nodes; ++i) {
        if (!d[i][k]) continue;
        for (std::size_t j = 0; j < nodes; ++j)
          if (d[k][j]) {
            Rational s = *d[i][k] + *d[k][j];
            if (!d[i][j] || s < *d[i][j]) d[i][j] = s;
          }
      }
  };
  auto r = [m](std::size_t i, std::size_t j) { return i * m + j; };
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i != k) difference(r(i, j), r(k, j), x(i, k));
        negative_sum(r(i, j), r(k, j), Rational(-x(i, k)));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        if (j != l) difference(r(i, j), r(i, l), y(j, l));
        negative_sum(r(i, j), r(i, l), Rational(-y(j, l)));
      }
  const std::size_t t = n * m;
  fix(t, target);
  // Each x keeps some y within t and vice versa; search the choices with a
  // feasibility test after each one.
  close();
  auto lower = [&](std::size_t v) { return Rational(-*d[pos(v)][neg(v)] / 2); };
  auto feasible = [&] {
    for (std::size_t i = 0; i < nodes; ++i)
      if (d[i][i] && sgn(*d[i][i]) < 0) return false;
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t level) {
    if (level == n + m) return true;
    for (std::size_t c = 0; c < (level < n ? m : n); ++c) {
      std::size_t var = level < n ? r(level, c) : r(c, level - n);
      auto snapshot = d;
      difference(var, t, Rational(0));
      close();
      if (feasible() && place(level + 1)) return true;
      d = std::move(snapshot);
    }
    return false;
  };
  if (!place(0)) throw InternalError("no assignment pattern attains the optimum");
  Gluing g{std::vector<std::vector<Rational>>(n, std::vector<Rational>(m))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rational v = lower(r(i, j));
      g.r[i][j] = v;
      fix(r(i, j), v);
      close();
    }
  return g;
}

// ---------------------------------------------------------------------------
// Cospan composition

enum class AmalgamMode { shortest_path, first_leg_only };

struct CospanCheck {
  bool valid_amalgam = false;
  bool triangle_holds = false;
  bool degenerate = false;  // distinct points at distance 0
  Rational w_xy, w_yz, w_xz;
  std::string detail;

  bool holds() const { return valid_amalgam && triangle_holds; }
};

// Composes gluings X–Y and Y–Z over Y and checks the full triangle
// inequality for the three Hausdorff weights. `first_leg_only` uses only
// r1 for the X–Z distances and serves as a negative control.
inline CospanCheck cospan_weight_triangle_check(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const FiniteMetricSpace& z,
                                                const Gluing& xy, const Gluing& yz, AmalgamMode mode = AmalgamMode::shortest_path) {
  CospanCheck out;
  if (auto r = validate_gluing(x, y, xy); !r.ok()) {
    out.detail = "first gluing invalid: " + r.to_string();
    return out;
  }
  if (auto r = validate_gluing(y, z, yz); !r.ok()) {
    out.detail = "second gluing invalid: " + r.to_string();
    return out;
  }
  const std::size_t n = x.size(), m = y.size(), k = z.size();
  const std::size_t total = n + m + k;
  std::vector<std::vector<Rational>> d(total, std::vector<Rational>(total));
  auto glued_xy = glued_distances(x, y, xy);
  auto glued_yz = glued_distances(y, z, yz);
  for (std::size_t i = 0; i < n + m; ++i)
    for (std::size_t j = 0; j < n + m; ++j) d[i][j] = glued_xy[i][j];
  for (std::size_t i = 0; i < m + k; ++i)
    for (std::size_t j = 0; j < m + k; ++j) d[n + i][n + j] = glued_yz[i][j];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      Rational best = mode == AmalgamMode::first_leg_only ? xy.r[i][0] : xy.r[i][0] + yz.r[0][l];
      for (std::size_t j = 1; j < m; ++j) {
        Rational v = mode == AmalgamMode::first_leg_only ? xy.r[i][j] : xy.r[i][j] + yz.r[j][l];
        if (v < best) best = v;
      }
      d[i][n + m + l] = d[n + m + l][i] = best;
    }
  if (mode == AmalgamMode::shortest_path)
    for (std::size_t p = 0; p < total; ++p)
      for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j)
          if (d[i][p] + d[p][j] < d[i][j]) d[i][j] = d[i][p] + d[p][j];
  auto report = validate_semimetric(d);
  out.valid_amalgam = report.ok();
  if (!out.valid_amalgam) {
    out.detail = "invalid amalgam: " + report.violations().front().rule + " " + report.violations().front().detail;
    return out;
  }
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (i != j && sgn(d[i][j]) == 0) out.degenerate = true;
  std::vector<std::size_t> px(n), py(m), pz(k);
  std::iota(px.begin(), px.end(), 0);
  std::iota(py.begin(), py.end(), n);
  std::iota(pz.begin(), pz.end(), n + m);
  out.w_xy = hausdorff_distance(d, px, py);
  out.w_yz = hausdorff_distance(d, py, pz);
  out.w_xz = hausdorff_distance(d, px, pz);
  Rational gap = abs(out.w_xy - out.w_yz);
  out.triangle_holds = gap <= out.w_xz && out.w_xz <= out.w_xy + out.w_yz;
  if (!out.triangle_holds) out.detail = "cospan weights violate the full triangle inequality";
  return out;
}

// ---------------------------------------------------------------------------
// Bi-metric spaces

// Arrow ±1_xy has id 2 (x n + y) + [sign = -1].
inline ArrowId bimetric_arrow(std::size_t n, std::size_t x, std::size_t y, bool negative) {
  return ArrowId(2 * (x * n + y) + (negative ? 1 : 0));
}

// Candidate space without validation.
inline Metric1Space bimetric_candidate(std::size_t n, const std::vector<std::vector<ExtWeight>>& a1,
                                       const std::vector<std::vector<ExtWeight>>& a2, const ExtWeight& h) {
  if (a1.size() != n || a2.size() != n) throw InputError("weight matrices must be n by n");
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back("x" + std::to_string(x));
  std::vector<ArrowInfo> arrows;
  std::vector<ExtWeight> weights;
  std::vector<std::optional<ArrowId>> ids(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (int neg = 0; neg < 2; ++neg) {
        arrows.push_back({ObjectId(x), ObjectId(y), std::string(neg ? "-1_" : "+1_") + labels[x] + labels[y]});
        if (x == y) {
          weights.push_back(neg ? h : ExtWeight());
          if (!neg) ids[x] = bimetric_arrow(n, x, y, false);
        } else {
          weights.push_back(neg ? a2[x][y] : a1[x][y]);
        }
      }
  std::vector<CompositionEntry> table;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t)
            table.push_back({bimetric_arrow(n, x, y, s), bimetric_arrow(n, y, z, t), bimetric_arrow(n, x, z, s != t)});
  return Metric1Space(FiniteCategory(std::move(labels), std::move(arrows), std::move(ids), table), std::move(weights));
}

// Validated bi-metric space; violations are thrown with the offending pairs.
inline Metric1Space bimetric_space(std::size_t n, const std::vector<std::vector<ExtWeight>>& a1,
                                   const std::vector<std::vector<ExtWeight>>& a2, const ExtWeight& h) {
  Metric1Space x = bimetric_candidate(n, a1, a2, h);
  if (auto r = validate_metric1(x); !r.ok()) throw ValidationError(r);
  return x;
}

inline Metric1Space bimetric_space(std::size_t n, const ExtWeight& a1, const ExtWeight& a2, const ExtWeight& h) {
  std::vector<std::vector<ExtWeight>> m1(n, std::vector<ExtWeight>(n, a1)), m2(n, std::vector<ExtWeight>(n, a2));
  return bimetric_space(n, m1, m2, h);
}

}  // namespace metric1
