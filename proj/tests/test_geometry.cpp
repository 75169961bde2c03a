#include <gtest/gtest.h>

#include <numeric>

#include "metric1/metric1.hpp"
#include "support/oracles.hpp"
#include "support/random_spaces.hpp"
#include "support/simplex.hpp"

using namespace metric1;

namespace {

ExtWeight w(long n, long d = 1) { return ExtWeight(make_rational(n, d)); }

FiniteMetricSpace point() { return make_metric_space({{Rational(0)}}); }

FiniteMetricSpace pair_at(const Rational& a) { return make_metric_space({{Rational(0), a}, {a, Rational(0)}}); }

// LP for one pattern, written directly from the triangle inequalities of the
// glued space. Variables r(i, j) = i * m + j and t = n * m.
Rational lp_pattern_bound(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const std::vector<std::size_t>& sigma,
                          const std::vector<std::size_t>& tau) {
  const std::size_t n = x.size(), m = y.size(), vars = n * m + 1;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  auto row = [&](std::initializer_list<std::pair<std::size_t, int>> terms, const Rational& rhs) {
    std::vector<Rational> r(vars);
    for (auto [v, c] : terms) r[v] += c;
    a.push_back(r);
    b.push_back(rhs);
  };
  auto r = [m](std::size_t i, std::size_t j) { return i * m + j; };
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (i != k) row({{r(i, j), 1}, {r(k, j), -1}}, x(i, k));
        row({{r(i, j), -1}, {r(k, j), -1}}, -x(i, k));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) {
        if (j != l) row({{r(i, j), 1}, {r(i, l), -1}}, y(j, l));
        row({{r(i, j), -1}, {r(i, l), -1}}, -y(j, l));
      }
  for (std::size_t i = 0; i < n; ++i) row({{r(i, sigma[i]), 1}, {n * m, -1}}, Rational(0));
  for (std::size_t j = 0; j < m; ++j) row({{r(tau[j], j), 1}, {n * m, -1}}, Rational(0));
  std::vector<Rational> cost(vars);
  cost[n * m] = 1;
  auto res = support::minimize(cost, a, b);
  if (res.status != support::LpResult::optimal) throw std::runtime_error("pattern LP not optimal");
  return res.value;
}

// All maps {0..n-1} -> {0..m-1}.
std::vector<std::vector<std::size_t>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  for (;;) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

Rational diameter(const FiniteMetricSpace& x) {
  Rational d(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x(i, j) > d) d = x(i, j);
  return d;
}

FiniteMetricSpace random_space(support::Rng& rng, std::size_t lo, std::size_t hi) {
  return support::random_metric_space(rng, static_cast<std::size_t>(support::uniform(rng, static_cast<long>(lo), static_cast<long>(hi))));
}

}  // namespace

TEST(Lipschitz, Examples) {
  EXPECT_EQ(bilip_constant(pair_at(1), pair_at(3), {0, 1}), Rational(3));
  EXPECT_EQ(lipschitz_distance(pair_at(1), pair_at(3)), Rational(3));
  EXPECT_EQ(lipschitz_distance(pair_at(2), pair_at(2)), Rational(1));
  EXPECT_FALSE(lipschitz_distance(pair_at(1), point()));
  EXPECT_EQ(bilip_constant(point(), pair_at(5), {1}), Rational(1));
  EXPECT_THROW(bilip_constant(pair_at(1), pair_at(1), {0, 0}), PreconditionError);
  // Line {0, 1, 2} onto {0, 1, 4}: the best bijection keeps order.
  EXPECT_EQ(lipschitz_distance(line_space({Rational(0), Rational(1), Rational(2)}), line_space({Rational(0), Rational(1), Rational(4)})),
            Rational(3));
}

TEST(Lipschitz, SliceIsValidAndMatchesDistances) {
  support::Rng rng(113);
  for (int i = 0; i < 30; ++i) {
    std::vector<FiniteMetricSpace> spaces;
    for (int k = 0; k < 3; ++k) spaces.push_back(random_space(rng, 1, 3));
    auto slice = bilip_slice(spaces);
    EXPECT_TRUE(validate_metric1(slice.space).ok());
    // Multiplicative Lawvere distance is the least C_f.
    auto l = lawvere(slice.space);
    for (std::size_t a = 0; a < spaces.size(); ++a)
      for (std::size_t b = 0; b < spaces.size(); ++b) {
        auto d = lipschitz_distance(spaces[a], spaces[b]);
        if (d) {
          EXPECT_EQ(l(a, b), ExtWeight(*d));
        } else {
          EXPECT_TRUE(l(a, b).is_infinite());
        }
      }
  }
}

TEST(Hausdorff, Examples) {
  auto line = line_space({Rational(0), Rational(1), Rational(3), Rational(7)});
  EXPECT_EQ(hausdorff_distance(line, {0}, {1}), Rational(1));
  EXPECT_EQ(hausdorff_distance(line, {0, 1}, {1}), Rational(1));
  EXPECT_EQ(hausdorff_distance(line, {0, 3}, {1, 2}), Rational(4));
  EXPECT_EQ(hausdorff_distance(line, {0, 1, 2, 3}, {0, 1, 2, 3}), Rational(0));
  EXPECT_THROW(hausdorff_distance(line, {}, {1}), PreconditionError);
}

TEST(Gluing, Validation) {
  auto x = pair_at(2);
  EXPECT_TRUE(validate_gluing(x, point(), Gluing{{{Rational(1)}, {Rational(1)}}}).ok());
  EXPECT_FALSE(validate_gluing(x, point(), Gluing{{{Rational(0)}, {Rational(5)}}}).ok());
  EXPECT_TRUE(validate_gluing(x, point(), Gluing{{{Rational(1)}}}).fatal());
  EXPECT_EQ(gluing_hausdorff(x, point(), Gluing{{{Rational(1)}, {Rational(1)}}}), Rational(1));
}

TEST(GromovHausdorff, Fixtures) {
  EXPECT_EQ(gh_distance(point(), point()), Rational(0));
  EXPECT_EQ(gh_distance(point(), pair_at(3)), Rational(3, 2));
  EXPECT_EQ(gh_distance(pair_at(1), pair_at(4)), Rational(3, 2));
  EXPECT_EQ(gh_distance(pair_at(Rational(5, 3)), pair_at(Rational(1, 2))), Rational(7, 12));
  auto tri = make_metric_space({{Rational(0), Rational(1), Rational(1)}, {Rational(1), Rational(0), Rational(1)}, {Rational(1), Rational(1), Rational(0)}});
  EXPECT_EQ(gh_distance(tri, point()), Rational(1, 2));
  EXPECT_EQ(gh_distance(tri, pair_at(1)), Rational(1, 2));
}

TEST(GromovHausdorff, Guards) {
  EXPECT_THROW(gh_distance(FiniteMetricSpace{}, point()), PreconditionError);
  auto big = line_space({Rational(0), Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)});
  EXPECT_THROW(gh_distance(big, point()), SizeGuardError);
  FiniteMetricSpace bad{{"a", "b"}, {{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}};
  EXPECT_THROW(gh_distance(bad, point()), ValidationError);
}

TEST(GromovHausdorff, PatternBoundsMatchSimplex) {
  support::Rng rng(127);
  for (int i = 0; i < 60; ++i) {
    auto x = random_space(rng, 1, 3), y = random_space(rng, 1, 3);
    std::vector<std::size_t> sigma(x.size()), tau(y.size());
    for (auto& s : sigma) s = static_cast<std::size_t>(support::uniform(rng, 0, static_cast<long>(y.size()) - 1));
    for (auto& s : tau) s = static_cast<std::size_t>(support::uniform(rng, 0, static_cast<long>(x.size()) - 1));
    EXPECT_EQ(gh_pattern_bound(x, y, sigma, tau), lp_pattern_bound(x, y, sigma, tau));
  }
}

TEST(GromovHausdorff, MinimumOverPatternsByLp) {
  support::Rng rng(131);
  for (int i = 0; i < 12; ++i) {
    auto x = random_space(rng, 1, 3), y = random_space(rng, 1, 2);
    std::optional<Rational> best;
    for (const auto& sigma : all_maps(x.size(), y.size()))
      for (const auto& tau : all_maps(y.size(), x.size())) {
        Rational v = lp_pattern_bound(x, y, sigma, tau);
        if (!best || v < *best) best = v;
      }
    EXPECT_EQ(gh_distance_gluing(x, y), *best);
  }
}

TEST(GromovHausdorff, RoutesAgreeAndMetricProperties) {
  support::Rng rng(137);
  for (int i = 0; i < 80; ++i) {
    auto x = random_space(rng, 1, 4), y = random_space(rng, 1, 4), z = random_space(rng, 1, 3);
    Rational xy = gh_distance_gluing(x, y);
    EXPECT_EQ(xy, gh_distance_correspondence(x, y));
    EXPECT_EQ(xy, gh_distance(y, x));
    EXPECT_EQ(gh_distance(x, x), Rational(0));
    Rational dx = diameter(x), dy = diameter(y);
    EXPECT_GE(xy, abs(dx - dy) / 2);
    EXPECT_LE(xy, (dx > dy ? dx : dy) / 2);
    EXPECT_LE(xy, gh_distance(x, z) + gh_distance(z, y));
  }
}

TEST(GromovHausdorff, OptimalGluingAttainsDistance) {
  support::Rng rng(139);
  for (int i = 0; i < 80; ++i) {
    auto x = random_space(rng, 1, 4), y = random_space(rng, 1, 4);
    auto g = gh_optimal_gluing(x, y);
    auto report = validate_gluing(x, y, g);
    EXPECT_TRUE(report.ok()) << report.to_string();
    EXPECT_EQ(gluing_hausdorff(x, y, g), gh_distance(x, y));
  }
}

TEST(Cospan, ShortestPathAmalgamSatisfiesTriangle) {
  support::Rng rng(149);
  int degenerate = 0;
  for (int i = 0; i < 100; ++i) {
    auto x = random_space(rng, 1, 3), y = random_space(rng, 1, 3), z = random_space(rng, 1, 3);
    auto c = cospan_weight_triangle_check(x, y, z, gh_optimal_gluing(x, y), gh_optimal_gluing(y, z));
    EXPECT_TRUE(c.holds()) << c.detail;
    EXPECT_LE(c.w_xz, c.w_xy + c.w_yz);
    degenerate += c.degenerate;
  }
  EXPECT_GT(degenerate, 0);
}

TEST(Cospan, FirstLegOnlyIsANegativeControl) {
  support::Rng rng(151);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    auto x = random_space(rng, 1, 3), y = random_space(rng, 2, 3), z = random_space(rng, 1, 3);
    auto c = cospan_weight_triangle_check(x, y, z, gh_optimal_gluing(x, y), gh_optimal_gluing(y, z), AmalgamMode::first_leg_only);
    failures += !c.holds();
  }
  EXPECT_GT(failures, 10);
}

TEST(Cospan, RejectsInvalidGluing) {
  auto c = cospan_weight_triangle_check(pair_at(2), point(), point(), Gluing{{{Rational(0)}, {Rational(5)}}}, Gluing{{{Rational(0)}}});
  EXPECT_FALSE(c.valid_amalgam);
  EXPECT_FALSE(c.holds());
}

TEST(Bimetric, AcceptAndReject) {
  auto x = bimetric_space(2, w(1), w(2), w(1));
  EXPECT_EQ(x.object_count(), 2u);
  EXPECT_EQ(x.arrow_count(), 8u);
  EXPECT_EQ(x[bimetric_arrow(2, 0, 0, true)], w(1));
  EXPECT_EQ(x[bimetric_arrow(2, 0, 1, false)], w(1));
  EXPECT_EQ(x[bimetric_arrow(2, 0, 1, true)], w(2));
  EXPECT_TRUE(is_groupoid(x.category()));
  try {
    bimetric_space(2, w(1), w(2), w(10));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_TRUE(e.report().mentions("triangle-upper"));
  }
  EXPECT_FALSE(validate_metric1(bimetric_candidate(2, {{w(0), w(1)}, {w(1), w(0)}}, {{w(0), w(2)}, {w(2), w(0)}}, w(0))).ok());
  // Agreement with the definition on a grid of parameters.
  for (long a1 = 0; a1 <= 3; ++a1)
    for (long a2 = 0; a2 <= 3; ++a2)
      for (long h = 0; h <= 3; ++h) {
        auto cand = bimetric_candidate(2, {{w(0), w(a1)}, {w(a1), w(0)}}, {{w(0), w(a2)}, {w(a2), w(0)}}, w(h));
        EXPECT_EQ(validate_metric1(cand).ok(), support::brute_valid(cand));
      }
}
