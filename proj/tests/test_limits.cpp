#include <gtest/gtest.h>

#include <functional>

#include "metric1/metric1.hpp"
#include "support/random_spaces.hpp"
#include "support/sequences.hpp"

using namespace metric1;
using support::all_forward_cones;
using support::random_forward_sequence;
using support::random_limit_space;
using support::random_series;

namespace {

ExtWeight w(long n, long d = 1) { return ExtWeight(make_rational(n, d)); }

// Points on a line: c = 0, a = 1/2, b = 1/4, x = 1.
struct LineFixture {
  Metric1Space space = from_metric_space(line_space({Rational(0), Rational(1, 2), Rational(1, 4), Rational(1)}));
  static constexpr std::size_t n = 4;
  static ArrowId arrow(std::size_t from, std::size_t to) { return indiscrete_arrow(n, from, to); }
  enum : std::size_t { c = 0, a = 1, b = 2, x = 3 };
};

Metric1Space z2(const ExtWeight& g) { return Metric1Space(cyclic_group(2), {w(0), g}); }

}  // namespace

TEST(Sequence, AtShiftCanonical) {
  ArrowSequence s{{ArrowId(5), ArrowId(1)}, {ArrowId(2), ArrowId(1)}};
  EXPECT_EQ(s.at(0), ArrowId(5));
  EXPECT_EQ(s.at(2), ArrowId(2));
  EXPECT_EQ(s.at(5), ArrowId(1));
  auto c = s.canonical();
  EXPECT_EQ(c.preperiod, std::vector<ArrowId>{ArrowId(5)});
  EXPECT_EQ(c.period, (std::vector<ArrowId>{ArrowId(1), ArrowId(2)}));
  for (std::size_t n = 0; n < 12; ++n) EXPECT_EQ(c.at(n), s.at(n));
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(s.shifted(k).at(n), s.at(n + k));
  ArrowSequence doubled{{}, {ArrowId(3), ArrowId(3)}};
  EXPECT_EQ(doubled, ArrowSequence::constant(ArrowId(3)));
}

TEST(ForwardCone, ConstantSequence) {
  auto c = indiscrete(2);
  Metric1Space x = indiscrete_space({{w(0), w(1)}, {w(1), w(0)}});
  ArrowId psi = indiscrete_arrow(2, 0, 1);
  EssentialCone cone{0, ObjectId(1), ArrowSequence::constant(c.identity(ObjectId(1)))};
  auto cert = check_forward_limiting_cone(x, ArrowSequence::constant(psi), cone);
  EXPECT_EQ(cert.verdict, Verdict::exact_yes);
  EXPECT_EQ(cert.limiting_arrow, psi);
}

TEST(ForwardCone, ConvergentLineSequence) {
  LineFixture f;
  using F = LineFixture;
  ArrowSequence s{{F::arrow(F::x, F::a), F::arrow(F::x, F::b)}, {F::arrow(F::x, F::c)}};
  EssentialCone cone{0, ObjectId(F::c), {{F::arrow(F::a, F::c), F::arrow(F::b, F::c)}, {F::arrow(F::c, F::c)}}};
  EXPECT_EQ(f.space[cone.legs.at(0)], w(1, 2));
  EXPECT_EQ(f.space[cone.legs.at(1)], w(1, 4));
  auto cert = check_forward_limiting_cone(f.space, s, cone);
  EXPECT_EQ(cert.verdict, Verdict::exact_yes);
  EXPECT_EQ(cert.limiting_arrow, F::arrow(F::x, F::c));
  EXPECT_EQ(f.space[*cert.limiting_arrow], w(1));
}

TEST(ForwardCone, PeriodicPositiveLegFails) {
  auto m = make_metric_space({{Rational(0), Rational(1, 3)}, {Rational(1, 3), Rational(0)}});
  auto x = from_metric_space(m);
  ArrowSequence s = ArrowSequence::constant(indiscrete_arrow(2, 0, 1));
  EssentialCone cone{0, ObjectId(0), ArrowSequence::constant(indiscrete_arrow(2, 1, 0))};
  auto cert = check_forward_limiting_cone(x, s, cone);
  EXPECT_EQ(cert.verdict, Verdict::exact_no);
  ASSERT_TRUE(cert.witness);
  EXPECT_EQ(*cert.witness, 0u);
}

TEST(ForwardCone, GeneratedHorizon) {
  LineFixture f;
  using F = LineFixture;
  GeneratedSequence s{[](std::size_t n) { return n < 2 ? F::arrow(F::x, n == 0 ? F::a : F::b) : F::arrow(F::x, F::c); }, 10};
  GeneratedSequence legs{[](std::size_t n) { return n < 2 ? F::arrow(n == 0 ? F::a : F::b, F::c) : F::arrow(F::c, F::c); }, 10};
  auto cert = check_forward_limiting_cone(f.space, s, 0, ObjectId(F::c), legs);
  EXPECT_EQ(cert.verdict, Verdict::verified_to_horizon);
  GeneratedSequence shortlegs{legs.generator, 1};
  EXPECT_EQ(check_forward_limiting_cone(f.space, s, 0, ObjectId(F::c), shortlegs).verdict, Verdict::inconclusive);
}

TEST(ForwardCone, RejectsMalformedInput) {
  auto x = indiscrete_space({{w(0), w(1)}, {w(1), w(0)}});
  ArrowSequence mixed{{indiscrete_arrow(2, 0, 1)}, {indiscrete_arrow(2, 1, 1)}};
  EssentialCone cone{0, ObjectId(1), ArrowSequence::constant(indiscrete_arrow(2, 1, 1))};
  EXPECT_THROW(check_forward_limiting_cone(x, mixed, cone), InputError);
}

TEST(PartialCompositions, Examples) {
  auto c = cyclic_group(2);
  EXPECT_EQ(partial_compositions(c, ArrowSequence::constant(ArrowId(0))), ArrowSequence::constant(ArrowId(0)));
  auto alt = partial_compositions(c, ArrowSequence::constant(ArrowId(1)));
  EXPECT_EQ(alt, (ArrowSequence{{}, {ArrowId(1), ArrowId(0)}}));
  // Indiscrete: φ_n is the unique arrow x_0 -> x_{n+1}.
  auto i3 = indiscrete(3);
  ArrowSequence s{{indiscrete_arrow(3, 0, 1)}, {indiscrete_arrow(3, 1, 2), indiscrete_arrow(3, 2, 1)}};
  auto p = partial_compositions(i3, s);
  for (std::size_t n = 0; n < 10; ++n) EXPECT_EQ(p.at(n), indiscrete_arrow(3, 0, i3.cod(s.at(n)).index()));
}

TEST(Cauchy, Examples) {
  auto ids = ArrowSequence::constant(ArrowId(0));
  EXPECT_TRUE(check_cauchy(z2(w(1)), ids).holds());
  auto gs = ArrowSequence::constant(ArrowId(1));
  auto no = check_cauchy(z2(w(1)), gs);
  EXPECT_EQ(no.verdict, Verdict::exact_no);
  EXPECT_TRUE(check_cauchy(z2(w(0)), gs).holds());
}

TEST(SeriesLimit, Examples) {
  auto x = z2(w(1));
  auto ids = ArrowSequence::constant(ArrowId(0));
  auto cert = check_series_limit(x, ids, ObjectId(0), ids);
  EXPECT_TRUE(cert.holds());
  EXPECT_EQ(cert.limiting_arrow, ArrowId(0));
  // μ_1 ∘ ψ_0 = g ≠ μ_0 = id.
  auto bad = check_series_limit(x, ids, ObjectId(0), ArrowSequence{{ArrowId(0)}, {ArrowId(1)}});
  EXPECT_EQ(bad.verdict, Verdict::exact_no);
  EXPECT_EQ(bad.witness, 0u);
}

TEST(SeriesLimit, Truncation) {
  LineFixture f;
  using F = LineFixture;
  // x -> a -> b -> c -> c -> ...; legs run to c.
  ArrowSequence s{{F::arrow(F::x, F::a), F::arrow(F::a, F::b), F::arrow(F::b, F::c)}, {F::arrow(F::c, F::c)}};
  ArrowSequence legs{{F::arrow(F::x, F::c), F::arrow(F::a, F::c), F::arrow(F::b, F::c)}, {F::arrow(F::c, F::c)}};
  ASSERT_TRUE(check_series_limit(f.space, s, ObjectId(F::c), legs).holds());
  EXPECT_EQ(truncate_series(s, 0), s);
  auto t = truncate_series(s, legs, 3);
  auto cert = check_series_limit(f.space, t.series, ObjectId(F::c), t.legs);
  EXPECT_TRUE(cert.holds());
  EXPECT_EQ(cert.limiting_arrow, F::arrow(F::c, F::c));
  ArrowSequence periodic{{}, {ArrowId(1), ArrowId(0)}};
  EXPECT_EQ(truncate_series(periodic, 2), periodic);
}

TEST(SeriesLimit, FindAndUniversality) {
  LineFixture f;
  using F = LineFixture;
  ArrowSequence s{{F::arrow(F::x, F::a), F::arrow(F::a, F::b), F::arrow(F::b, F::c)}, {F::arrow(F::c, F::c)}};
  auto found = find_series_limit(f.space, s);
  ASSERT_TRUE(found.certificate.holds());
  EXPECT_EQ(*found.apex, ObjectId(F::c));
  EXPECT_EQ(found.certificate.limiting_arrow, F::arrow(F::x, F::c));
  auto u = check_transfinite_composition(f.space.category(), s, *found.apex, *found.legs);
  EXPECT_TRUE(u.is_cocone);
  EXPECT_TRUE(u.weak);
  EXPECT_TRUE(u.unique);
}

TEST(SeriesLimit, NoLimitForAlternatingGroup) {
  auto found = find_series_limit(z2(w(1)), ArrowSequence::constant(ArrowId(1)));
  EXPECT_FALSE(found.certificate.holds());
  // Cocones exist (g-twisted), but their legs have weight 1 periodically.
  EXPECT_FALSE(series_cocones(cyclic_group(2), ArrowSequence::constant(ArrowId(1)), ObjectId(0)).empty());
}

TEST(WeakPushout, IndiscreteConstant) {
  auto c = indiscrete(2);
  ArrowSequence s = ArrowSequence::constant(indiscrete_arrow(2, 0, 1));
  auto u = check_weak_pushout(c, s, ObjectId(1), ArrowSequence::constant(indiscrete_arrow(2, 1, 1)));
  EXPECT_TRUE(u.is_cocone);
  EXPECT_TRUE(u.weak);
  EXPECT_TRUE(u.unique);
}

TEST(WeakPushout, RepeatedIndicesWithChoicesFail) {
  // Idempotent e: both 1 and e solve a ∘ e = e, so competitors may pick
  // differently at repeated indices and no single θ mediates.
  auto c = idempotent_monoid();
  auto u = check_weak_pushout(c, ArrowSequence::constant(ArrowId(1)), ObjectId(0), ArrowSequence::constant(ArrowId(0)));
  EXPECT_TRUE(u.is_cocone);
  EXPECT_FALSE(u.weak);
  // In Z/2 every arrow is epi, so the same shape is a weak pushout.
  auto g = cyclic_group(2);
  EXPECT_TRUE(check_weak_pushout(g, ArrowSequence::constant(ArrowId(0)), ObjectId(0), ArrowSequence::constant(ArrowId(0))).weak);
}

TEST(Backward, DualOfForward) {
  // In the opposite of the line fixture a forward cone is a backward one.
  LineFixture f;
  using F = LineFixture;
  ArrowSequence s{{F::arrow(F::a, F::x), F::arrow(F::b, F::x)}, {F::arrow(F::c, F::x)}};
  EssentialCone cone{0, ObjectId(F::c), {{F::arrow(F::c, F::a), F::arrow(F::c, F::b)}, {F::arrow(F::c, F::c)}}};
  auto cert = backward_check_limiting_cone(f.space, s, cone);
  EXPECT_TRUE(cert.holds());
  EXPECT_EQ(cert.limiting_arrow, F::arrow(F::c, F::x));
}

TEST(Properties, WeightLimitAndMediators) {
  support::Rng rng(61);
  int certified = 0, mediators = 0;
  for (int i = 0; i < 300; ++i) {
    auto x = random_limit_space(rng);
    const auto& c = x.category();
    auto s = random_forward_sequence(rng, c);
    std::vector<std::pair<EssentialCone, ArrowId>> good;
    for (const auto& cone : all_forward_cones(c, s)) {
      auto cert = check_forward_limiting_cone(x, s, cone);
      if (!cert.holds()) continue;
      ++certified;
      // Tail weights of the sequence equal the weight of the limiting arrow.
      for (std::size_t n = s.preperiod.size(); n < s.preperiod.size() + 2 * s.period.size(); ++n)
        EXPECT_EQ(x[s.at(n)], x[*cert.limiting_arrow]);
      good.emplace_back(cone, *cert.limiting_arrow);
    }
    for (const auto& [a, la] : good)
      for (const auto& [b, lb] : good)
        for (ArrowId theta : find_mediating_arrows(c, a, b)) {
          EXPECT_TRUE(x[theta].is_zero());
          ++mediators;
        }
  }
  EXPECT_GT(certified, 100);
  EXPECT_GT(mediators, 100);
}

TEST(Properties, SeriesLimitsAndTruncation) {
  support::Rng rng(67);
  int certified = 0;
  for (int i = 0; i < 300; ++i) {
    auto x = random_limit_space(rng);
    const auto& c = x.category();
    auto s = random_series(rng, c);
    if (!s) continue;
    auto found = find_series_limit(x, *s);
    // Cauchy is necessary for convergence.
    if (found.certificate.holds()) {
      EXPECT_TRUE(check_cauchy(x, *s).holds());
    }
    if (!found.certificate.holds()) continue;
    ++certified;
    const ArrowId mu0 = *found.certificate.limiting_arrow;
    auto partial = partial_compositions(c, *s);
    std::size_t tail = std::max(s->preperiod.size(), found.legs->preperiod.size()) + 1;
    for (std::size_t n = tail; n < tail + 6; ++n) EXPECT_EQ(x[partial.at(n)], x[mu0]) << n;
    for (std::size_t k = 0; k < 5; ++k) {
      auto t = truncate_series(*s, *found.legs, k);
      auto cert = check_series_limit(x, t.series, *found.apex, t.legs);
      EXPECT_TRUE(cert.holds());
      EXPECT_EQ(cert.limiting_arrow, found.legs->at(k));
    }
  }
  EXPECT_GT(certified, 50);
}
