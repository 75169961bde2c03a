// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "metric1/metric1.hpp"
#include "support/oracles.hpp"
#include "support/random_spaces.hpp"
#include "support/sequences.hpp"

using namespace metric1;
using support::Rng;
using support::uniform;

namespace {

ExtWeight w(long n, long d = 1) { return ExtWeight(make_rational(n, d)); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 3) failures.push_back(what);
  }
};

Functor point_map(std::size_t n, const std::vector<std::size_t>& f) {
  Functor out;
  for (std::size_t i = 0; i < n; ++i) out.object_map.push_back(ObjectId(f[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.arrow_map.push_back(indiscrete_arrow(n, f[i], f[j]));
  return out;
}

FiniteMetricSpace pair_space(const Rational& a) { return make_metric_space({{Rational(0), a}, {a, Rational(0)}}); }

// ---------------------------------------------------------------------------

Outcome axiom_equivalence(Rng& rng) {
  Outcome o;
  int cases = 0, symmetric = 0;
  for (; cases < 600; ++cases) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    auto m = support::random_quasi_metric(rng, n, support::coin(rng));
    auto x = indiscrete_space(m);
    auto l = lawvere(x);
    o.expect(validate_lawvere(l).ok(), "generated weights break the restricted triangle");
    bool valid = validate_metric1(x).ok();
    o.expect(valid == l.is_symmetric(), "validate_metric1 disagrees with symmetry");
    o.expect(support::brute_valid(x) == l.is_symmetric(), "definition oracle disagrees with symmetry");
    symmetric += l.is_symmetric();
  }
  o.expect(symmetric > 0 && symmetric < cases, "only one class generated");
  o.detail = std::to_string(cases) + " indiscrete spaces, " + std::to_string(symmetric) + " symmetric";
  return o;
}

Outcome iso_weights(Rng& rng) {
  Outcome o;
  int spaces = 0, pairs = 0;
  for (int i = 0; i < 20000 && spaces < 200; ++i) {
    auto x = support::random_valid_space(rng);
    const auto& c = x.category();
    bool has_iso = false;
    for (ArrowId a : c.all_arrows()) {
      auto inv = inverses_of(c, a);
      o.expect(inv == support::brute_inverses(c, a), "inverse search routes disagree");
      for (ArrowId b : inv) {
        o.expect(x[a] == x[b], "w(" + c.arrow_name(a) + ") != w(inverse)");
        ++pairs;
        has_iso |= !c.is_identity(a);
      }
    }
    spaces += has_iso;
  }
  o.expect(spaces >= 200, "fewer than 200 spaces with non-identity isomorphisms");
  o.detail = std::to_string(spaces) + " spaces with non-identity isomorphisms, " + std::to_string(pairs) + " inverse pairs";
  return o;
}

Outcome metrization(Rng& rng) {
  Outcome o;
  int cases = 0;
  for (; cases < 120; ++cases) {
    auto x = support::random_valid_space(rng, 4, 12);
    o.expect(coarse_roundtrip_check(x), "round trip changed the coarse structure");
    auto m = metrize(x.category(), bounded_generators(x));
    o.expect(validate_metric1(m).ok(), "metrize output of a random space failed validation");
  }
  auto c = indiscrete(2);
  auto fixture = metrize(c, normalize_generators(c, {ArrowSet(4, {indiscrete_arrow(2, 0, 1)})}, 0));
  bool weights = fixture.weights() == std::vector<ExtWeight>{w(0), w(1), w(2), w(0)};
  o.expect(weights, "worked fixture weights differ from 0/0/1/2");
  auto report = validate_metric1(fixture);
  o.expect(report.ok(), "worked fixture metrize output failed validation (" +
                            (report.violations().empty() ? std::string() : report.violations()[0].rule) + ")");
  o.detail = std::to_string(cases) + " round trips; fixture weights " + (weights ? "0/0/1/2" : "wrong") + ", fixture valid " +
             (report.ok() ? "yes" : "no");
  return o;
}

Outcome mapping_spaces(Rng& rng) {
  Outcome o;
  int pairs = 0, terminal = 0;
  Metric1Space one(terminal_category(), {w(0)});
  for (int i = 0; i < 400 && pairs < 60; ++i) {
    auto x = support::random_valid_space(rng, 2, 6);
    auto y = support::random_valid_space(rng, 3, 9);
    MappingSpace m;
    try {
      m = mapping_space(x, y, EnumerationGuard{200'000});
    } catch (const SizeGuardError&) {
      continue;
    }
    ++pairs;
    o.expect(validate_metric1(m.space).ok(), "mapping space failed validation");
    for (const auto& f : m.functors) o.expect(uniformly_continuous(x, y, f).holds, "object of [X, Y] is not continuous");

    // [1, Y] ≅ Y: F ↦ F(*) on objects, α ↦ α_* on arrows.
    auto t = mapping_space(one, y);
    const auto& tc = t.space.category();
    const auto& yc = y.category();
    std::set<ObjectId> objects;
    std::set<ArrowId> arrows;
    bool iso = t.functors.size() == y.object_count() && tc.arrow_count() == yc.arrow_count();
    for (const auto& f : t.functors) objects.insert(f(ObjectId(0)));
    for (ArrowId a : tc.all_arrows()) {
      ArrowId image = t.transformations[a.index()][ObjectId(0)];
      arrows.insert(image);
      iso = iso && t.space[a] == y[image] && yc.dom(image) == t.functors[tc.dom(a).index()](ObjectId(0)) &&
            yc.cod(image) == t.functors[tc.cod(a).index()](ObjectId(0));
    }
    iso = iso && objects.size() == y.object_count() && arrows.size() == y.arrow_count();
    o.expect(iso, "[terminal, Y] is not isometric to Y");
    terminal += iso;
  }
  o.expect(pairs >= 50, "fewer than 50 pairs within guards");
  o.detail = std::to_string(pairs) + " pairs validated, " + std::to_string(terminal) + " terminal isometries";
  return o;
}

std::vector<Metric1Space> continuity_fixtures() {
  return {Metric1Space(terminal_category(), {w(0)}),
          Metric1Space(cyclic_group(2), {w(0), w(0)}),
          Metric1Space(cyclic_group(2), {w(0), w(1)}),
          Metric1Space(cyclic_group(3), {w(0), w(2), w(2)}),
          Metric1Space(free_arrow(), {w(0), w(0), w(0)}),
          Metric1Space(free_arrow(), {w(0), w(0), w(2)}),
          Metric1Space(idempotent_monoid(), {w(0), w(0)}),
          Metric1Space(idempotent_monoid(), {w(0), w(5)}),
          indiscrete_space({{w(0), w(3, 2)}, {w(3, 2), w(0)}}),
          indiscrete_space({{w(0), w(0)}, {w(0), w(0)}}),
          indiscrete_space({{w(0), ExtWeight::infinity()}, {ExtWeight::infinity(), w(0)}}),
          from_metric_space(line_space({Rational(0), Rational(1), Rational(3)}))};
}

Outcome continuity_suite(Rng& rng) {
  Outcome o;
  auto fixtures = continuity_fixtures();
  for (int i = 0; i < 4; ++i) fixtures.push_back(support::random_valid_space(rng, 3, 9));
  long functors = 0, discontinuous = 0;
  for (const auto& x : fixtures)
    for (const auto& y : fixtures) {
      std::vector<Functor> fs;
      try {
        fs = enumerate_functors(x.category(), y.category(), EnumerationGuard{200'000});
      } catch (const SizeGuardError&) {
        continue;
      }
      const auto& c = x.category();
      for (const auto& f : fs) {
        ++functors;
        bool uniform_ok = uniformly_continuous(x, y, f).holds;
        discontinuous += !uniform_ok;
        o.expect(uniform_ok == support::oracle_uniform(x, y, f), "uniform verdict disagrees with the epsilon-delta oracle");
        o.expect(forward_continuous(x, y, f) == backward_continuous(x, y, f), "forward and backward continuity differ");
        for (Direction d : {Direction::forward, Direction::backward}) {
          const bool fw = d == Direction::forward;
          for (ObjectId ob : c.all_objects()) {
            bool at_object = object_continuity(x, y, f, ob, d).holds;
            o.expect(at_object == support::oracle_at_object(x, y, f, ob, fw), "object verdict disagrees with the oracle");
            o.expect(!uniform_ok || at_object, "uniform continuity without object continuity");
            if (!at_object) continue;
            for (ArrowId a : c.all_arrows())
              if ((fw ? c.cod(a) : c.dom(a)) == ob)
                o.expect(continuous_at_arrow(x, y, f, a, d).holds, "object continuity without continuity at an arrow");
          }
          for (ArrowId a : c.all_arrows())
            o.expect(continuous_at_arrow(x, y, f, a, d).holds == support::oracle_at_arrow(x, y, f, a, fw),
                     "at-arrow verdict disagrees with the oracle");
        }
      }
    }
  o.detail = std::to_string(functors) + " functors over " + std::to_string(fixtures.size()) + " fixtures, " +
             std::to_string(discontinuous) + " not uniformly continuous";
  return o;
}

void check_banach(Outcome& o, const Metric1Space& x, const Functor& f, const NaturalContraction& alpha, ObjectId x0,
                  const AlphaFixedArrow& r) {
  const auto& c = x.category();
  o.expect(f(r.fixed_object) == r.fixed_object, "fixed object is not fixed");
  o.expect(c.dom(r.arrow) == x0 && c.cod(r.arrow) == r.fixed_object, "mu_0 does not run from x0 to the fixed object");
  o.expect(r.arrow == c.then(alpha[x0], f(r.arrow)), "mu_0 is not alpha-fixed");
  o.expect(check_cauchy(x, r.series).holds(), "series is not Cauchy");
  auto limit = check_series_limit(x, r.series, r.fixed_object, r.legs);
  o.expect(limit.holds() && limit.limiting_arrow == r.arrow, "series limit does not certify mu_0");
}

Outcome banach_suite(Rng& rng) {
  Outcome o;
  // Points 0, 1/2, 1 with d(1/2, 1) = 1 and the map 1 -> 1/2 -> 0 -> 0.
  auto fx = from_metric_space(make_metric_space({{Rational(0), Rational(1, 2), Rational(1)},
                                                 {Rational(1, 2), Rational(0), Rational(1)},
                                                 {Rational(1), Rational(1), Rational(0)}},
                                                {"0", "1/2", "1"}));
  auto ff = point_map(3, {0, 0, 1});
  auto alphas = find_natural_contractions(fx.category(), ff, Direction::forward);
  o.expect(alphas.size() == 1, "fixture has no unique natural contraction");
  bool fixture_ok = false;
  if (!alphas.empty()) {
    auto r = banach_iterate(fx, ff, alphas[0], ObjectId(2));
    fixture_ok = r.fixed_object == ObjectId(0) && r.arrow == indiscrete_arrow(3, 2, 0) && fx[r.arrow] == w(1);
    check_banach(o, fx, ff, alphas[0], ObjectId(2), r);
  }
  o.expect(fixture_ok, "fixture did not return fixed object 0 with w(mu_0) = 1");

  int contractions = 0, runs = 0;
  for (int i = 0; i < 5000 && contractions < 60; ++i) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
    auto m = support::random_metric_space(rng, n);
    std::vector<std::size_t> map(n);
    for (auto& v : map) v = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    auto x = from_metric_space(m);
    auto f = point_map(n, map);
    if (!contraction_factor(x, f).is_contraction()) continue;
    auto found = find_natural_contractions(x.category(), f, Direction::forward);
    if (found.empty()) continue;
    ++contractions;
    std::size_t fixed = 0;
    for (std::size_t k = 0; k < n; ++k) fixed = map[fixed];
    for (std::size_t x0 = 0; x0 < n; ++x0) {
      auto r = banach_iterate(x, f, found[0], ObjectId(x0));
      ++runs;
      check_banach(o, x, f, found[0], ObjectId(x0), r);
      o.expect(r.fixed_object == ObjectId(fixed), "fixed object differs from plain iteration");
      o.expect(x[r.arrow] == ExtWeight(m(x0, fixed)), "w(mu_0) differs from d(x0, fixed point)");
    }
  }
  o.expect(contractions >= 50, "fewer than 50 contractions generated");
  o.detail = std::string("fixture ") + (fixture_ok ? "ok" : "wrong") + "; " + std::to_string(contractions) + " contractions, " +
             std::to_string(runs) + " iterations verified";
  return o;
}

Outcome limits_suite(Rng& rng) {
  Outcome o;
  int cones = 0, mediators = 0, series = 0, truncations = 0;
  for (int i = 0; i < 300; ++i) {
    auto x = support::random_limit_space(rng);
    const auto& c = x.category();
    auto s = support::random_forward_sequence(rng, c);
    std::vector<EssentialCone> good;
    for (const auto& cone : support::all_forward_cones(c, s)) {
      auto cert = check_forward_limiting_cone(x, s, cone);
      if (!cert.holds()) continue;
      ++cones;
      for (std::size_t n = s.preperiod.size(); n < s.preperiod.size() + 2 * s.period.size(); ++n)
        o.expect(x[s.at(n)] == x[*cert.limiting_arrow], "lim w(psi_n) != w(limiting arrow)");
      good.push_back(cone);
    }
    for (const auto& a : good)
      for (const auto& b : good)
        for (ArrowId theta : find_mediating_arrows(c, a, b)) {
          o.expect(x[theta].is_zero(), "mediating arrow with positive weight");
          ++mediators;
        }
  }
  for (int i = 0; i < 300; ++i) {
    auto x = support::random_limit_space(rng);
    const auto& c = x.category();
    auto s = support::random_series(rng, c);
    if (!s) continue;
    auto found = find_series_limit(x, *s);
    if (!found.certificate.holds()) continue;
    ++series;
    o.expect(check_cauchy(x, *s).holds(), "convergent series is not Cauchy");
    const ArrowId mu0 = *found.certificate.limiting_arrow;
    auto partial = partial_compositions(c, *s);
    std::size_t tail = std::max(s->preperiod.size(), found.legs->preperiod.size()) + 1;
    for (std::size_t n = tail; n < tail + 6; ++n) o.expect(x[partial.at(n)] == x[mu0], "lim w(phi_n) != w(mu_0)");
    for (std::size_t k = 0; k < 5; ++k) {
      auto t = truncate_series(*s, *found.legs, k);
      auto cert = check_series_limit(x, t.series, *found.apex, t.legs);
      o.expect(cert.holds() && cert.limiting_arrow == found.legs->at(k), "truncation lost certification");
      ++truncations;
    }
  }
  o.expect(cones > 0 && mediators > 0 && series > 0, "no certificates generated");
  o.detail = std::to_string(cones) + " certified cones, " + std::to_string(mediators) + " mediators, " + std::to_string(series) +
             " series, " + std::to_string(truncations) + " truncations";
  return o;
}

Outcome dagger_suite(Rng& rng) {
  Outcome o;
  int indiscrete_cases = 0;
  for (; indiscrete_cases < 60; ++indiscrete_cases) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    auto x = indiscrete_space(support::random_quasi_metric(rng, n, true));
    o.expect(symmetry_hierarchy(x).symmetry == SymmetryClass::groupoidal, "indiscrete fixture is not groupoidal");
  }
  std::vector<std::vector<FiniteMetricSpace>> slices{
      {pair_space(Rational(1)), pair_space(Rational(3))},
      {line_space({Rational(0), Rational(1), Rational(2)}), line_space({Rational(0), Rational(1), Rational(4)})},
      {support::random_metric_space(rng, 3), support::random_metric_space(rng, 3), make_metric_space({{Rational(0)}})}};
  std::string classes;
  for (const auto& spaces : slices) {
    auto slice = bilip_slice(spaces);
    auto cls = symmetry_hierarchy(slice.space).symmetry;
    o.expect(cls == SymmetryClass::groupoidal || cls == SymmetryClass::iso, "bi-Lipschitz slice below iso");
    classes += (classes.empty() ? "" : "/") + to_string(cls);
  }
  int iso = 0;
  for (int i = 0; i < 300; ++i) {
    auto x = support::random_valid_space(rng);
    SymmetryResult h;
    try {
      h = symmetry_hierarchy(x, EnumerationGuard{200'000});
    } catch (const SizeGuardError&) {
      continue;
    }
    if (h.symmetry < SymmetryClass::iso) continue;
    ++iso;
    auto l = lawvere(x);
    bool symmetric = true;
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) symmetric = symmetric && l(a, b) == l(b, a);
    o.expect(symmetric, "iso-class space with asymmetric Lawvere distance");
  }
  o.detail = std::to_string(indiscrete_cases) + " indiscrete fixtures, slices " + classes + ", " + std::to_string(iso) +
             " iso-class spaces";
  return o;
}

Outcome geometry_suite(Rng& rng) {
  Outcome o;
  std::vector<FiniteMetricSpace> corpus{make_metric_space({{Rational(0)}}), pair_space(Rational(1)), pair_space(Rational(3)),
                                        line_space({Rational(0), Rational(1), Rational(2)}),
                                        make_metric_space({{Rational(0), Rational(1), Rational(1)},
                                                           {Rational(1), Rational(0), Rational(1)},
                                                           {Rational(1), Rational(1), Rational(0)}}),
                                        line_space({Rational(0), Rational(1), Rational(3), Rational(6)})};
  while (corpus.size() < 30) corpus.push_back(support::random_metric_space(rng, static_cast<std::size_t>(uniform(rng, 1, 4))));
  int pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      ++pairs;
      o.expect(gh_distance_gluing(corpus[i], corpus[j]) == gh_distance_correspondence(corpus[i], corpus[j]),
               "gluing and correspondence routes disagree");
    }
  for (long a = 1; a <= 6; ++a) {
    Rational r = make_rational(a, 2);
    o.expect(gh_distance(make_metric_space({{Rational(0)}}), pair_space(r)) == r / 2, "gh(point, pair a) != a/2");
    auto lip = lipschitz_distance(pair_space(r), pair_space(3 * r));
    o.expect(lip && *lip == 3, "Lipschitz distance of scaled pairs != 3");
  }
  // With two points the displayed inequality is the whole condition; a third
  // point adds composites through it, checked against the definition.
  int grid = 0;
  for (std::size_t n = 2; n <= 3; ++n)
    for (long a1 = 0; a1 <= 6; ++a1)
      for (long a2 = 0; a2 <= 6; ++a2)
        for (long h = 0; h <= 6; ++h) {
          ExtWeight w1 = w(a1, 2), w2 = w(a2, 2), wh = w(h, 2);
          bool predicted = abs(w1.value() - w2.value()) <= wh.value() && wh.value() <= w1.value() + w2.value();
          bool accepted = true;
          try {
            bimetric_space(n, w1, w2, wh);
          } catch (const ValidationError&) {
            accepted = false;
          }
          if (n == 2) {
            o.expect(accepted == predicted, "two-point bimetric acceptance differs from |a1 - a2| <= h <= a1 + a2");
          } else {
            o.expect(!accepted || predicted, "bimetric space accepted although |a1 - a2| <= h <= a1 + a2 fails");
            std::vector<std::vector<ExtWeight>> m1(n, std::vector<ExtWeight>(n, w1)), m2(n, std::vector<ExtWeight>(n, w2));
            o.expect(accepted == support::brute_valid(bimetric_candidate(n, m1, m2, wh)), "bimetric acceptance differs from the definition");
          }
          ++grid;
        }
  o.detail = std::to_string(pairs) + " corpus pairs, 6 point/pair and scaled-pair checks, " + std::to_string(grid) + " bimetric parameters";
  return o;
}

Outcome star_closure(Rng& rng) {
  Outcome o;
  int cases = 0, symmetric = 0, enumerated = 0;
  for (; cases < 300; ++cases) {
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    auto rel = support::random_preorder(rng, n, 0.3);
    RelationSet m(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (rel[a][b]) m.insert(a, b);
    // The family is every subset of m; it contains the diagonal and is closed
    // under composition because m is a preorder.
    o.expect(RelationSet::diagonal(n).subset_of(m) && rel_compose(m, m).subset_of(m), "family axioms fail");
    bool sym = rel_inverse(m).subset_of(m);
    bool star = rel_star(m).subset_of(m);
    o.expect(sym == star, "symmetry and star closure differ");
    symmetric += sym;
    // Member by member when the family is small enough.
    auto pairs = m.pairs();
    if (pairs.size() > 12) continue;
    ++enumerated;
    bool all_sym = true, all_star = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
      RelationSet e(n);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1) e.insert(pairs[k].first, pairs[k].second);
      all_sym = all_sym && rel_inverse(e).subset_of(m);
      all_star = all_star && rel_star(e).subset_of(m);
    }
    o.expect(all_sym == sym && all_star == star, "member-wise closure differs from the generator test");
  }
  o.expect(symmetric > 0 && symmetric < cases, "only one class generated");
  o.detail = std::to_string(cases) + " families, " + std::to_string(symmetric) + " symmetric, " + std::to_string(enumerated) +
             " enumerated member by member";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric1 acceptance criteria"};
  std::uint64_t seed = 20261016;
  app.add_option("--seed", seed, "Base seed");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome(Rng&)>>> criteria{
      {"axiom equivalence on indiscrete spaces", axiom_equivalence},
      {"isomorphism weights", iso_weights},
      {"metrization round trip", metrization},
      {"mapping spaces", mapping_spaces},
      {"continuity implications", continuity_suite},
      {"Banach iteration", banach_suite},
      {"limits", limits_suite},
      {"daggers", dagger_suite},
      {"geometry", geometry_suite},
      {"star-closed relation families", star_closure},
  };
  int failed = 0;
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Rng rng(seed + i);
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(rng);
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu %s  %s: %s; tolerance exact (rational); %.1fs\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    for (const auto& f : o.failures) std::printf("             %s\n", f.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
