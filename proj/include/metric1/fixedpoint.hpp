#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "metric1/continuity.hpp"
#include "metric1/fincat.hpp"
#include "metric1/limits.hpp"
#include "metric1/mapping.hpp"
#include "metric1/weights.hpp"

namespace metric1 {

struct ContractionCertificate {
  std::optional<Rational> factor;  // least α with w(Fψ) ≤ α w(ψ), if α < 1
  bool zero_preserved = true;
  std::optional<ArrowId> witness;  // arrow breaking the bound
  std::string reason;

  bool is_contraction() const { return factor.has_value(); }
};

// α = max w(Fψ) / w(ψ) over arrows of positive finite weight. Infinite
// arrows impose no bound.
inline ContractionCertificate contraction_factor(const Metric1Space& x, const Functor& f) {
  const auto& c = x.category();
  ContractionCertificate out;
  Rational alpha(0);
  std::optional<ArrowId> argmax;
  for (ArrowId a : c.all_arrows()) {
    const ExtWeight& w = x[a];
    const ExtWeight& fw = x[f(a)];
    if (w.is_infinite()) continue;
    if (w.is_zero()) {
      if (!fw.is_zero()) {
        out.zero_preserved = false;
        out.witness = a;
        out.reason = "weight-0 arrow " + c.arrow_name(a) + " maps to weight " + fw.to_string();
        return out;
      }
      continue;
    }
    if (fw.is_infinite()) {
      out.witness = a;
      out.reason = "finite arrow " + c.arrow_name(a) + " maps to an infinite one";
      return out;
    }
    Rational ratio = fw.value() / w.value();
    if (!argmax || ratio > alpha) {
      alpha = ratio;
      argmax = a;
    }
  }
  if (alpha >= 1) {
    out.witness = argmax;
    out.reason = "ratio " + to_string(alpha) + " at " + c.arrow_name(*argmax) + " is not below 1";
    return out;
  }
  out.factor = alpha;
  out.reason = "contraction";
  return out;
}

struct NaturalContraction {
  Direction direction = Direction::forward;
  std::vector<ArrowId> components;  // forward: c -> Fc; backward: Fc -> c

  ArrowId operator[](ObjectId c) const { return components[c.index()]; }
  friend auto operator<=>(const NaturalContraction&, const NaturalContraction&) = default;
};

// Forward: natural α: id -> F with F(α_c) = α_{Fc}. Backward: the same in
// the opposite category, i.e. α: F -> id.
inline std::vector<NaturalContraction> find_natural_contractions(const FiniteCategory& c, const Functor& f, Direction d,
                                                                 EnumerationGuard guard = {}) {
  const FiniteCategory& base = c;
  FiniteCategory op;
  const FiniteCategory* cat = &base;
  if (d == Direction::backward) {
    op = opposite(c);
    cat = &op;
  }
  auto transformations = enumerate_nat_transformations(*cat, *cat, identity_functor(*cat), f, guard);
  std::vector<NaturalContraction> out;
  for (const auto& t : transformations) {
    bool coherent = true;
    for (ObjectId x : cat->all_objects())
      if (f(t[x]) != t[f(x)]) {
        coherent = false;
        break;
      }
    if (coherent) out.push_back({d, t.components});
  }
  return out;
}

struct CancellationCheck {
  bool holds = true;
  std::optional<std::pair<ArrowId, ArrowId>> witness;  // distinct arrows equalized

  explicit operator bool() const { return holds; }
};

// Right cancellable: f ∘ ψ = g ∘ ψ implies f = g.
inline CancellationCheck is_epimorphism(const FiniteCategory& c, ArrowId psi) {
  const ObjectId y = c.cod(psi);
  for (ObjectId z : c.all_objects()) {
    const auto& hom = c.hom(y, z);
    for (std::size_t i = 0; i < hom.size(); ++i)
      for (std::size_t j = i + 1; j < hom.size(); ++j)
        if (c.then(psi, hom[i]) == c.then(psi, hom[j])) return {false, std::make_pair(hom[i], hom[j])};
  }
  return {};
}

// Left cancellable: ψ ∘ f = ψ ∘ g implies f = g.
inline CancellationCheck is_monomorphism(const FiniteCategory& c, ArrowId psi) {
  return is_epimorphism(opposite(c), psi);
}

struct AlphaFixedArrow {
  ArrowId arrow;        // μ_0: x0 -> d
  ObjectId fixed_object;
  ArrowSequence series;  // ψ_n = α_{F^n x0}
  ArrowSequence legs;    // μ_n: F^n x0 -> d
};

namespace detail {

// The forward construction; the space passed in is already oriented.
inline AlphaFixedArrow banach_forward(const Metric1Space& x, const Functor& f, const NaturalContraction& alpha, ObjectId x0) {
  const auto& c = x.category();
  // Orbit F^n x0 until the first repeat.
  std::vector<ObjectId> orbit{x0};
  std::map<ObjectId, std::size_t> first_seen{{x0, 0}};
  std::size_t pre = 0, period = 0;
  for (;;) {
    ObjectId next = f(orbit.back());
    if (auto it = first_seen.find(next); it != first_seen.end()) {
      pre = it->second;
      period = orbit.size() - it->second;
      break;
    }
    first_seen.emplace(next, orbit.size());
    orbit.push_back(next);
  }
  ArrowSequence series;
  for (std::size_t n = 0; n < orbit.size(); ++n) (n < pre ? series.preperiod : series.period).push_back(alpha[orbit[n]]);
  series = series.canonical();
  for (std::size_t n = 0; n < orbit.size(); ++n)
    if (f(series.at(n)) != series.at(n + 1)) throw InternalError("F(ψ_n) ≠ ψ_{n+1} in the Banach series");

  auto cauchy = check_cauchy(x, series);
  if (!cauchy.holds())
    throw PreconditionError("cauchy: the Banach series is not Cauchy (" + cauchy.reason +
                            "); infinite weights are exempt from the contraction bound");
  if (period != 1) throw InternalError("Cauchy Banach series whose orbit has period " + std::to_string(period));

  // The tail components are weight-0 endo-arrows, hence identities.
  const ObjectId d = orbit[pre];
  if (series.at(pre) != c.identity(d)) throw InternalError("tail component α_d is not the identity");
  // μ_k = ψ_{pre-1} ∘ ... ∘ ψ_k for k < pre, id_d afterwards.
  std::vector<ArrowId> legs(pre + 1);
  legs[pre] = c.identity(d);
  for (std::size_t k = pre; k-- > 0;) legs[k] = c.then(series.at(k), legs[k + 1]);
  ArrowSequence leg_seq{std::vector<ArrowId>(legs.begin(), legs.end() - 1), {legs.back()}};
  leg_seq = leg_seq.canonical();

  // μ_k = F^k μ_0.
  ArrowId fk = legs[0];
  for (std::size_t k = 0; k <= pre; ++k) {
    if (fk != leg_seq.at(k)) throw InternalError("μ_" + std::to_string(k) + " ≠ F^k μ_0");
    fk = f(fk);
  }
  auto limit = check_series_limit(x, series, d, leg_seq);
  if (!limit.holds()) throw InternalError("Banach cone does not certify the series: " + limit.reason);

  AlphaFixedArrow out{legs[0], d, series, leg_seq};
  if (f(d) != d) throw InternalError("fixed object is not fixed");
  if (c.then(alpha[x0], f(out.arrow)) != out.arrow) throw InternalError("α-fixed triangle does not commute");
  return out;
}

}  // namespace detail

// Banach iteration. Preconditions are checked and reported by name.
inline AlphaFixedArrow banach_iterate(const Metric1Space& x, const Functor& f, const NaturalContraction& alpha, ObjectId x0) {
  const auto& c = x.category();
  if (auto r = validate_metric1(x); !r.ok()) throw PreconditionError("valid: not a metric 1-space\n" + r.to_string());
  if (auto r = validate_functor(c, c, f); !r.ok()) throw PreconditionError("functor: not an endofunctor\n" + r.to_string());
  if (!is_nondegenerate(x)) throw PreconditionError("non-degenerate: a non-identity arrow has weight 0");
  auto contraction = contraction_factor(x, f);
  if (!contraction.is_contraction()) throw PreconditionError("contraction: " + contraction.reason);
  if (!uniformly_continuous(x, x, f)) throw PreconditionError("continuous: functor is not uniformly continuous");
  if (alpha.components.size() != c.object_count()) throw PreconditionError("natural-contraction: wrong number of components");

  const bool forward = alpha.direction == Direction::forward;
  const FiniteCategory oriented = forward ? c : opposite(c);
  NatTransformation t{identity_functor(oriented), f, alpha.components};
  if (auto r = validate_nat_transformation(oriented, oriented, t); !r.ok())
    throw PreconditionError("natural-contraction: not natural\n" + r.to_string());
  for (ObjectId o : c.all_objects())
    if (f(alpha[o]) != alpha[f(o)]) throw PreconditionError("natural-contraction: F(α_c) ≠ α_Fc at " + c.object_label(o));
  if (x0.index() >= c.object_count()) throw InputError("start object is missing");
  return detail::banach_forward(forward ? x : opposite_space(x), f, alpha, x0);
}

}  // namespace metric1
