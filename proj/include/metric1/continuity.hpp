#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metric1/fincat.hpp"
#include "metric1/limits.hpp"
#include "metric1/weights.hpp"

namespace metric1 {

// Continuity of functors between finite metric 1-spaces.
//
// Each ε/δ definition is decided through a zero-weight transfer criterion.
// Only finitely many weights occur, so choosing δ below the least positive
// weight among the relevant arrows leaves exactly the weight-0 ones; the
// condition w(Fφ) < ε for all ε then says w(Fφ) = 0. Conversely a weight-0
// arrow with w(Fφ) > 0 defeats every δ for ε = w(Fφ).

enum class ContinuityKind { forward_at_arrow, backward_at_arrow, forward_at_object, backward_at_object, uniform };

inline std::string to_string(ContinuityKind k) {
  switch (k) {
    case ContinuityKind::forward_at_arrow: return "forward-at-arrow";
    case ContinuityKind::backward_at_arrow: return "backward-at-arrow";
    case ContinuityKind::forward_at_object: return "forward-at-object";
    case ContinuityKind::backward_at_object: return "backward-at-object";
    case ContinuityKind::uniform: return "uniform";
  }
  return "?";
}

enum class Direction { forward, backward };

// A factorization ψ = φ ∘ ρ, or a single offending arrow (ρ absent).
struct ContinuityWitness {
  std::optional<ArrowId> first;  // ρ
  ArrowId offending;             // φ, with w(φ) = 0 and w(Fφ) > 0
};

struct ContinuityVerdict {
  ContinuityKind kind;
  bool holds = true;
  std::optional<ContinuityWitness> witness;

  explicit operator bool() const { return holds; }
};

template <class ScaleX, class ScaleY>
bool transfers_zero(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y, const Functor& f, ArrowId a) {
  return !ScaleX::is_unit(x[a]) || ScaleY::is_unit(y[f(a)]);
}

// Every factorization ψ = φ ∘ ρ with w(φ) = 0 has w(Fφ) = 0. Trivial
// factorizations (ρ = id) are included.
template <class ScaleX, class ScaleY>
ContinuityVerdict forward_continuous_at_arrow(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y,
                                              const Functor& f, ArrowId psi) {
  const auto& c = x.category();
  if (psi.index() >= c.arrow_count()) throw InputError("arrow " + to_string(psi) + " is not in the source");
  ContinuityVerdict v{ContinuityKind::forward_at_arrow, true, std::nullopt};
  for (ArrowId rho : c.out_arrows(c.dom(psi)))
    for (ArrowId phi : c.hom(c.cod(rho), c.cod(psi)))
      if (c.then(rho, phi) == psi && !transfers_zero(x, y, f, phi)) {
        v.holds = false;
        v.witness = ContinuityWitness{rho, phi};
        return v;
      }
  return v;
}

template <class ScaleX, class ScaleY>
ContinuityVerdict backward_continuous_at_arrow(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y,
                                               const Functor& f, ArrowId psi) {
  auto v = forward_continuous_at_arrow(opposite_space(x), opposite_space(y), f, psi);
  v.kind = ContinuityKind::backward_at_arrow;
  return v;
}

template <class ScaleX, class ScaleY>
ContinuityVerdict continuous_at_arrow(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y,
                                      const Functor& f, ArrowId psi, Direction d) {
  return d == Direction::forward ? forward_continuous_at_arrow(x, y, f, psi) : backward_continuous_at_arrow(x, y, f, psi);
}

// Forward: arrows into x0; backward: arrows out of x0.
template <class ScaleX, class ScaleY>
ContinuityVerdict object_continuity(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y,
                                    const Functor& f, ObjectId x0, Direction d) {
  const auto& c = x.category();
  ContinuityVerdict v{d == Direction::forward ? ContinuityKind::forward_at_object : ContinuityKind::backward_at_object, true, std::nullopt};
  auto arrows = d == Direction::forward ? c.in_arrows(x0) : c.out_arrows(x0);
  for (ArrowId a : arrows)
    if (!transfers_zero(x, y, f, a)) {
      v.holds = false;
      v.witness = ContinuityWitness{std::nullopt, a};
      return v;
    }
  return v;
}

template <class ScaleX, class ScaleY>
ContinuityVerdict uniformly_continuous(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y,
                                       const Functor& f) {
  ContinuityVerdict v{ContinuityKind::uniform, true, std::nullopt};
  for (ArrowId a : x.category().all_arrows())
    if (!transfers_zero(x, y, f, a)) {
      v.holds = false;
      v.witness = ContinuityWitness{std::nullopt, a};
      return v;
    }
  return v;
}

template <class ScaleX, class ScaleY>
bool forward_continuous(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y, const Functor& f) {
  for (ArrowId a : x.category().all_arrows())
    if (!forward_continuous_at_arrow(x, y, f, a)) return false;
  return true;
}

template <class ScaleX, class ScaleY>
bool backward_continuous(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y, const Functor& f) {
  for (ArrowId a : x.category().all_arrows())
    if (!backward_continuous_at_arrow(x, y, f, a)) return false;
  return true;
}

template <class ScaleX, class ScaleY>
bool object_continuous(const basic_metric1_space<ScaleX>& x, const basic_metric1_space<ScaleY>& y, const Functor& f,
                       Direction d) {
  for (ObjectId o : x.category().all_objects())
    if (!object_continuity(x, y, f, o, d)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Compactness

// Constant subsequence n_k = first + k * step of an eventually periodic
// sequence, with identity legs as its limiting cone.
struct SubsequenceWitness {
  std::size_t first = 0;
  std::size_t step = 1;
  ArrowId value;
  EssentialCone cone;
};

inline SubsequenceWitness convergent_subsequence(const FiniteCategory& c, const ArrowSequence& s, Direction d) {
  if (s.period.empty()) throw InputError("sequence has an empty period");
  SubsequenceWitness w;
  w.first = s.preperiod.size();
  w.step = s.period.size();
  w.value = s.at(w.first);
  ObjectId apex = d == Direction::forward ? c.cod(w.value) : c.dom(w.value);
  w.cone = EssentialCone{0, apex, ArrowSequence::constant(c.identity(apex))};
  return w;
}

inline ArrowSequence subsequence(const ArrowSequence& s, const SubsequenceWitness& w) {
  return ArrowSequence::constant(s.at(w.first)).canonical();
}

// An object that recurs in the sequence, with identity arrows to and from it.
struct ObjectRecurrence {
  ObjectId object;
  std::size_t first = 0;
  std::size_t step = 1;
  ArrowId to;
  ArrowId from;
};

inline ObjectRecurrence object_recurrence(const FiniteCategory& c, const std::vector<ObjectId>& preperiod,
                                          const std::vector<ObjectId>& period) {
  if (period.empty()) throw InputError("object sequence has an empty period");
  ObjectId o = period.front();
  return {o, preperiod.size(), period.size(), c.identity(o), c.identity(o)};
}

struct CompactnessCertificate {
  bool forward_compact = true;
  bool backward_compact = true;
  bool object_compact = true;
  std::string reason;
};

// Every finite metric 1-space is compact in all three senses; the witnesses
// are built per sequence by convergent_subsequence and object_recurrence.
template <class Scale>
CompactnessCertificate compactness_certificate(const basic_metric1_space<Scale>& x) {
  return {true, true, true,
          "finite: every eventually periodic sequence has a constant subsequence (" + std::to_string(x.arrow_count()) +
              " arrows, " + std::to_string(x.object_count()) + " objects)"};
}

// ---------------------------------------------------------------------------
// Limit preservation

inline ArrowSequence image(const Functor& f, const ArrowSequence& s) {
  return s.mapped([&](ArrowId a) { return f(a); });
}

inline EssentialCone image(const Functor& f, const EssentialCone& cone) {
  return {cone.start, f(cone.apex), image(f, cone.legs)};
}

// True iff F(cone) is a limiting cone of F(S) with limiting arrow F(μ).
inline bool check_limit_preservation(const Metric1Space& x, const Metric1Space& y, const Functor& f, const ArrowSequence& s,
                                     const EssentialCone& cone, Direction d = Direction::forward) {
  auto cert = d == Direction::forward ? check_forward_limiting_cone(x, s, cone) : backward_check_limiting_cone(x, s, cone);
  if (!cert.holds()) throw PreconditionError("cone does not certify the sequence: " + cert.reason);
  if (!continuous_at_arrow(x, y, f, *cert.limiting_arrow, d))
    throw PreconditionError("functor is not continuous at the limiting arrow");
  auto img = d == Direction::forward ? check_forward_limiting_cone(y, image(f, s), image(f, cone))
                                     : backward_check_limiting_cone(y, image(f, s), image(f, cone));
  return img.holds() && img.limiting_arrow == f(*cert.limiting_arrow);
}

inline bool check_series_limit_preservation(const Metric1Space& x, const Metric1Space& y, const Functor& f,
                                            const ArrowSequence& s, ObjectId apex, const ArrowSequence& legs,
                                            Direction d = Direction::forward) {
  auto cert = d == Direction::forward ? check_series_limit(x, s, apex, legs) : backward_check_series_limit(x, s, apex, legs);
  if (!cert.holds()) throw PreconditionError("legs do not certify the series: " + cert.reason);
  if (!continuous_at_arrow(x, y, f, *cert.limiting_arrow, d))
    throw PreconditionError("functor is not continuous at the limiting arrow");
  auto img = d == Direction::forward ? check_series_limit(y, image(f, s), f(apex), image(f, legs))
                                     : backward_check_series_limit(y, image(f, s), f(apex), image(f, legs));
  return img.holds() && img.limiting_arrow == f(*cert.limiting_arrow);
}

}  // namespace metric1
