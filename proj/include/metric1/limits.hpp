#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "metric1/fincat.hpp"
#include "metric1/weights.hpp"

namespace metric1 {

// ---------------------------------------------------------------------------
// Eventually periodic arrow sequences

// a_n = preperiod[n] for n < |preperiod|, then period repeated forever.
struct ArrowSequence {
  std::vector<ArrowId> preperiod;
  std::vector<ArrowId> period;

  static ArrowSequence constant(ArrowId a) { return {{}, {a}}; }

  std::size_t preperiod_length() const { return preperiod.size(); }
  std::size_t period_length() const { return period.size(); }

  ArrowId at(std::size_t n) const {
    if (period.empty()) throw InputError("sequence has an empty period");
    if (n < preperiod.size()) return preperiod[n];
    return period[(n - preperiod.size()) % period.size()];
  }

  // S(n + k) as a sequence in n.
  ArrowSequence shifted(std::size_t k) const {
    if (period.empty()) throw InputError("sequence has an empty period");
    ArrowSequence out;
    if (k < preperiod.size()) {
      out.preperiod.assign(preperiod.begin() + static_cast<std::ptrdiff_t>(k), preperiod.end());
      out.period = period;
    } else {
      std::size_t r = (k - preperiod.size()) % period.size();
      out.period.assign(period.begin() + static_cast<std::ptrdiff_t>(r), period.end());
      out.period.insert(out.period.end(), period.begin(), period.begin() + static_cast<std::ptrdiff_t>(r));
    }
    return out;
  }

  // Shortest description of the same sequence.
  ArrowSequence canonical() const {
    if (period.empty()) throw InputError("sequence has an empty period");
    ArrowSequence out = *this;
    const std::size_t p = out.period.size();
    for (std::size_t q = 1; q < p; ++q) {
      if (p % q) continue;
      bool ok = true;
      for (std::size_t i = q; i < p && ok; ++i) ok = out.period[i] == out.period[i - q];
      if (ok) {
        out.period.resize(q);
        break;
      }
    }
    while (!out.preperiod.empty() && out.preperiod.back() == out.period.back()) {
      std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
      out.preperiod.pop_back();
    }
    return out;
  }

  template <class Map>
  ArrowSequence mapped(Map&& f) const {
    ArrowSequence out;
    for (ArrowId a : preperiod) out.preperiod.push_back(f(a));
    for (ArrowId a : period) out.period.push_back(f(a));
    return out;
  }

  friend bool operator==(const ArrowSequence& a, const ArrowSequence& b) {
    auto ca = a.canonical();
    auto cb = b.canonical();
    return ca.preperiod == cb.preperiod && ca.period == cb.period;
  }
};

// Sequence given by a function, trusted only up to `horizon`.
struct GeneratedSequence {
  std::function<ArrowId(std::size_t)> generator;
  std::size_t horizon = 0;
};

namespace detail {

inline std::size_t lcm_periods(std::initializer_list<const ArrowSequence*> seqs) {
  std::size_t l = 1;
  for (const auto* s : seqs) {
    if (s->period.empty()) throw InputError("sequence has an empty period");
    l = std::lcm(l, s->period.size());
  }
  return l;
}

// Index from which every sequence is periodic, counting `offset[i]` as the
// index at which sequence i starts.
inline std::size_t tail_start(std::initializer_list<std::pair<const ArrowSequence*, std::size_t>> seqs) {
  std::size_t t = 0;
  for (auto [s, offset] : seqs) t = std::max(t, offset + s->preperiod.size());
  return t;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Certificates

enum class Verdict { exact_yes, exact_no, verified_to_horizon, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exact_yes: return "exact-yes";
    case Verdict::exact_no: return "exact-no";
    case Verdict::verified_to_horizon: return "verified-to-horizon";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct LimitCertificate {
  Verdict verdict = Verdict::exact_no;
  std::optional<ArrowId> limiting_arrow;
  std::optional<std::size_t> witness;
  std::string reason;

  bool holds() const { return verdict == Verdict::exact_yes; }
};

inline LimitCertificate no(std::size_t witness, std::string reason) {
  return {Verdict::exact_no, std::nullopt, witness, std::move(reason)};
}

// ---------------------------------------------------------------------------
// Sequences

// Cone legs ρ_k: x_k -> apex for k ≥ start; legs.at(j) is ρ_{start + j}.
struct EssentialCone {
  std::size_t start = 0;
  ObjectId apex;
  ArrowSequence legs;

  ArrowId leg(std::size_t k) const { return legs.at(k - start); }
};

inline void require_forward_sequence(const FiniteCategory& c, const ArrowSequence& s) {
  const std::size_t end = s.preperiod.size() + s.period.size();
  if (s.period.empty()) throw InputError("sequence has an empty period");
  for (std::size_t n = 0; n < end; ++n) {
    if (s.at(n).index() >= c.arrow_count()) throw InputError("sequence arrow " + to_string(s.at(n)) + " is missing");
    if (c.dom(s.at(n)) != c.dom(s.at(0))) throw InputError("forward sequence arrows must share their domain");
  }
}

inline void require_series(const FiniteCategory& c, const ArrowSequence& s) {
  if (s.period.empty()) throw InputError("series has an empty period");
  const std::size_t end = s.preperiod.size() + s.period.size();
  for (std::size_t n = 0; n < end; ++n)
    if (s.at(n).index() >= c.arrow_count()) throw InputError("series arrow " + to_string(s.at(n)) + " is missing");
  for (std::size_t n = 0; n < end; ++n)
    if (c.cod(s.at(n)) != c.dom(s.at(n + 1)))
      throw InputError("series arrows " + std::to_string(n) + " and " + std::to_string(n + 1) + " do not compose");
}

// Limiting cone test for a forward sequence ψ_n: x -> x_n. Exact for
// eventually periodic data: all composites ρ_k ∘ ψ_k must coincide and the
// periodic legs must have weight 0, which is what lim w(ρ_k) = 0 means for
// a sequence taking finitely many values.
inline LimitCertificate check_forward_limiting_cone(const Metric1Space& x, const ArrowSequence& s, const EssentialCone& cone) {
  const auto& c = x.category();
  require_forward_sequence(c, s);
  if (cone.legs.period.empty()) throw InputError("cone legs have an empty period");
  const std::size_t end = std::max(cone.start, detail::tail_start({{&s, 0}, {&cone.legs, cone.start}})) +
                          detail::lcm_periods({&s, &cone.legs});
  for (std::size_t k = cone.start; k < end; ++k) {
    ArrowId rho = cone.leg(k);
    if (rho.index() >= c.arrow_count()) throw InputError("cone leg " + to_string(rho) + " is missing");
    if (c.dom(rho) != c.cod(s.at(k)) || c.cod(rho) != cone.apex)
      throw InputError("cone leg at index " + std::to_string(k) + " does not run from x_k to the apex");
  }
  const ArrowId limit = c.then(s.at(cone.start), cone.leg(cone.start));
  for (std::size_t k = cone.start + 1; k < end; ++k)
    if (c.then(s.at(k), cone.leg(k)) != limit)
      return no(k, "composite at index " + std::to_string(k) + " differs from the one at " + std::to_string(cone.start));
  for (std::size_t j = 0; j < cone.legs.period.size(); ++j) {
    ArrowId rho = cone.legs.period[j];
    if (!x[rho].is_zero())
      return no(cone.start + cone.legs.preperiod.size() + j,
                "periodic leg " + c.arrow_name(rho) + " has weight " + x[rho].to_string());
  }
  return {Verdict::exact_yes, limit, std::nullopt, "limiting cone"};
}

// Same test on generator-backed data, trusted up to the smaller horizon.
inline LimitCertificate check_forward_limiting_cone(const Metric1Space& x, const GeneratedSequence& s, std::size_t start,
                                                    ObjectId apex, const GeneratedSequence& legs) {
  const auto& c = x.category();
  const std::size_t h = std::min(s.horizon, start + legs.horizon);
  if (h <= start) return {Verdict::inconclusive, std::nullopt, std::nullopt, "horizon too short"};
  const ObjectId base = c.dom(s.generator(0));
  std::optional<ArrowId> limit;
  for (std::size_t k = 0; k < h; ++k) {
    ArrowId psi = s.generator(k);
    if (c.dom(psi) != base) throw InputError("forward sequence arrows must share their domain");
    if (k < start) continue;
    ArrowId rho = legs.generator(k - start);
    if (c.dom(rho) != c.cod(psi) || c.cod(rho) != apex) throw InputError("cone leg does not run from x_k to the apex");
    ArrowId comp = c.then(psi, rho);
    if (!limit) limit = comp;
    if (comp != *limit) return no(k, "composite at index " + std::to_string(k) + " differs");
  }
  ArrowId last = legs.generator(h - 1 - start);
  if (!x[last].is_zero())
    return {Verdict::inconclusive, limit, h - 1, "last leg inside the horizon has weight " + x[last].to_string()};
  return {Verdict::verified_to_horizon, limit, std::nullopt, "composites agree and the last leg has weight 0"};
}

// Arrows θ: apex -> apex' with θ ∘ ρ_l = ρ'_l for infinitely many l. For
// periodic data that means for some index in the common periodic tail.
inline std::vector<ArrowId> find_mediating_arrows(const FiniteCategory& c, const EssentialCone& a, const EssentialCone& b) {
  const std::size_t t = std::max({a.start, b.start, detail::tail_start({{&a.legs, a.start}, {&b.legs, b.start}})});
  const std::size_t end = t + detail::lcm_periods({&a.legs, &b.legs});
  std::vector<ArrowId> out;
  for (ArrowId theta : c.hom(a.apex, b.apex)) {
    for (std::size_t l = t; l < end; ++l) {
      if (c.then(a.leg(l), theta) == b.leg(l)) {
        out.push_back(theta);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series

// φ_n = ψ_n ∘ ... ∘ ψ_0, eventually periodic by pigeonhole on (phase, φ_n).
inline ArrowSequence partial_compositions(const FiniteCategory& c, const ArrowSequence& s) {
  require_series(c, s);
  const std::size_t pre = s.preperiod.size();
  const std::size_t p = s.period.size();
  std::vector<ArrowId> values;
  std::map<std::pair<std::size_t, ArrowId>, std::size_t> seen;
  ArrowId acc = s.at(0);
  for (std::size_t n = 0;; ++n) {
    if (n > 0) acc = c.then(acc, s.at(n));
    if (n >= pre) {
      auto key = std::make_pair((n - pre) % p, acc);
      if (auto it = seen.find(key); it != seen.end()) {
        ArrowSequence out;
        out.preperiod.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(it->second));
        out.period.assign(values.begin() + static_cast<std::ptrdiff_t>(it->second), values.end());
        return out.canonical();
      }
      seen.emplace(key, n);
    }
    values.push_back(acc);
  }
}

// Cauchy test: for a periodic tail every window ψ_n ∘ ... ∘ ψ_m with n > m
// past the preperiod must have weight 0, since finitely many weights occur.
// Windows from each phase are followed until their (phase, arrow) state repeats.
inline LimitCertificate check_cauchy(const Metric1Space& x, const ArrowSequence& s) {
  const auto& c = x.category();
  require_series(c, s);
  const std::size_t pre = s.preperiod.size();
  const std::size_t p = s.period.size();
  for (std::size_t j = 0; j < p; ++j) {
    const std::size_t m = pre + j;
    std::set<std::pair<std::size_t, ArrowId>> seen;
    ArrowId acc = s.at(m);
    for (std::size_t n = m + 1;; ++n) {
      acc = c.then(acc, s.at(n));
      if (!x[acc].is_zero())
        return no(m, "window from " + std::to_string(m) + " to " + std::to_string(n) + " has weight " + x[acc].to_string());
      if (!seen.emplace((n - pre) % p, acc).second) break;
    }
  }
  return {Verdict::exact_yes, std::nullopt, std::nullopt, "every tail window has weight 0"};
}

// Legs μ_n: x_n -> apex with μ_{n+1} ∘ ψ_n = μ_n and lim w(μ_n) = 0.
inline LimitCertificate check_series_limit(const Metric1Space& x, const ArrowSequence& s, ObjectId apex,
                                           const ArrowSequence& legs) {
  const auto& c = x.category();
  require_series(c, s);
  if (legs.period.empty()) throw InputError("cone legs have an empty period");
  const std::size_t end = detail::tail_start({{&s, 0}, {&legs, 0}}) + detail::lcm_periods({&s, &legs});
  for (std::size_t n = 0; n <= end; ++n) {
    ArrowId mu = legs.at(n);
    if (mu.index() >= c.arrow_count()) throw InputError("cone leg " + to_string(mu) + " is missing");
    if (c.dom(mu) != c.dom(s.at(n)) || c.cod(mu) != apex)
      throw InputError("cone leg at index " + std::to_string(n) + " does not run from x_n to the apex");
  }
  for (std::size_t n = 0; n < end; ++n)
    if (c.then(s.at(n), legs.at(n + 1)) != legs.at(n))
      return no(n, "leg " + std::to_string(n + 1) + " after ψ_" + std::to_string(n) + " is not leg " + std::to_string(n));
  for (std::size_t j = 0; j < legs.period.size(); ++j) {
    ArrowId mu = legs.period[j];
    if (!x[mu].is_zero())
      return no(legs.preperiod.size() + j, "periodic leg " + c.arrow_name(mu) + " has weight " + x[mu].to_string());
  }
  return {Verdict::exact_yes, legs.at(0), std::nullopt, "series converges"};
}

struct TruncatedSeries {
  ArrowSequence series;
  ArrowSequence legs;
};

inline ArrowSequence truncate_series(const ArrowSequence& s, std::size_t k) { return s.shifted(k); }

inline TruncatedSeries truncate_series(const ArrowSequence& s, const ArrowSequence& legs, std::size_t k) {
  return {s.shifted(k), legs.shifted(k)};
}

// All cocones ι_n: x_n -> apex (ι_{n+1} ∘ ψ_n = ι_n) over a periodic series.
//
// With T(a) = a ∘ (ψ_{pre+p-1} ∘ ... ∘ ψ_pre) on hom(x_pre, apex), the value
// ι_pre of a cocone has preimages under every power of T, so it is a periodic
// point; T permutes the periodic points, so ι_pre fixes the whole cocone.
inline std::vector<ArrowSequence> series_cocones(const FiniteCategory& c, const ArrowSequence& s, ObjectId apex) {
  require_series(c, s);
  const std::size_t pre = s.preperiod.size();
  const std::size_t p = s.period.size();
  const ObjectId base = c.dom(s.at(pre));
  ArrowId loop = s.at(pre);
  for (std::size_t i = 1; i < p; ++i) loop = c.then(loop, s.at(pre + i));
  auto t = [&](ArrowId a) { return c.then(loop, a); };

  std::vector<ArrowSequence> out;
  for (ArrowId a : c.hom(base, apex)) {
    // Cycle length of a under T, if a is periodic.
    std::size_t cycle = 0;
    ArrowId b = a;
    for (std::size_t i = 1; i <= c.hom(base, apex).size(); ++i) {
      b = t(b);
      if (b == a) {
        cycle = i;
        break;
      }
    }
    if (cycle == 0) continue;
    // Values at pre + k p: a_0 = a, a_{k+1} = T^{cycle-1}(a_k).
    std::vector<ArrowId> anchors{a};
    for (std::size_t k = 1; k <= cycle; ++k) {
      ArrowId v = anchors.back();
      for (std::size_t i = 0; i + 1 < cycle; ++i) v = t(v);
      anchors.push_back(v);
    }
    std::vector<ArrowId> legs(pre + cycle * p + 1);
    for (std::size_t k = 0; k <= cycle; ++k) legs[pre + k * p] = anchors[k];
    for (std::size_t k = cycle; k-- > 0;)
      for (std::size_t n = pre + (k + 1) * p; n-- > pre + k * p + 1;) legs[n] = c.then(s.at(n), legs[n + 1]);
    for (std::size_t n = pre; n-- > 0;) legs[n] = c.then(s.at(n), legs[n + 1]);
    ArrowSequence seq;
    seq.preperiod.assign(legs.begin(), legs.begin() + static_cast<std::ptrdiff_t>(pre));
    seq.period.assign(legs.begin() + static_cast<std::ptrdiff_t>(pre), legs.end() - 1);
    out.push_back(seq.canonical());
  }
  return out;
}

struct SeriesLimit {
  LimitCertificate certificate;
  std::optional<ObjectId> apex;
  std::optional<ArrowSequence> legs;
};

// Searches every apex and every cocone for a limiting one.
inline SeriesLimit find_series_limit(const Metric1Space& x, const ArrowSequence& s) {
  const auto& c = x.category();
  for (ObjectId apex : c.all_objects())
    for (const auto& legs : series_cocones(c, s, apex)) {
      auto cert = check_series_limit(x, s, apex, legs);
      if (cert.holds()) return {cert, apex, legs};
    }
  return {{Verdict::exact_no, std::nullopt, std::nullopt, "no cocone has legs of limit weight 0"}, std::nullopt, std::nullopt};
}

// Arrows θ with θ ∘ μ_k = ν_k for every k ≥ 0.
inline std::vector<ArrowId> find_series_mediating_arrows(const FiniteCategory& c, ObjectId apex_a, const ArrowSequence& a,
                                                         ObjectId apex_b, const ArrowSequence& b) {
  const std::size_t end = detail::tail_start({{&a, 0}, {&b, 0}}) + detail::lcm_periods({&a, &b});
  std::vector<ArrowId> out;
  for (ArrowId theta : c.hom(apex_a, apex_b)) {
    bool ok = true;
    for (std::size_t k = 0; k < end && ok; ++k) ok = c.then(a.at(k), theta) == b.at(k);
    if (ok) out.push_back(theta);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Categorical weak colimits, checked against every competing cocone.

struct UniversalCheck {
  bool is_cocone = false;
  bool weak = false;    // every competitor has a mediating arrow
  bool unique = false;  // ... and exactly one
  std::string witness;  // first competitor that fails
};

inline UniversalCheck check_transfinite_composition(const FiniteCategory& c, const ArrowSequence& s, ObjectId apex,
                                                    const ArrowSequence& legs) {
  require_series(c, s);
  UniversalCheck out;
  const std::size_t end0 = detail::tail_start({{&s, 0}, {&legs, 0}}) + detail::lcm_periods({&s, &legs});
  for (std::size_t n = 0; n < end0; ++n) {
    if (c.dom(legs.at(n)) != c.dom(s.at(n)) || c.cod(legs.at(n)) != apex) throw InputError("legs do not run to the apex");
    if (c.then(s.at(n), legs.at(n + 1)) != legs.at(n)) {
      out.witness = "legs do not commute at index " + std::to_string(n);
      return out;
    }
  }
  out.is_cocone = true;
  out.weak = out.unique = true;
  for (ObjectId target : c.all_objects())
    for (const auto& other : series_cocones(c, s, target)) {
      auto mediating = find_series_mediating_arrows(c, apex, legs, target, other);
      if (mediating.empty()) {
        out.weak = out.unique = false;
        out.witness = "cocone to " + c.object_label(target) + " has no mediating arrow";
        return out;
      }
      if (mediating.size() > 1 && out.unique) {
        out.unique = false;
        out.witness = "cocone to " + c.object_label(target) + " has " + std::to_string(mediating.size()) + " mediating arrows";
      }
    }
  return out;
}

// Weak pushout of a forward sequence ψ_n: x -> x_n with legs λ_n: x_n -> apex
// for all n ≥ 0. A competing cone to d with common composite v picks each
// λ'_n from A(ψ_n) = {a | a ∘ ψ_n = v} independently per index. Indices with
// the same pair (ψ_n, λ_n) impose the same condition on θ, so a pair that
// occurs twice forces |A| = 1; the remaining choices are enumerated.
inline UniversalCheck check_weak_pushout(const FiniteCategory& c, const ArrowSequence& s, ObjectId apex,
                                         const ArrowSequence& legs, std::size_t max_choices = 1u << 20) {
  require_forward_sequence(c, s);
  UniversalCheck out;
  const std::size_t tail = detail::tail_start({{&s, 0}, {&legs, 0}});
  const std::size_t end = tail + detail::lcm_periods({&s, &legs});
  for (std::size_t n = 0; n < end; ++n)
    if (c.dom(legs.at(n)) != c.cod(s.at(n)) || c.cod(legs.at(n)) != apex) throw InputError("legs do not run to the apex");
  for (std::size_t n = 1; n < end; ++n)
    if (c.then(s.at(n), legs.at(n)) != c.then(s.at(0), legs.at(0))) {
      out.witness = "cone does not commute at index " + std::to_string(n);
      return out;
    }
  out.is_cocone = true;

  // Distinct (ψ, λ) pairs and whether each occurs more than once.
  std::map<std::pair<ArrowId, ArrowId>, bool> types;
  for (std::size_t n = 0; n < end; ++n) {
    auto key = std::make_pair(s.at(n), legs.at(n));
    auto [it, fresh] = types.emplace(key, n >= tail);
    if (!fresh) it->second = true;
  }
  const ObjectId base = c.dom(s.at(0));
  out.weak = out.unique = true;
  for (ObjectId target : c.all_objects()) {
    for (ArrowId v : c.hom(base, target)) {
      std::vector<std::pair<ArrowId, std::vector<ArrowId>>> options;
      bool cones_exist = true;
      for (const auto& [key, repeated] : types) {
        std::vector<ArrowId> a;
        for (ArrowId cand : c.hom(c.cod(key.first), target))
          if (c.then(key.first, cand) == v) a.push_back(cand);
        if (a.empty()) {
          cones_exist = false;
          break;
        }
        if (repeated && a.size() > 1) {
          out.weak = out.unique = false;
          out.witness = "cones to " + c.object_label(target) + " may choose differently at repeated indices";
          return out;
        }
        options.emplace_back(key.second, std::move(a));
      }
      if (!cones_exist) continue;
      std::size_t total = 1;
      for (const auto& o : options) {
        total *= o.second.size();
        if (total > max_choices) throw SizeGuardError("too many competing cones in the weak pushout check");
      }
      std::vector<std::size_t> pick(options.size(), 0);
      for (std::size_t count = 0; count < total; ++count) {
        std::size_t mediating = 0;
        for (ArrowId theta : c.hom(apex, target)) {
          bool ok = true;
          for (std::size_t i = 0; i < options.size() && ok; ++i)
            ok = c.then(options[i].first, theta) == options[i].second[pick[i]];
          if (ok) ++mediating;
        }
        if (mediating == 0) {
          out.weak = out.unique = false;
          out.witness = "a cone to " + c.object_label(target) + " has no mediating arrow";
          return out;
        }
        if (mediating > 1 && out.unique) {
          out.unique = false;
          out.witness = "a cone to " + c.object_label(target) + " has several mediating arrows";
        }
        for (std::size_t i = 0; i < pick.size(); ++i) {
          if (++pick[i] < options[i].second.size()) break;
          pick[i] = 0;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Backward duals: the forward checks in the opposite space.

inline LimitCertificate backward_check_limiting_cone(const Metric1Space& x, const ArrowSequence& s, const EssentialCone& cone) {
  return check_forward_limiting_cone(opposite_space(x), s, cone);
}

inline ArrowSequence backward_partial_compositions(const FiniteCategory& c, const ArrowSequence& s) {
  return partial_compositions(opposite(c), s);
}

inline LimitCertificate backward_check_cauchy(const Metric1Space& x, const ArrowSequence& s) {
  return check_cauchy(opposite_space(x), s);
}

inline LimitCertificate backward_check_series_limit(const Metric1Space& x, const ArrowSequence& s, ObjectId apex,
                                                    const ArrowSequence& legs) {
  return check_series_limit(opposite_space(x), s, apex, legs);
}

inline TruncatedSeries backward_truncate_series(const ArrowSequence& s, const ArrowSequence& legs, std::size_t k) {
  return truncate_series(s, legs, k);
}

inline std::vector<ArrowId> backward_find_mediating_arrows(const FiniteCategory& c, const EssentialCone& a,
                                                           const EssentialCone& b) {
  return find_mediating_arrows(opposite(c), a, b);
}

inline SeriesLimit backward_find_series_limit(const Metric1Space& x, const ArrowSequence& s) {
  return find_series_limit(opposite_space(x), s);
}

}  // namespace metric1
