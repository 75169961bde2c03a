#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "metric1/fincat.hpp"
#include "metric1/weights.hpp"

namespace metric1 {

// ---------------------------------------------------------------------------
// Relations on {0, ..., n-1}

class RelationSet {
 public:
  RelationSet() = default;
  explicit RelationSet(std::size_t n) : n_(n), bits_(n * n, false) {}
  RelationSet(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) : RelationSet(n) {
    for (auto [a, b] : pairs) insert(a, b);
  }

  static RelationSet diagonal(std::size_t n) {
    RelationSet r(n);
    for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
    return r;
  }

  static RelationSet full(std::size_t n) {
    RelationSet r(n);
    std::fill(r.bits_.begin(), r.bits_.end(), true);
    return r;
  }

  std::size_t ground_size() const { return n_; }
  bool contains(std::size_t a, std::size_t b) const { return bits_[a * n_ + b]; }

  void insert(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_) throw InputError("pair outside the ground set");
    bits_[a * n_ + b] = true;
  }

  std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (contains(a, b)) out.emplace_back(a, b);
    return out;
  }

  bool subset_of(const RelationSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  RelationSet operator|(const RelationSet& other) const {
    check_same(other);
    RelationSet r(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] || other.bits_[i];
    return r;
  }

  void check_same(const RelationSet& other) const {
    if (n_ != other.n_) throw InputError("relations on different ground sets");
  }

  friend bool operator==(const RelationSet&, const RelationSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

// {(x, z) | ∃y (x, y) ∈ E1, (y, z) ∈ E2}
inline RelationSet rel_compose(const RelationSet& e1, const RelationSet& e2) {
  e1.check_same(e2);
  const std::size_t n = e1.ground_size();
  RelationSet r(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (e1.contains(x, y))
        for (std::size_t z = 0; z < n; ++z)
          if (e2.contains(y, z)) r.insert(x, z);
  return r;
}

inline RelationSet rel_inverse(const RelationSet& e) {
  RelationSet r(e.ground_size());
  for (auto [a, b] : e.pairs()) r.insert(b, a);
  return r;
}

// {(y, z) | ∃x (x, y), (x, z) ∈ E} ∪ {(x, y) | ∃z (x, z), (y, z) ∈ E}
inline RelationSet rel_star(const RelationSet& e) {
  const std::size_t n = e.ground_size();
  RelationSet r(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (e.contains(x, y) && e.contains(x, z)) r.insert(y, z);
        if (e.contains(x, z) && e.contains(y, z)) r.insert(x, y);
      }
  return r;
}

// ---------------------------------------------------------------------------
// Arrow sets

class ArrowSet {
 public:
  ArrowSet() = default;
  explicit ArrowSet(std::size_t arrow_count) : bits_(arrow_count, false) {}
  ArrowSet(std::size_t arrow_count, const std::vector<ArrowId>& arrows) : ArrowSet(arrow_count) {
    for (ArrowId a : arrows) insert(a);
  }

  static ArrowSet identities(const FiniteCategory& c) {
    ArrowSet s(c.arrow_count());
    for (ObjectId x : c.all_objects()) s.insert(c.identity(x));
    return s;
  }

  static ArrowSet all(const FiniteCategory& c) {
    ArrowSet s(c.arrow_count());
    std::fill(s.bits_.begin(), s.bits_.end(), true);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  bool contains(ArrowId a) const { return bits_[a.index()]; }

  void insert(ArrowId a) {
    if (a.index() >= bits_.size()) throw InputError("arrow " + to_string(a) + " is not in the category");
    bits_[a.index()] = true;
  }

  std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }
  bool empty() const { return size() == 0; }

  std::vector<ArrowId> arrows() const {
    std::vector<ArrowId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.emplace_back(i);
    return out;
  }

  bool subset_of(const ArrowSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  ArrowSet operator|(const ArrowSet& other) const {
    ArrowSet r = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (other.bits_[i]) r.bits_[i] = true;
    return r;
  }

  friend bool operator==(const ArrowSet&, const ArrowSet&) = default;

 private:
  std::vector<bool> bits_;
};

// {ψ1 ∘ ψ2 | ψ1 ∈ E1, ψ2 ∈ E2}, over composable pairs only: ψ2 is applied first.
inline ArrowSet arrow_compose_sets(const FiniteCategory& c, const ArrowSet& e1, const ArrowSet& e2) {
  ArrowSet r(c.arrow_count());
  for (ArrowId second : e2.arrows())
    for (ArrowId first : e1.arrows())
      if (auto comp = c.compose(second, first)) r.insert(*comp);
  return r;
}

// {ψ | ∃φ ∈ E, ψ∘φ ∈ E} ∪ {ψ | ∃φ ∈ E, φ∘ψ ∈ E}
inline ArrowSet arrow_star(const FiniteCategory& c, const ArrowSet& e) {
  ArrowSet r(c.arrow_count());
  for (ArrowId psi : c.all_arrows()) {
    for (ArrowId phi : e.arrows()) {
      auto after = c.compose(phi, psi);
      auto before = c.compose(psi, phi);
      if ((after && e.contains(*after)) || (before && e.contains(*before))) {
        r.insert(psi);
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Generators

// E_0 ⊆ E_1 ⊆ ...; sets[n] for n < sets.size(), then constant.
struct CoarseGenerators {
  std::vector<ArrowSet> sets;

  const ArrowSet& at(std::size_t n) const { return sets[std::min(n, sets.size() - 1)]; }
  std::size_t constant_from() const { return sets.empty() ? 0 : sets.size() - 1; }
};

// Replaces an arbitrary generating list by its running unions, which
// generates the same structure. `constant_from` repeats the last set.
inline CoarseGenerators normalize_generators(const FiniteCategory& c, const std::vector<ArrowSet>& list,
                                             std::size_t constant_from) {
  if (list.empty()) return CoarseGenerators{{ArrowSet(c.arrow_count())}};
  if (constant_from >= list.size()) throw InputError("constantFrom is past the end of the generator list");
  for (const auto& s : list)
    if (s.universe() != c.arrow_count()) throw InputError("generator set built for a different category");
  CoarseGenerators g;
  ArrowSet running(c.arrow_count());
  for (std::size_t n = 0; n <= constant_from; ++n) {
    running = running | list[n];
    g.sets.push_back(running);
  }
  for (std::size_t n = constant_from + 1; n < list.size(); ++n)
    if (!(list[n] == list[constant_from])) throw InputError("generator list is not constant from the declared index");
  return g;
}

inline bool is_monotone(const CoarseGenerators& g) {
  for (std::size_t n = 1; n < g.sets.size(); ++n)
    if (!g.sets[n - 1].subset_of(g.sets[n])) return false;
  return true;
}

// E_n = {ψ | w(ψ) ≤ n}, listed until it contains every finite-weight arrow.
inline CoarseGenerators bounded_generators(const Metric1Space& x) {
  const auto& c = x.category();
  Rational top(0);
  for (const auto& w : x.weights())
    if (w.is_finite() && w.value() > top) top = w.value();
  mpz_class ceil_top;
  mpz_cdiv_q(ceil_top.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
  const unsigned long last = ceil_top.get_ui();
  CoarseGenerators g;
  for (unsigned long n = 0; n <= last; ++n) {
    ArrowSet s(c.arrow_count());
    for (ArrowId a : c.all_arrows())
      if (x[a] <= ExtWeight(static_cast<long>(n))) s.insert(a);
    g.sets.push_back(std::move(s));
  }
  return g;
}

struct MetrizeResult {
  Metric1Space space;
  std::vector<ArrowSet> chain;  // F_0, F_1, ... up to the first repeated stage
};

// F_0 = Δ, F_{n+1} = F_n★ ∪ F_n∘F_n ∪ E_n ∪ E_n★, w(ψ) = least n with ψ ∈ F_n.
// The result is not validated here; see validate_metric1.
inline MetrizeResult metrize_with_chain(const FiniteCategory& c, const CoarseGenerators& g) {
  if (!is_monotone(g)) throw InputError("coarse generators are not monotone");
  for (const auto& s : g.sets)
    if (s.universe() != c.arrow_count()) throw InputError("generator set built for a different category");
  std::vector<ArrowSet> chain{ArrowSet::identities(c)};
  for (std::size_t n = 0;; ++n) {
    const ArrowSet& f = chain.back();
    const ArrowSet& e = g.at(n);
    ArrowSet next = arrow_star(c, f) | arrow_compose_sets(c, f, f) | e | arrow_star(c, e);
    bool stable = next == f;
    chain.push_back(std::move(next));
    if (stable && n >= g.constant_from()) break;
  }
  std::vector<ExtWeight> w(c.arrow_count(), ExtWeight::infinity());
  for (std::size_t n = chain.size(); n-- > 0;)
    for (ArrowId a : chain[n].arrows()) w[a.index()] = ExtWeight(static_cast<long>(n));
  chain.pop_back();
  return {Metric1Space(c, std::move(w)), std::move(chain)};
}

inline Metric1Space metrize(const FiniteCategory& c, const CoarseGenerators& g) {
  return metrize_with_chain(c, g).space;
}

// Every set of `a` lies inside some set of `b`.
inline bool dominated_by(const CoarseGenerators& a, const CoarseGenerators& b) {
  for (const auto& s : a.sets) {
    bool found = false;
    for (const auto& t : b.sets)
      if (s.subset_of(t)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// The bounded structure of X against that of metrize(bounded structure of X).
inline bool coarse_roundtrip_check(const Metric1Space& x) {
  CoarseGenerators original = bounded_generators(x);
  Metric1Space y = metrize(x.category(), original);
  CoarseGenerators again = bounded_generators(y);
  return dominated_by(original, again) && dominated_by(again, original);
}

}  // namespace metric1
