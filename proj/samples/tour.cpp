// A short walk through the library on hand-sized spaces.
#include <iostream>

#include "metric1/metric1.hpp"

using namespace metric1;

namespace {

ExtWeight w(long n, long d = 1) { return ExtWeight(make_rational(n, d)); }

}  // namespace

int main() {
  // Two points at distance 3/2, as a weighted indiscrete category.
  auto x = indiscrete_space({{w(0), w(3, 2)}, {w(3, 2), w(0)}});
  std::cout << "indiscrete pair valid: " << validate_metric1(x).ok() << "\n";

  // Asymmetric weights satisfy the restricted triangle but not the full one.
  auto skew = indiscrete_space({{w(0), w(1)}, {w(3), w(0)}});
  std::cout << "skewed pair:\n" << validate_metric1(skew).to_string();

  // Metrizing the coarse structure generated by one arrow.
  auto c = indiscrete(2);
  auto m = metrize(c, normalize_generators(c, {ArrowSet(4, {indiscrete_arrow(2, 0, 1)})}, 0));
  for (ArrowId a : c.all_arrows()) std::cout << "w(" << c.arrow_name(a) << ") = " << m[a].to_string() << "\n";

  // [1, X] recovers X.
  auto ms = mapping_space(Metric1Space(terminal_category(), {w(0)}), x);
  std::cout << "[1, X] has " << ms.space.object_count() << " objects and " << ms.space.arrow_count() << " arrows\n";

  // Continuity: g of weight 0 sent to g of weight 1 is not continuous.
  Metric1Space flat(cyclic_group(2), {w(0), w(0)}), bumped(cyclic_group(2), {w(0), w(1)});
  auto id = identity_functor(cyclic_group(2));
  std::cout << "flat -> bumped continuous: " << uniformly_continuous(flat, bumped, id).holds << "\n";
  std::cout << "bumped -> flat continuous: " << uniformly_continuous(bumped, flat, id).holds << "\n";

  // Banach iteration on three points with d(1/2, 1) = 1.
  auto banach = from_metric_space(make_metric_space({{Rational(0), Rational(1, 2), Rational(1)},
                                                     {Rational(1, 2), Rational(0), Rational(1)},
                                                     {Rational(1), Rational(1), Rational(0)}},
                                                    {"0", "1/2", "1"}));
  Functor f;
  const std::vector<std::size_t> map{0, 0, 1};
  for (std::size_t i = 0; i < 3; ++i) f.object_map.push_back(ObjectId(map[i]));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) f.arrow_map.push_back(indiscrete_arrow(3, map[i], map[j]));
  auto alpha = find_natural_contractions(banach.category(), f, Direction::forward).at(0);
  auto r = banach_iterate(banach, f, alpha, ObjectId(2));
  std::cout << "contraction factor " << to_string(*contraction_factor(banach, f).factor) << ", fixed object "
            << banach.category().object_label(r.fixed_object) << ", w(mu_0) = " << banach[r.arrow].to_string() << "\n";

  // Symmetry classes.
  std::cout << "Z/2 class: " << to_string(symmetry_hierarchy(bumped).symmetry) << "\n";
  std::cout << "free arrow class: " << to_string(symmetry_hierarchy(Metric1Space(free_arrow(), {w(0), w(0), w(2)})).symmetry) << "\n";

  // Gromov-Hausdorff and Lipschitz distances.
  auto point = make_metric_space({{Rational(0)}});
  auto pair1 = make_metric_space({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  auto pair3 = make_metric_space({{Rational(0), Rational(3)}, {Rational(3), Rational(0)}});
  std::cout << "gh(point, pair 3) = " << to_string(gh_distance(point, pair3)) << "\n";
  std::cout << "lipschitz(pair 1, pair 3) = " << to_string(*lipschitz_distance(pair1, pair3)) << "\n";

  // Bi-metric space with |a1 - a2| <= h <= a1 + a2.
  auto bm = bimetric_space(2, w(1), w(2), w(1));
  std::cout << "bimetric class: " << to_string(symmetry_hierarchy(bm).symmetry) << "\n";
}
