// metric1: command-line front end over the header-only library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "metric1/json_io.hpp"
#include "metric1/metric1.hpp"

using namespace metric1;
using json_io::Json;

namespace {

enum Exit { ok = 0, failed = 1, input = 2, guard = 3 };

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t guard_functors = EnumerationGuard{}.max_nodes;
  std::size_t guard_daggers = EnumerationGuard{}.max_nodes;
  bool verbose = false;
};

struct Result {
  int code = ok;
  Json json;
  std::string text;
};

Json load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return json_io::parse(buf.str(), path);
}

std::string str(const ExtWeight& w) { return w.to_string(); }
std::string str(const Rational& r) { return to_string(r); }

std::string report_text(const ValidationReport& r) {
  if (r.ok()) return "ok\n";
  std::string out = "invalid\n";
  for (const auto& v : r.violations()) out += "  " + v.rule + ": " + v.detail + "\n";
  return out;
}

// Loads a weighted category; an invalid space ends the command with exit 1.
std::optional<Metric1Space> load_space(const std::string& path, Result& res) {
  auto x = json_io::space_from_json(load(path));
  if (auto r = validate_metric1(x); !r.ok()) {
    res.code = failed;
    res.json = {{"input", path}, {"validation", json_io::report_to_json(r)}};
    res.text = path + ": not a metric 1-space: " + report_text(r);
    return std::nullopt;
  }
  return x;
}

Json arrow_list(const std::vector<ArrowId>& arrows) {
  Json j = Json::array();
  for (ArrowId a : arrows) j.push_back(a.value);
  return j;
}

std::string arrow_list_text(const std::vector<ArrowId>& arrows) {
  std::string s = "[";
  for (std::size_t i = 0; i < arrows.size(); ++i) s += (i ? ", " : "") + std::to_string(arrows[i].value);
  return s + "]";
}

Json certificate_json(const LimitCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["holds"] = c.holds();
  j["limiting_arrow"] = c.limiting_arrow ? Json(c.limiting_arrow->value) : Json(nullptr);
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  j["reason"] = c.reason;
  return j;
}

std::string certificate_text(const LimitCertificate& c) {
  std::string s = "verdict: " + to_string(c.verdict) + "\n";
  if (c.limiting_arrow) s += "limiting arrow: " + std::to_string(c.limiting_arrow->value) + "\n";
  if (c.witness) s += "witness index: " + std::to_string(*c.witness) + "\n";
  if (!c.reason.empty()) s += "reason: " + c.reason + "\n";
  return s;
}

Direction direction_from(const Json& q) {
  auto it = q.find("direction");
  if (it == q.end()) return Direction::forward;
  if (*it == "forward") return Direction::forward;
  if (*it == "backward") return Direction::backward;
  throw InputError("direction must be \"forward\" or \"backward\"");
}

// ---------------------------------------------------------------------------

Result cmd_validate(const std::string& path, const std::string& scale) {
  Result res;
  Json j = load(path);
  ValidationReport r;
  std::size_t objects = 0, arrows = 0;
  if (scale == "multiplicative") {
    auto x = json_io::space_from_json<MultiplicativeScale>(j);
    r = validate_metric1(x);
    objects = x.object_count();
    arrows = x.arrow_count();
  } else {
    auto x = json_io::space_from_json(j);
    r = validate_metric1(x);
    objects = x.object_count();
    arrows = x.arrow_count();
  }
  res.code = r.ok() ? ok : failed;
  res.json = json_io::report_to_json(r);
  res.json["objects"] = objects;
  res.json["arrows"] = arrows;
  res.text = std::to_string(objects) + " objects, " + std::to_string(arrows) + " arrows: " + report_text(r);
  return res;
}

Result cmd_lawvere(const std::string& path) {
  Result res;
  auto x = json_io::space_from_json(load(path));
  if (auto r = validate_category(x.category()); !r.ok()) {
    res.code = failed;
    res.json = {{"validation", json_io::report_to_json(r)}};
    res.text = "not a category: " + report_text(r);
    return res;
  }
  auto l = lawvere(x);
  auto restricted = validate_lawvere(l);
  res.json["points"] = l.points;
  res.json["d"] = Json::array();
  std::ostringstream t;
  for (std::size_t i = 0; i < l.size(); ++i) {
    Json row = Json::array();
    t << l.points[i] << ":";
    for (std::size_t k = 0; k < l.size(); ++k) {
      row.push_back(json_io::weight_to_json(l(i, k)));
      t << " " << str(l(i, k));
    }
    t << "\n";
    res.json["d"].push_back(row);
  }
  res.json["symmetric"] = l.is_symmetric();
  res.json["restricted_triangle"] = restricted.ok();
  t << "symmetric: " << (l.is_symmetric() ? "yes" : "no") << "\n";
  t << "restricted triangle: " << (restricted.ok() ? "yes" : "no") << "\n";
  res.text = t.str();
  return res;
}

Result cmd_metrize(const std::string& path) {
  Result res;
  Json j = load(path);
  FiniteCategory c = json_io::category_from_json(json_io::detail::field(j, "category", "metrize input"));
  require_valid(c);
  auto g = json_io::generators_from_json(c, json_io::detail::field(j, "generators", "metrize input"));
  auto x = metrize(c, g);
  auto r = validate_metric1(x);
  res.json = json_io::space_to_json(x);
  std::ostringstream t;
  for (ArrowId a : c.all_arrows()) t << "w(" << c.arrow_name(a) << ") = " << str(x[a]) << "\n";
  t << "valid: " << report_text(r);
  res.text = t.str();
  return res;
}

Result cmd_map_space(const std::string& xp, const std::string& yp, const Options& o) {
  Result res;
  auto x = load_space(xp, res);
  if (!x) return res;
  auto y = load_space(yp, res);
  if (!y) return res;
  auto m = mapping_space(*x, *y, EnumerationGuard{o.guard_functors});
  auto r = validate_metric1(m.space);
  if (!r.ok()) throw InternalError("mapping space failed validation:\n" + r.to_string());
  res.json = json_io::space_to_json(m.space);
  std::ostringstream t;
  t << m.functors.size() << " continuous functors, " << m.transformations.size() << " transformations\n";
  for (std::size_t i = 0; i < m.functors.size(); ++i)
    t << "F" << i << ": objects " << arrow_list_text([&] {
      std::vector<ArrowId> v;
      for (ObjectId ob : m.functors[i].object_map) v.push_back(ArrowId(ob.value));
      return v;
    }()) << ", arrows " << arrow_list_text(m.functors[i].arrow_map) << "\n";
  for (ArrowId a : m.space.category().all_arrows())
    t << m.space.category().arrow_name(a) << ": F" << m.space.category().dom(a).value << " -> F"
      << m.space.category().cod(a).value << ", w = " << str(m.space[a]) << "\n";
  res.text = t.str();
  return res;
}

Result cmd_dagger(const std::string& path, const Options& o) {
  Result res;
  auto x = load_space(path, res);
  if (!x) return res;
  const auto& c = x->category();
  auto h = symmetry_hierarchy(*x, EnumerationGuard{o.guard_daggers});
  res.json["class"] = to_string(h.symmetry);
  res.json["dagger"] = h.dagger ? arrow_list(h.dagger->map) : Json(nullptr);
  std::ostringstream t;
  t << "class: " << to_string(h.symmetry) << "\n";
  if (h.dagger) t << "dagger: " << arrow_list_text(h.dagger->map) << "\n";
  if (o.verbose) {
    res.json["daggers"] = Json::array();
    auto all = enumerate_daggers(c, EnumerationGuard{o.guard_daggers});
    t << all.size() << " daggers\n";
    for (const auto& d : all) {
      auto cls = classify_dagger(*x, d);
      res.json["daggers"].push_back({{"map", arrow_list(d.map)}, {"class", to_string(cls.symmetry)}, {"contracting", cls.contracting}});
      t << "  " << arrow_list_text(d.map) << " " << to_string(cls.symmetry) << (cls.contracting ? " contracting" : "") << "\n";
    }
  }
  res.text = t.str();
  return res;
}

Result cmd_continuity(const std::string& xp, const std::string& yp, const std::string& fp) {
  Result res;
  auto x = load_space(xp, res);
  if (!x) return res;
  auto y = load_space(yp, res);
  if (!y) return res;
  Functor f = json_io::functor_from_json(load(fp));
  if (auto r = validate_functor(x->category(), y->category(), f); !r.ok()) {
    res.code = failed;
    res.json = {{"functor", json_io::report_to_json(r)}};
    res.text = "not a functor: " + report_text(r);
    return res;
  }
  const auto& c = x->category();
  auto uniform = uniformly_continuous(*x, *y, f);
  std::ostringstream t;
  res.json["uniform"] = uniform.holds;
  res.json["forward"] = forward_continuous(*x, *y, f);
  res.json["backward"] = backward_continuous(*x, *y, f);
  t << "uniform: " << (uniform.holds ? "yes" : "no") << "\n";
  if (uniform.witness) {
    res.json["witness"] = uniform.witness->offending.value;
    t << "witness: " << c.arrow_name(uniform.witness->offending) << " has weight 0, image weight "
      << str((*y)[f(uniform.witness->offending)]) << "\n";
  }
  res.json["objects"] = Json::array();
  for (ObjectId ob : c.all_objects()) {
    bool fw = object_continuity(*x, *y, f, ob, Direction::forward).holds;
    bool bw = object_continuity(*x, *y, f, ob, Direction::backward).holds;
    res.json["objects"].push_back({{"object", ob.value}, {"forward", fw}, {"backward", bw}});
    t << "object " << c.object_label(ob) << ": forward " << (fw ? "yes" : "no") << ", backward " << (bw ? "yes" : "no") << "\n";
  }
  res.json["arrows"] = Json::array();
  for (ArrowId a : c.all_arrows()) {
    bool fw = forward_continuous_at_arrow(*x, *y, f, a).holds;
    bool bw = backward_continuous_at_arrow(*x, *y, f, a).holds;
    res.json["arrows"].push_back({{"arrow", a.value}, {"forward", fw}, {"backward", bw}});
    t << "arrow " << c.arrow_name(a) << ": forward " << (fw ? "yes" : "no") << ", backward " << (bw ? "yes" : "no") << "\n";
  }
  res.code = uniform.holds ? ok : failed;
  res.text = t.str();
  return res;
}

Result cmd_fixed_point(const std::string& sp, const std::string& fp, std::size_t index, std::size_t start,
                       const std::string& direction, const Options& o) {
  Result res;
  auto x = load_space(sp, res);
  if (!x) return res;
  Functor f = json_io::functor_from_json(load(fp));
  const auto& c = x->category();
  if (auto r = validate_functor(c, c, f); !r.ok()) {
    res.code = failed;
    res.json = {{"functor", json_io::report_to_json(r)}};
    res.text = "not an endofunctor: " + report_text(r);
    return res;
  }
  Direction d = direction == "backward" ? Direction::backward : Direction::forward;
  auto contractions = find_natural_contractions(c, f, d, EnumerationGuard{o.guard_functors});
  if (index >= contractions.size())
    throw InputError("contraction index " + std::to_string(index) + " out of range (" + std::to_string(contractions.size()) +
                     " natural contractions)");
  if (start >= c.object_count()) throw InputError("start object " + std::to_string(start) + " does not exist");
  auto factor = contraction_factor(*x, f);
  auto r = banach_iterate(*x, f, contractions[index], ObjectId(start));
  res.json["contractions"] = contractions.size();
  res.json["factor"] = factor.factor ? json_io::rational_to_json(*factor.factor) : Json(nullptr);
  res.json["fixed_object"] = r.fixed_object.value;
  res.json["arrow"] = r.arrow.value;
  res.json["weight"] = json_io::weight_to_json((*x)[r.arrow]);
  res.json["series"] = json_io::sequence_to_json(r.series);
  res.json["legs"] = json_io::sequence_to_json(r.legs);
  std::ostringstream t;
  t << contractions.size() << " natural contractions, using #" << index << "\n";
  if (factor.factor) t << "contraction factor: " << str(*factor.factor) << "\n";
  t << "fixed object: " << c.object_label(r.fixed_object) << "\n";
  t << "alpha-fixed arrow: " << c.arrow_name(r.arrow) << " (" << c.object_label(c.dom(r.arrow)) << " -> "
    << c.object_label(c.cod(r.arrow)) << "), w = " << str((*x)[r.arrow]) << "\n";
  res.text = t.str();
  return res;
}

Result cmd_limits(const std::string& sp, const std::string& qp) {
  Result res;
  auto x = load_space(sp, res);
  if (!x) return res;
  Json q = load(qp);
  const Direction d = direction_from(q);
  const bool forward = d == Direction::forward;
  const std::string kind = q.value("kind", std::string("sequence"));
  LimitCertificate cert;
  std::ostringstream t;
  if (kind == "sequence") {
    auto s = json_io::sequence_from_json(json_io::detail::field(q, "sequence", "limits query"));
    const Json& cj = json_io::detail::field(q, "cone", "limits query");
    EssentialCone cone;
    cone.start = cj.contains("start") ? json_io::detail::index(cj["start"], "cone start") : 0;
    cone.apex = ObjectId(json_io::detail::index(json_io::detail::field(cj, "apex", "cone"), "cone apex"));
    cone.legs = json_io::sequence_from_json(json_io::detail::field(cj, "legs", "cone"));
    cert = forward ? check_forward_limiting_cone(*x, s, cone) : backward_check_limiting_cone(*x, s, cone);
  } else if (kind == "series") {
    auto s = json_io::sequence_from_json(json_io::detail::field(q, "series", "limits query"));
    if (q.contains("apex") && q.contains("legs")) {
      ObjectId apex(json_io::detail::index(q["apex"], "apex"));
      auto legs = json_io::sequence_from_json(q["legs"]);
      cert = forward ? check_series_limit(*x, s, apex, legs) : backward_check_series_limit(*x, s, apex, legs);
    } else {
      auto found = forward ? find_series_limit(*x, s) : backward_find_series_limit(*x, s);
      cert = found.certificate;
      if (found.apex) {
        res.json["apex"] = found.apex->value;
        res.json["legs"] = json_io::sequence_to_json(*found.legs);
        t << "apex: " << x->category().object_label(*found.apex) << "\n";
      }
    }
    auto cauchy = forward ? check_cauchy(*x, s) : backward_check_cauchy(*x, s);
    res.json["cauchy"] = cauchy.holds();
    t << "cauchy: " << (cauchy.holds() ? "yes" : "no") << "\n";
  } else {
    throw InputError("kind must be \"sequence\" or \"series\"");
  }
  res.json["certificate"] = certificate_json(cert);
  if (cert.limiting_arrow) res.json["limit_weight"] = json_io::weight_to_json((*x)[*cert.limiting_arrow]);
  t << certificate_text(cert);
  res.code = cert.holds() ? ok : failed;
  res.text = t.str();
  return res;
}

Result cmd_gh(const std::string& xp, const std::string& yp, const Options& o) {
  Result res;
  auto x = json_io::metric_space_from_json(load(xp));
  auto y = json_io::metric_space_from_json(load(yp));
  Rational glued = gh_distance_gluing(x, y);
  Rational corr = gh_distance_correspondence(x, y);
  if (glued != corr) throw InternalError("Gromov-Hausdorff routes disagree");
  res.json["gh"] = json_io::rational_to_json(glued);
  res.json["gluing_route"] = json_io::rational_to_json(glued);
  res.json["correspondence_route"] = json_io::rational_to_json(corr);
  std::ostringstream t;
  t << "gh: " << str(glued) << "\n";
  t << "routes agree: gluing " << str(glued) << ", correspondences " << str(corr) << "\n";
  if (o.verbose) {
    auto g = gh_optimal_gluing(x, y);
    res.json["gluing"] = Json::array();
    t << "optimal gluing r(x, y):\n";
    for (std::size_t i = 0; i < g.r.size(); ++i) {
      Json row = Json::array();
      t << "  " << x.points[i] << ":";
      for (const auto& v : g.r[i]) {
        row.push_back(json_io::rational_to_json(v));
        t << " " << str(v);
      }
      t << "\n";
      res.json["gluing"].push_back(row);
    }
    res.json["gluing_hausdorff"] = json_io::rational_to_json(gluing_hausdorff(x, y, g));
  }
  res.text = t.str();
  return res;
}

Result cmd_lipschitz(const std::string& xp, const std::string& yp) {
  Result res;
  auto x = json_io::metric_space_from_json(load(xp));
  auto y = json_io::metric_space_from_json(load(yp));
  for (const auto* s : {&x, &y})
    if (auto r = validate_metric_space(*s); !r.ok()) throw ValidationError(r);
  auto d = lipschitz_distance(x, y);
  res.json["distance"] = d ? json_io::rational_to_json(*d) : Json("inf");
  res.text = "lipschitz distance: " + (d ? str(*d) : std::string("inf")) + "\n";
  return res;
}

Result cmd_bimetric(std::size_t n, std::optional<std::string> a1s, std::optional<std::string> a2s, std::optional<std::string> hs,
                    const Options& o) {
  Result res;
  std::mt19937_64 rng(o.seed);
  auto draw = [&](const std::optional<std::string>& given) {
    if (given) return ExtWeight::parse(*given);
    return ExtWeight(Rational(static_cast<long>(rng() % 9), 2));
  };
  ExtWeight a1 = draw(a1s), a2 = draw(a2s), h = draw(hs);
  if (n == 0) throw InputError("bimetric demo needs at least one point");
  if (a1.is_infinite() || a2.is_infinite() || h.is_infinite()) throw InputError("bimetric demo takes finite parameters");
  Rational gap = abs(a1.value() - a2.value());
  bool predicted = gap <= h.value() && h.value() <= a1.value() + a2.value();
  std::vector<std::vector<ExtWeight>> m1(n, std::vector<ExtWeight>(n, a1)), m2(n, std::vector<ExtWeight>(n, a2));
  auto cand = bimetric_candidate(n, m1, m2, h);
  auto r = validate_metric1(cand);
  res.json["n"] = n;
  res.json["a1"] = json_io::weight_to_json(a1);
  res.json["a2"] = json_io::weight_to_json(a2);
  res.json["h"] = json_io::weight_to_json(h);
  res.json["predicted"] = predicted;
  res.json["accepted"] = r.ok();
  res.json["validation"] = json_io::report_to_json(r);
  std::ostringstream t;
  t << "bimetric n=" << n << " a1=" << str(a1) << " a2=" << str(a2) << " h=" << str(h) << "\n";
  t << "|a1 - a2| <= h <= a1 + a2: " << (predicted ? "yes" : "no") << "\n";
  t << "accepted: " << report_text(r);
  if (r.ok()) {
    auto sym = symmetry_hierarchy(cand);
    res.json["class"] = to_string(sym.symmetry);
    t << "class: " << to_string(sym.symmetry) << "\n";
  }
  res.code = r.ok() ? ok : failed;
  res.text = t.str();
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric1: finite metric 1-spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "Seed for randomized choices");
  app.add_option("--guard-functors", o.guard_functors, "Search bound for functor enumeration")->check(CLI::PositiveNumber);
  app.add_option("--guard-daggers", o.guard_daggers, "Search bound for dagger enumeration")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", o.verbose, "Extra detail");

  std::string a, b, c, scale = "additive", direction = "forward";
  std::size_t index = 0, start = 0, n = 2;
  std::optional<std::string> a1, a2, h;
  std::function<Result()> run;

  auto* validate = app.add_subcommand("validate", "Check category and metric axioms");
  validate->add_option("space", a)->required()->check(CLI::ExistingFile);
  validate->add_option("--scale", scale)->check(CLI::IsMember({"additive", "multiplicative"}));
  validate->callback([&] { run = [&] { return cmd_validate(a, scale); }; });

  auto* law = app.add_subcommand("lawvere", "Lawvere distances of a weighted category");
  law->add_option("space", a)->required()->check(CLI::ExistingFile);
  law->callback([&] { run = [&] { return cmd_lawvere(a); }; });

  auto* met = app.add_subcommand("metrize", "Weights from a generating chain of controlled sets");
  met->add_option("input", a)->required()->check(CLI::ExistingFile);
  met->callback([&] { run = [&] { return cmd_metrize(a); }; });

  auto* map = app.add_subcommand("map-space", "Mapping space [X, Y]");
  map->add_option("x", a)->required()->check(CLI::ExistingFile);
  map->add_option("y", b)->required()->check(CLI::ExistingFile);
  map->callback([&] { run = [&] { return cmd_map_space(a, b, o); }; });

  auto* dag = app.add_subcommand("dagger", "Symmetry class via daggers");
  dag->add_option("space", a)->required()->check(CLI::ExistingFile);
  dag->callback([&] { run = [&] { return cmd_dagger(a, o); }; });

  auto* cont = app.add_subcommand("continuity", "All continuity verdicts for a functor");
  cont->add_option("x", a)->required()->check(CLI::ExistingFile);
  cont->add_option("y", b)->required()->check(CLI::ExistingFile);
  cont->add_option("functor", c)->required()->check(CLI::ExistingFile);
  cont->callback([&] { run = [&] { return cmd_continuity(a, b, c); }; });

  auto* fix = app.add_subcommand("fixed-point", "Banach iteration to an alpha-fixed arrow");
  fix->add_option("space", a)->required()->check(CLI::ExistingFile);
  fix->add_option("functor", b)->required()->check(CLI::ExistingFile);
  fix->add_option("--contraction", index, "Index among the natural contractions");
  fix->add_option("--start", start, "Start object");
  fix->add_option("--direction", direction)->check(CLI::IsMember({"forward", "backward"}));
  fix->callback([&] { run = [&] { return cmd_fixed_point(a, b, index, start, direction, o); }; });

  auto* lim = app.add_subcommand("limits", "Certificate for a sequence cone or a series");
  lim->add_option("space", a)->required()->check(CLI::ExistingFile);
  lim->add_option("query", b)->required()->check(CLI::ExistingFile);
  lim->callback([&] { run = [&] { return cmd_limits(a, b); }; });

  auto* gh = app.add_subcommand("gh", "Gromov-Hausdorff distance of two metric spaces");
  gh->add_option("x", a)->required()->check(CLI::ExistingFile);
  gh->add_option("y", b)->required()->check(CLI::ExistingFile);
  gh->callback([&] { run = [&] { return cmd_gh(a, b, o); }; });

  auto* lip = app.add_subcommand("lipschitz", "Lipschitz distance of two metric spaces");
  lip->add_option("x", a)->required()->check(CLI::ExistingFile);
  lip->add_option("y", b)->required()->check(CLI::ExistingFile);
  lip->callback([&] { run = [&] { return cmd_lipschitz(a, b); }; });

  auto* demo = app.add_subcommand("demo", "Built-in constructions");
  demo->require_subcommand(1);
  auto* bim = demo->add_subcommand("bimetric", "Two-sign space with weights a1, a2 and h");
  bim->set_help_flag("--help", "Print this help message and exit");
  bim->add_option("--n", n, "Number of points");
  bim->add_option("--a1", a1);
  bim->add_option("--a2", a2);
  bim->add_option("--h", h);
  bim->callback([&] { run = [&] { return cmd_bimetric(n, a1, a2, h, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input;
  }

  try {
    Result res = run();
    if (o.format == "json") {
      std::cout << res.json.dump(2) << "\n";
    } else {
      std::cout << res.text;
    }
    return res.code;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return failed;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return guard;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
