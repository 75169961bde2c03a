#pragma once

#include <string>
#include <vector>

#include "metric1/rational.hpp"
#include "metric1/report.hpp"

namespace metric1 {

// Classical finite metric space with an exact distance matrix.
struct FiniteMetricSpace {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> d;

  std::size_t size() const { return points.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return d[i][j]; }
};

inline ValidationReport validate_metric_space(const FiniteMetricSpace& m) {
  ValidationReport report;
  const std::size_t n = m.points.size();
  if (m.d.size() != n) {
    report.add_fatal("structure", "distance matrix has " + std::to_string(m.d.size()) + " rows for " +
                                      std::to_string(n) + " points");
    return report;
  }
  for (const auto& row : m.d)
    if (row.size() != n) {
      report.add_fatal("structure", "distance matrix is not square");
      return report;
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(m.d[i][i]) != 0) report.add("reflexivity", "d(" + m.points[i] + "," + m.points[i] + ") ≠ 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m.d[i][j] != m.d[j][i])
        report.add("symmetry", "d(" + m.points[i] + "," + m.points[j] + ") ≠ d(" + m.points[j] + "," + m.points[i] + ")");
      if (sgn(m.d[i][j]) <= 0)
        report.add("positivity", "d(" + m.points[i] + "," + m.points[j] + ") = " + to_string(m.d[i][j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (m.d[i][k] > m.d[i][j] + m.d[j][k])
          report.add("triangle", "d(" + m.points[i] + "," + m.points[k] + ") > d(" + m.points[i] + "," + m.points[j] +
                                     ") + d(" + m.points[j] + "," + m.points[k] + ")");
  return report;
}

inline FiniteMetricSpace make_metric_space(std::vector<std::vector<Rational>> d, std::vector<std::string> points = {}) {
  if (points.empty())
    for (std::size_t i = 0; i < d.size(); ++i) points.push_back("p" + std::to_string(i));
  FiniteMetricSpace m{std::move(points), std::move(d)};
  auto report = validate_metric_space(m);
  if (!report.ok()) throw ValidationError(report);
  return m;
}

// Points p_0 .. p_{n-1} on the real line at the given coordinates.
inline FiniteMetricSpace line_space(const std::vector<Rational>& coords) {
  std::vector<std::vector<Rational>> d(coords.size(), std::vector<Rational>(coords.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    labels.push_back(to_string(coords[i]));
    for (std::size_t j = 0; j < coords.size(); ++j) d[i][j] = abs(coords[i] - coords[j]);
  }
  return make_metric_space(std::move(d), std::move(labels));
}

// Multiplies every distance by `factor` > 0.
inline FiniteMetricSpace scaled(const FiniteMetricSpace& m, const Rational& factor) {
  FiniteMetricSpace out = m;
  for (auto& row : out.d)
    for (auto& v : row) v *= factor;
  return out;
}

}  // namespace metric1
