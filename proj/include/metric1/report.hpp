#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "metric1/error.hpp"

namespace metric1 {

struct Violation {
  std::string rule;    // short axiom name, e.g. "associativity"
  std::string detail;  // the offending instance
};

// Outcome of an exhaustive axiom check. A fatal report means the data was
// structurally malformed and the axiom checks were skipped.
class ValidationReport {
 public:
  bool ok() const { return !fatal_ && violations_.empty(); }
  bool fatal() const { return fatal_; }
  const std::vector<Violation>& violations() const { return violations_; }
  std::size_t size() const { return violations_.size(); }

  void add(std::string rule, std::string detail) {
    violations_.push_back({std::move(rule), std::move(detail)});
  }

  void add_fatal(std::string rule, std::string detail) {
    fatal_ = true;
    add(std::move(rule), std::move(detail));
  }

  void merge(const ValidationReport& other) {
    fatal_ = fatal_ || other.fatal_;
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  }

  bool mentions(std::string_view rule) const {
    for (const auto& v : violations_)
      if (v.rule == rule) return true;
    return false;
  }

  std::string to_string() const {
    std::ostringstream os;
    if (ok()) {
      os << "ok\n";
      return os.str();
    }
    if (fatal_) os << "fatal: structural errors, axiom checks skipped\n";
    for (const auto& v : violations_) os << v.rule << ": " << v.detail << "\n";
    return os.str();
  }

 private:
  std::vector<Violation> violations_;
  bool fatal_ = false;
};

// Thrown when a constructor refuses to emit an object that fails validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("validation failed:\n" + report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace metric1
