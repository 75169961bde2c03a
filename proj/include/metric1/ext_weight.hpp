#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "metric1/rational.hpp"

namespace metric1 {

// Extended non-negative rational: a finite value >= 0 or infinity.
//
// Arithmetic conventions: x + inf = inf + x = inf + inf = inf. Differences
// are only formed inside the triangle checks (see AdditiveScale::spread),
// where inf - inf is left undefined.
class ExtWeight {
 public:
  ExtWeight() = default;

  ExtWeight(Rational value) : value_(std::move(value)) {  // NOLINT: implicit by intent
    value_.canonicalize();
    if (sgn(value_) < 0) throw InputError("weights must be non-negative, got " + metric1::to_string(value_));
  }

  ExtWeight(long value) : ExtWeight(Rational(value)) {}  // NOLINT
  ExtWeight(int value) : ExtWeight(Rational(value)) {}   // NOLINT

  static ExtWeight infinity() {
    ExtWeight w;
    w.infinite_ = true;
    return w;
  }

  static ExtWeight parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "Infinity" || text == "∞") return infinity();
    return ExtWeight(parse_rational(text));
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }

  const Rational& value() const {
    if (infinite_) throw PreconditionError("value() of an infinite weight");
    return value_;
  }

  friend ExtWeight operator+(const ExtWeight& a, const ExtWeight& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtWeight(Rational(a.value_ + b.value_));
  }

  // Product of two weights; inf * x = inf (callers never multiply inf by 0).
  friend ExtWeight operator*(const ExtWeight& a, const ExtWeight& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtWeight(Rational(a.value_ * b.value_));
  }

  friend bool operator==(const ExtWeight& a, const ExtWeight& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return cmp(a.value_, b.value_) == 0;
  }

  friend std::strong_ordering operator<=>(const ExtWeight& a, const ExtWeight& b) {
    if (a.infinite_ || b.infinite_) {
      if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
      return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const { return infinite_ ? "inf" : metric1::to_string(value_); }

  // Value as a double, for display only.
  double approx() const;

  friend std::ostream& operator<<(std::ostream& os, const ExtWeight& w) { return os << w.to_string(); }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

inline double ExtWeight::approx() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return value_.get_d();
}

inline std::string to_string(const ExtWeight& w) { return w.to_string(); }

// Weight scales. A metric 1-space stores weights on one of two scales:
//
//  * additive: unit 0, composition bound a + b, lower bound |a - b|
//  * multiplicative: unit 1, composition bound a * b, lower bound
//    max(a / b, b / a); this is the exponential of the additive scale and is
//    used for bi-Lipschitz constants, whose logarithms are irrational.
//
// `spread(a, b)` returns the lower bound the full triangle inequality puts on
// a composite, or nothing when both legs are infinite.
struct AdditiveScale {
  static constexpr std::string_view name = "additive";

  static ExtWeight unit() { return ExtWeight{}; }
  static bool is_unit(const ExtWeight& w) { return w.is_zero(); }
  static bool in_range(const ExtWeight&) { return true; }
  static ExtWeight combine(const ExtWeight& a, const ExtWeight& b) { return a + b; }

  static std::optional<ExtWeight> spread(const ExtWeight& a, const ExtWeight& b) {
    if (a.is_infinite() && b.is_infinite()) return std::nullopt;
    if (a.is_infinite() || b.is_infinite()) return ExtWeight::infinity();
    Rational d = a.value() - b.value();
    return ExtWeight(Rational(abs(d)));
  }
};

struct MultiplicativeScale {
  static constexpr std::string_view name = "multiplicative";

  static ExtWeight unit() { return ExtWeight(1); }
  static bool is_unit(const ExtWeight& w) { return w == unit(); }
  static bool in_range(const ExtWeight& w) { return w >= unit(); }
  static ExtWeight combine(const ExtWeight& a, const ExtWeight& b) { return a * b; }

  static std::optional<ExtWeight> spread(const ExtWeight& a, const ExtWeight& b) {
    if (a.is_infinite() && b.is_infinite()) return std::nullopt;
    if (a.is_infinite() || b.is_infinite()) return ExtWeight::infinity();
    Rational q = a.value() / b.value();
    if (cmp(q, 1) < 0) q = b.value() / a.value();
    return ExtWeight(q);
  }
};

}  // namespace metric1
