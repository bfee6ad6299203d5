#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace proxsmooth {

/// A value in ]-inf, +inf]: either a finite double or +inf.
///
/// +inf is kept as the IEEE infinity so that comparisons and min/max work
/// unchanged, but NaN and -inf can never be stored.
class ExtValue {
 public:
  constexpr ExtValue() = default;

  explicit ExtValue(double v) : v_(v) {
    if (std::isnan(v)) throw std::domain_error("ExtValue: NaN is not an extended real");
    if (v == -std::numeric_limits<double>::infinity())
      throw std::domain_error("ExtValue: -inf is not allowed (functions are proper)");
  }

  static constexpr ExtValue infinity() {
    ExtValue e;
    e.v_ = std::numeric_limits<double>::infinity();
    return e;
  }

  constexpr bool is_finite() const { return v_ != std::numeric_limits<double>::infinity(); }
  constexpr bool is_infinite() const { return !is_finite(); }

  /// Raw double; +inf for the infinite element.
  constexpr double value() const { return v_; }

  friend constexpr bool operator==(ExtValue, ExtValue) = default;
  friend constexpr auto operator<=>(ExtValue a, ExtValue b) { return a.v_ <=> b.v_; }

 private:
  double v_ = 0.0;
};

inline ExtValue operator+(ExtValue a, ExtValue b) {
  if (a.is_infinite() || b.is_infinite()) return ExtValue::infinity();
  return ExtValue(a.value() + b.value());
}

/// Adding a finite real never leaves ]-inf, +inf].
inline ExtValue operator+(ExtValue a, double b) {
  if (!std::isfinite(b)) throw std::domain_error("ExtValue: finite shift required");
  if (a.is_infinite()) return a;
  return ExtValue(a.value() + b);
}

inline ExtValue operator-(ExtValue a, double b) { return a + (-b); }

/// Nonnegative scaling; 0 * (+inf) is rejected rather than guessed.
inline ExtValue operator*(double factor, ExtValue a) {
  if (!(factor >= 0.0) || !std::isfinite(factor))
    throw std::domain_error("ExtValue: scale factor must be finite and nonnegative");
  if (a.is_infinite()) {
    if (factor == 0.0) throw std::domain_error("ExtValue: 0 * inf is undefined");
    return a;
  }
  return ExtValue(factor * a.value());
}

}  // namespace proxsmooth
