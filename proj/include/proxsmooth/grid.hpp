#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace proxsmooth {

/// Uniform 1-D sampling grid x_i = a + i*h, i = 0..n-1, h = (b-a)/(n-1).
class Grid1D {
 public:
  /// Throws std::invalid_argument unless a < b are finite and n >= 3.
  Grid1D(double a, double b, std::size_t n);

  double a() const { return a_; }
  double b() const { return b_; }
  std::size_t n() const { return n_; }
  double h() const { return h_; }

  /// The last point is b exactly so that windows nest without rounding drift.
  double point(std::size_t i) const { return i + 1 == n_ ? b_ : a_ + static_cast<double>(i) * h_; }
  std::vector<double> points() const;

  bool contains(double x) const { return x >= a_ && x <= b_; }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  double a_;
  double b_;
  std::size_t n_;
  double h_;
};

/// Signed count so that negative user input is rejected instead of wrapping.
Grid1D make_grid(double a, double b, std::int64_t n);

/// Closed, non-empty index interval [lo, hi].
struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t size() const { return hi - lo + 1; }
  bool contains(std::size_t i) const { return i >= lo && i <= hi; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

}  // namespace proxsmooth
