#pragma once

#include <optional>
#include <span>
#include <vector>

#include "proxsmooth/grid_function.hpp"

namespace proxsmooth {

/// The index interval on which a computed function is free of window
/// artifacts, plus whether an extremizer landing exactly on either end can be
/// relied on.
///
/// An end is closed when every value beyond it is a lower bound of the true
/// value (or the true value is +inf, as past the edge of an indicator's
/// domain). Then a min or max that stops at the end is the true one. An end
/// is open when values beyond may be too large; window truncation is the
/// usual case, since it treats everything outside the window as +inf.
struct TrustRegion {
  std::optional<IndexRange> range;
  bool closed_lo = false;
  bool closed_hi = false;

  bool empty() const { return !range.has_value(); }
  bool contains(std::size_t i) const { return range && range->contains(i); }

  /// Whether an argmin/argmax at index i yields the true extremum.
  bool accepts(std::size_t i) const {
    if (!range) return false;
    if (i > range->lo && i < range->hi) return true;
    return (i == range->lo && closed_lo) || (i == range->hi && closed_hi);
  }

  /// Finite block of a sampled function. Ends that stop short of the window
  /// are genuine domain boundaries (closed); ends on the window edge are
  /// truncations (open).
  static TrustRegion natural(const GridFunction& f);
};

/// Intersection for pointwise positive combinations of functions on one grid.
TrustRegion combine(const TrustRegion& a, const TrustRegion& b, std::size_t n);

/// Output trust of an extremum transform (conjugate or Moreau envelope):
/// output j is trusted when `input` accepts extremizer[j]. `max_of_negated`
/// is true for conjugation, which flips the sign of out-of-trust errors.
TrustRegion trust_from_extremizers(std::span<const std::size_t> extremizer, const TrustRegion& input,
                                   bool max_of_negated);

/// Longest run of `true` flags as a range, if any.
std::optional<IndexRange> longest_run(const std::vector<bool>& flags);

/// A computed function together with its artifact metadata.
struct Transformed {
  GridFunction function;
  TrustRegion trusted;
  /// Points where the value is defined; compositions that leave the window
  /// store +inf outside this range.
  IndexRange defined;
  /// argmax/argmin index per output point, for extremum transforms.
  std::vector<std::size_t> extremizer;

  Transformed(GridFunction f);  // NOLINT: natural trust for sampled data
  Transformed(GridFunction f, TrustRegion t, IndexRange d, std::vector<std::size_t> ext = {})
      : function(std::move(f)), trusted(t), defined(d), extremizer(std::move(ext)) {}

  const Grid1D& grid() const { return function.grid(); }
};

/// Sup |a - b| over points trusted and defined in both. Both +inf counts as 0,
/// one-sided +inf as +inf. Grids must match.
struct SupDistance {
  double value = 0.0;
  std::optional<std::size_t> index;  ///< where the sup is attained
  std::optional<IndexRange> over;    ///< comparison range (empty if none)
};
SupDistance sup_distance(const Transformed& a, const Transformed& b);

/// Common trusted-and-defined range of two results on one grid.
std::optional<IndexRange> common_trusted(const Transformed& a, const Transformed& b);

}  // namespace proxsmooth
