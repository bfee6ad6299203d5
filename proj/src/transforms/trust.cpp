#include "proxsmooth/trust.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace proxsmooth {

TrustRegion TrustRegion::natural(const GridFunction& f) {
  const IndexRange fr = f.finite_range();
  return TrustRegion{fr, fr.lo > 0, fr.hi + 1 < f.size()};
}

TrustRegion combine(const TrustRegion& a, const TrustRegion& b, std::size_t n) {
  if (!a.range || !b.range) return {};
  const std::size_t lo = std::max(a.range->lo, b.range->lo);
  const std::size_t hi = std::min(a.range->hi, b.range->hi);
  if (lo > hi) return {};
  const std::size_t last = n - 1;
  // an end is closed only if every summand is exact or a lower bound beyond it
  auto lo_ok = [](const TrustRegion& t) { return t.range->lo == 0 || t.closed_lo; };
  auto hi_ok = [last](const TrustRegion& t) { return t.range->hi == last || t.closed_hi; };
  return TrustRegion{IndexRange{lo, hi}, lo != 0 && lo_ok(a) && lo_ok(b), hi != last && hi_ok(a) && hi_ok(b)};
}

std::optional<IndexRange> longest_run(const std::vector<bool>& flags) {
  std::optional<IndexRange> best;
  std::size_t i = 0;
  while (i < flags.size()) {
    if (!flags[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < flags.size() && flags[j + 1]) ++j;
    if (!best || j - i + 1 > best->size()) best = IndexRange{i, j};
    i = j + 1;
  }
  return best;
}

TrustRegion trust_from_extremizers(std::span<const std::size_t> extremizer, const TrustRegion& input,
                                   bool max_of_negated) {
  std::vector<bool> ok(extremizer.size());
  for (std::size_t j = 0; j < extremizer.size(); ++j) ok[j] = input.accepts(extremizer[j]);
  TrustRegion out;
  out.range = longest_run(ok);
  if (!out.range) return out;
  const std::size_t last = extremizer.size() - 1;
  // Extremizers are monotone, so the output's low side maps to the input's
  // low side. A Moreau envelope keeps the sign of input errors; conjugation
  // flips it.
  out.closed_lo = out.range->lo != 0 && (max_of_negated ? !input.closed_lo : input.closed_lo);
  out.closed_hi = out.range->hi != last && (max_of_negated ? !input.closed_hi : input.closed_hi);
  return out;
}

Transformed::Transformed(GridFunction f)
    : function(std::move(f)),
      trusted(TrustRegion::natural(function)),
      defined(IndexRange{0, function.size() - 1}) {}

std::optional<IndexRange> common_trusted(const Transformed& a, const Transformed& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("comparison requires a common grid");
  if (!a.trusted.range || !b.trusted.range) return std::nullopt;
  const std::size_t lo = std::max({a.trusted.range->lo, b.trusted.range->lo, a.defined.lo, b.defined.lo});
  const std::size_t hi = std::min({a.trusted.range->hi, b.trusted.range->hi, a.defined.hi, b.defined.hi});
  if (lo > hi) return std::nullopt;
  return IndexRange{lo, hi};
}

SupDistance sup_distance(const Transformed& a, const Transformed& b) {
  SupDistance d;
  d.over = common_trusted(a, b);
  if (!d.over) return d;
  for (std::size_t i = d.over->lo; i <= d.over->hi; ++i) {
    const ExtValue u = a.function[i];
    const ExtValue v = b.function[i];
    double diff = 0.0;
    if (u.is_infinite() && v.is_infinite())
      diff = 0.0;
    else if (u.is_infinite() || v.is_infinite())
      diff = std::numeric_limits<double>::infinity();
    else
      diff = std::abs(u.value() - v.value());
    if (!d.index || diff > d.value) {
      d.value = diff;
      d.index = i;
    }
  }
  return d;
}

}  // namespace proxsmooth
