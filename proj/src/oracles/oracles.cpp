#include "proxsmooth/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace proxsmooth::oracles {

namespace {

void validate(RadialQuery q) {
  if (!(q.lambda > 0.0 && q.lambda < 1.0))
    throw std::invalid_argument("oracle: lambda must lie in ]0,1[, got " + std::to_string(q.lambda));
  if (!(q.r >= 0.0) || !std::isfinite(q.r))
    throw std::invalid_argument("oracle: r must be finite and nonnegative, got " + std::to_string(q.r));
}

}  // namespace

double norm_moreau(RadialQuery q) {
  validate(q);
  const double r = q.r, l = q.lambda;
  if (r <= l) return r * r / (2.0 * l);
  return r - l / 2.0;
}

ExtValue norm_moreau_conj(RadialQuery q) {
  validate(q);
  if (q.r <= 1.0) return ExtValue(q.lambda * q.r * q.r / 2.0);
  return ExtValue::infinity();
}

double norm_conj_moreau(RadialQuery q) {
  validate(q);
  const double d = std::max(0.0, q.r - 1.0);
  return d * d / (2.0 * q.lambda);
}

double norm_goebel(RadialQuery q) {
  validate(q);
  const double r = q.r, l = q.lambda;
  if (r <= l) return r * r / (2.0 * l);
  return l * r * r / 2.0 + (1.0 - l * l) * r - l * (1.0 - l * l) / 2.0;
}

double norm_new(RadialQuery q) {
  validate(q);
  const double r = q.r, l = q.lambda;
  if (r <= l / 2.0) return (2.0 - l) * r * r / (2.0 * l);
  return l * r * r / (2.0 * (2.0 - l)) + 2.0 * (1.0 - l) * r / (2.0 - l) - l * (1.0 - l) / (2.0 * (2.0 - l));
}

double dist_ball_sq(double r) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw std::invalid_argument("dist_ball_sq: r must be finite and nonnegative, got " + std::to_string(r));
  const double d = std::max(0.0, r - 1.0);
  return d * d;
}

}  // namespace proxsmooth::oracles
