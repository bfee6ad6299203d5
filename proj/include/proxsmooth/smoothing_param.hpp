#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace proxsmooth {

/// Smoothing parameter lambda, strictly inside ]0, 1[.
class SmoothingParam {
 public:
  explicit SmoothingParam(double lambda) : lambda_(lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
      throw std::invalid_argument("smoothing parameter must lie in ]0,1[, got " + std::to_string(lambda));
  }

  double lambda() const { return lambda_; }

  /// lambda / (2 - lambda), the Moreau parameter of the new operator; also in ]0,1[.
  double mu() const { return lambda_ / (2.0 - lambda_); }

 private:
  double lambda_;
};

}  // namespace proxsmooth
