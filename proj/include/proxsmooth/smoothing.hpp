#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "proxsmooth/smoothing_param.hpp"
#include "proxsmooth/transforms.hpp"

namespace proxsmooth {

enum class Operator { Goebel, New, Moreau };

const char* to_string(Operator op);

/// G_lambda f = (1 - lambda^2) e_lambda f + lambda q. The production path.
Transformed goebel(const Transformed& f, SmoothingParam p);

/// G_lambda f = (1 + lambda) P(f, 0; 1 - lambda, lambda) + lambda q.
Transformed goebel_via_pav(const Transformed& f, SmoothingParam p);

/// G_lambda f = (1 + lambda)^2 P(f, q; (1-lambda)/(1+lambda), 2 lambda/(1+lambda)) evaluated at x/(1+lambda).
Transformed goebel_via_scaled_pav(const Transformed& f, SmoothingParam p);

/// S_lambda f = P(f, q; 1 - lambda, lambda).
Transformed smooth_new(const Transformed& f, SmoothingParam p);

/// S_lambda f = (1 - lambda) e_mu f(2x/(2 - lambda)) + mu q, mu = lambda/(2 - lambda).
Transformed smooth_new_via_moreau(const Transformed& f, SmoothingParam p);

/// ((2-lam)^2/4) G_{lam/(2-lam)} f(2x/(2-lam)), which equals P(f, q; 1 - lam, lam).
Transformed pav_from_goebel(const Transformed& f, double lam);

/// Default numerical path of each operator (Moreau uses lambda directly).
Transformed apply(Operator op, const Transformed& f, SmoothingParam p);

struct SmoothingReport {
  Operator op;
  double lambda;
  /// sup |(T f)^* - T(f^*)| over trusted_interior of f_star's grid
  double self_dual_residual;
  std::size_t worst_index;
  double worst_x;
  /// pairwise sup distances between the representations of T applied to f
  std::vector<std::pair<std::string, double>> representation_residuals;
  IndexRange trusted_interior;
};

/// Compares the numerical conjugate of T f (taken on f_star's grid) with T
/// applied to f_star. Throws std::runtime_error when no point is trusted.
SmoothingReport self_duality_check(const Transformed& f, const Transformed& f_star, Operator op, SmoothingParam p);

/// Pairwise comparisons between every available representation of T f.
std::vector<std::pair<std::string, SupDistance>> representation_distances(Operator op, const Transformed& f,
                                                                          SmoothingParam p);

/// Pairwise sup distances between every available representation of T f;
/// +inf where two representations share no trusted point.
std::vector<std::pair<std::string, double>> representation_residuals(Operator op, const Transformed& f,
                                                                     SmoothingParam p);

struct ConvergencePoint {
  double lambda;
  double sup_error;
};

/// sup over trusted, finite points of |T_lambda f - f| per lambda. Lambdas must
/// be strictly descending in ]0,1[.
std::vector<ConvergencePoint> convergence_sweep(const Transformed& f, Operator op, std::span<const double> lambdas);

/// min over (alpha, beta) of sup |G_alpha f - S_beta f| over the common trusted range.
double distinctness_check(const Transformed& f, std::span<const double> alphas, std::span<const double> betas);

}  // namespace proxsmooth
