#pragma once

#include "proxsmooth/ext_value.hpp"

namespace proxsmooth::oracles {

/// Radius r = |x| (or |x*|) and smoothing parameter. Values depend on x only
/// through r, so one scalar evaluation serves every dimension.
struct RadialQuery {
  double r;
  double lambda;
};

/// e_lambda of the norm: r^2/(2 lambda) if r <= lambda, else r - lambda/2.
double norm_moreau(RadialQuery q);

/// (e_lambda norm)^* = indicator of the unit ball + lambda q.
ExtValue norm_moreau_conj(RadialQuery q);

/// e_lambda of the unit-ball indicator: (max{0, r - 1})^2 / (2 lambda).
double norm_conj_moreau(RadialQuery q);

/// G_lambda of the norm.
double norm_goebel(RadialQuery q);

/// S_lambda of the norm.
double norm_new(RadialQuery q);

/// Squared distance to the unit ball.
double dist_ball_sq(double r);

}  // namespace proxsmooth::oracles
