#pragma once

#include <utility>

#include "ewt/eos.hpp"
#include "ewt/grid.hpp"

namespace ewt {

/// F with F'(lrho) = c_s(lrho), F(0) = 0 (closed form for both families),
/// entering the Riemann invariants R_pm = v^1 +- F(lrho).
double riemann_F(const EquationOfState& eos, double lrho);
/// Inverse of F; RangeError outside the attainable range.
double riemann_F_inverse(const EquationOfState& eos, double y);

/// Initial profile R_+(0, x) on a periodic window of length L.
/// sine: -A sin(2 pi x / L); bump: A (1 - ((x-c)/w)^2)^5 on |x-c| < w.
struct PlaneProfile {
  enum class Kind { Sine, Bump };
  Kind kind = Kind::Sine;
  double amplitude = 0.5;
  double L = 1.0;
  double center = 0.5;
  double width = 0.25;

  double value(double x) const;
  double d1(double x) const;
  double d2(double x) const;
  double d3(double x) const;
};

/// Simple outgoing plane wave: R_- = 0, so v^1 = R_+ / 2 and F(lrho) = R_+ / 2.
struct SimpleWave {
  PlaneProfile profile;
  EquationOfState eos;

  /// lambda_+ = v^1 + c_s as a function of R_+ on the R_- = 0 branch.
  double lambda_plus(double R) const;
  /// d lambda_+ / dR; constant in R for both closed-form families.
  double dlambda_dR() const;
  /// speed profile s(x) = d/dx lambda_+(R_+(0,x)) and its derivatives
  double speed_slope(double x) const;

  void state_of_R(double R, double& lrho, double& v1) const;

  /// Exact solution by characteristic tracing; PastShockTime for t >= t_*.
  void exact(double x, double t, double& lrho, double& v1) const;
  /// Characteristic foot point x0 with x = x0 + t lambda_+(R(x0)).
  double trace_back(double x, double t) const;
};

struct ShockTime {
  double t_star = 0.0;   // first characteristic-crossing time
  double x_min = 0.0;    // minimizer of the speed slope
  double slope_min = 0.0;
};

/// t_* = -1 / min_x d/dx lambda_+(R_+(0,x)), minimized on a refined sampling
/// (16x by default) with Newton polish. NoShock if the speed profile is
/// non-decreasing or the EOS is chaplygin.
ShockTime shock_time(const SimpleWave& wave, int sampling = 4096);

/// Crossing-time estimate from pairwise characteristic intersections on a
/// finite sampling (no polish); used as an independent numeric cross-check.
double shock_time_crossing_estimate(const SimpleWave& wave, int sampling);

/// R_-+ = v^1 -+ F(lrho), evaluated componentwise on a snapshot.
std::pair<ScalarField, ScalarField> riemann_invariants(const EquationOfState& eos,
                                                       const FluidState& s);
/// lambda_-+ = v^1 -+ c_s
std::pair<ScalarField, ScalarField> characteristic_speeds(const EquationOfState& eos,
                                                          const FluidState& s);

}  // namespace ewt
