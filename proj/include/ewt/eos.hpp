#pragma once

#include <string>

#include "ewt/error.hpp"

namespace ewt {

/// Barotropic equation of state p = p(rho), evaluated in the logarithmic
/// density variable lrho = ln(rho/rho_bar). Closed-form families only:
///
///   polytropic:  p = K rho^gamma          (K > 0, gamma > 1)
///   chaplygin:   p = C0 - C1 / rho        (C1 > 0)
///
/// The sound speed c_s = sqrt(dp/drho) and its lrho-derivative are analytic.
struct EquationOfState {
  enum class Family { Polytropic, Chaplygin };

  Family family = Family::Polytropic;
  double gamma = 2.0;   // polytropic exponent
  double K = 0.5;       // polytropic constant
  double C0 = 0.0;      // chaplygin offset
  double C1 = 1.0;      // chaplygin constant
  double rho_bar = 1.0; // background mass density

  static EquationOfState polytropic(double gamma, double K, double rho_bar = 1.0);
  /// K = 1/gamma, rho_bar = 1, so that c_s(0) = 1 and the constant state has
  /// unit sound speed.
  static EquationOfState normalized_polytropic(double gamma);
  static EquationOfState chaplygin(double C0, double C1, double rho_bar = 1.0);

  double rho(double lrho) const;           // rho_bar * exp(lrho)
  double pressure(double lrho) const;
  double sound_speed(double lrho) const;   // c_s(lrho)
  double sound_speed_deriv(double lrho) const;  // d c_s / d lrho
  double sound_speed0() const { return sound_speed(0.0); }

  bool is_chaplygin() const { return family == Family::Chaplygin; }
};

struct EosDiagnostics {
  bool hyperbolic = false;       // c_s > 0 on the sampled interval
  bool shock_capable = false;    // genuinely nonlinear simple waves (not chaplygin)
  double cs_min = 0.0;
  double cs_max = 0.0;
  std::string note;
};

/// Samples c_s over [lrho_min, lrho_max] and reports hyperbolicity; chaplygin
/// is flagged totally linearly degenerate (no shock formation from simple waves).
EosDiagnostics validate(const EquationOfState& eos, double lrho_min = -1.0,
                        double lrho_max = 1.0, int samples = 257);

}  // namespace ewt
