#include "ewt/eos.hpp"

#include <cmath>

namespace ewt {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonHyperbolic: return "NonHyperbolic";
    case ErrorCode::StencilTooWide: return "StencilTooWide";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::NoShock: return "NoShock";
    case ErrorCode::PastShockTime: return "PastShockTime";
    case ErrorCode::InsufficientSnapshots: return "InsufficientSnapshots";
    case ErrorCode::SingularFrame: return "SingularFrame";
    case ErrorCode::DegenerateGradient: return "DegenerateGradient";
    case ErrorCode::MuNonpositive: return "MuNonpositive";
    case ErrorCode::DegenerateTorusFrame: return "DegenerateTorusFrame";
    case ErrorCode::CoordinateFold: return "CoordinateFold";
    case ErrorCode::NoDecay: return "NoDecay";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

EquationOfState EquationOfState::polytropic(double gamma, double K, double rho_bar) {
  if (!(K > 0.0) || !(gamma > 1.0) || !(rho_bar > 0.0))
    throw std::invalid_argument("polytropic EOS requires K > 0, gamma > 1, rho_bar > 0");
  EquationOfState e;
  e.family = Family::Polytropic;
  e.gamma = gamma;
  e.K = K;
  e.rho_bar = rho_bar;
  return e;
}

EquationOfState EquationOfState::normalized_polytropic(double gamma) {
  return polytropic(gamma, 1.0 / gamma, 1.0);
}

EquationOfState EquationOfState::chaplygin(double C0, double C1, double rho_bar) {
  if (!(C1 > 0.0) || !(rho_bar > 0.0))
    throw std::invalid_argument("chaplygin EOS requires C1 > 0, rho_bar > 0");
  EquationOfState e;
  e.family = Family::Chaplygin;
  e.C0 = C0;
  e.C1 = C1;
  e.rho_bar = rho_bar;
  return e;
}

double EquationOfState::rho(double lrho) const { return rho_bar * std::exp(lrho); }

double EquationOfState::pressure(double lrho) const {
  const double r = rho(lrho);
  switch (family) {
    case Family::Polytropic: return K * std::pow(r, gamma);
    case Family::Chaplygin: return C0 - C1 / r;
  }
  return 0.0;
}

double EquationOfState::sound_speed(double lrho) const {
  // dp/drho: polytropic K*gamma*rho^(gamma-1), chaplygin C1/rho^2.
  double dpdr = 0.0;
  switch (family) {
    case Family::Polytropic:
      dpdr = K * gamma * std::pow(rho(lrho), gamma - 1.0);
      break;
    case Family::Chaplygin: {
      const double r = rho(lrho);
      dpdr = C1 / (r * r);
      break;
    }
  }
  if (dpdr < 0.0) fail(ErrorCode::NonHyperbolic, "dp/drho < 0 at lrho=" + std::to_string(lrho));
  return std::sqrt(dpdr);
}

double EquationOfState::sound_speed_deriv(double lrho) const {
  // c_s as a function of lrho is an exponential for both families.
  switch (family) {
    case Family::Polytropic: return 0.5 * (gamma - 1.0) * sound_speed(lrho);
    case Family::Chaplygin: return -sound_speed(lrho);
  }
  return 0.0;
}

EosDiagnostics validate(const EquationOfState& eos, double lrho_min, double lrho_max, int samples) {
  EosDiagnostics d;
  d.hyperbolic = true;
  d.cs_min = d.cs_max = eos.sound_speed(lrho_min);
  for (int i = 0; i < samples; ++i) {
    const double q = lrho_min + (lrho_max - lrho_min) * i / double(samples - 1);
    double cs;
    try {
      cs = eos.sound_speed(q);
    } catch (const Error&) {
      d.hyperbolic = false;
      d.note = "dp/drho < 0 inside sampled interval";
      continue;
    }
    if (!(cs > 0.0)) d.hyperbolic = false;
    d.cs_min = std::min(d.cs_min, cs);
    d.cs_max = std::max(d.cs_max, cs);
  }
  d.shock_capable = d.hyperbolic && !eos.is_chaplygin();
  if (eos.is_chaplygin())
    d.note = "chaplygin: totally linearly degenerate, simple waves do not steepen";
  return d;
}

}  // namespace ewt
