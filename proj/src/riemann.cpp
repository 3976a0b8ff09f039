#include "ewt/riemann.hpp"

#include <cmath>
#include <numbers>

namespace ewt {

double riemann_F(const EquationOfState& eos, double lrho) {
  const double cbar = eos.sound_speed0();
  switch (eos.family) {
    case EquationOfState::Family::Polytropic: {
      const double k = 0.5 * (eos.gamma - 1.0);
      return (cbar / k) * (std::exp(k * lrho) - 1.0);
    }
    case EquationOfState::Family::Chaplygin:
      return cbar * (1.0 - std::exp(-lrho));
  }
  return 0.0;
}

double riemann_F_inverse(const EquationOfState& eos, double y) {
  const double cbar = eos.sound_speed0();
  switch (eos.family) {
    case EquationOfState::Family::Polytropic: {
      const double k = 0.5 * (eos.gamma - 1.0);
      const double arg = 1.0 + k * y / cbar;
      if (!(arg > 0.0)) fail(ErrorCode::RangeError, "F_inverse: y below attainable range");
      return std::log(arg) / k;
    }
    case EquationOfState::Family::Chaplygin: {
      const double arg = 1.0 - y / cbar;
      if (!(arg > 0.0)) fail(ErrorCode::RangeError, "F_inverse: y above attainable range");
      return -std::log(arg);
    }
  }
  return 0.0;
}

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double PlaneProfile::value(double x) const {
  if (kind == Kind::Sine) return -amplitude * std::sin(kTwoPi * x / L);
  const double u = (x - center) / width;
  if (std::abs(u) >= 1.0) return 0.0;
  const double q = 1.0 - u * u;
  return amplitude * q * q * q * q * q;
}

double PlaneProfile::d1(double x) const {
  if (kind == Kind::Sine) return -amplitude * (kTwoPi / L) * std::cos(kTwoPi * x / L);
  const double u = (x - center) / width;
  if (std::abs(u) >= 1.0) return 0.0;
  const double q = 1.0 - u * u;
  return amplitude * 5.0 * q * q * q * q * (-2.0 * u) / width;
}

double PlaneProfile::d2(double x) const {
  if (kind == Kind::Sine) {
    const double w = kTwoPi / L;
    return amplitude * w * w * std::sin(kTwoPi * x / L);
  }
  const double u = (x - center) / width;
  if (std::abs(u) >= 1.0) return 0.0;
  const double q = 1.0 - u * u;
  // d2/du2 [q^5] = -10 q^4 + 80 u^2 q^3
  return amplitude * (-10.0 * q * q * q * q + 80.0 * u * u * q * q * q) / (width * width);
}

double PlaneProfile::d3(double x) const {
  if (kind == Kind::Sine) {
    const double w = kTwoPi / L;
    return amplitude * w * w * w * std::cos(kTwoPi * x / L);
  }
  const double u = (x - center) / width;
  if (std::abs(u) >= 1.0) return 0.0;
  const double q = 1.0 - u * u;
  // d3/du3 [q^5] = 240 u q^3 - 480 u^3 q^2
  return amplitude * (240.0 * u * q * q * q - 480.0 * u * u * u * q * q) /
         (width * width * width);
}

double SimpleWave::lambda_plus(double R) const {
  const double lrho = riemann_F_inverse(eos, 0.5 * R);
  return 0.5 * R + eos.sound_speed(lrho);
}

double SimpleWave::dlambda_dR() const {
  // lambda_+' = 1/2 + c_s'/(2 c_s); the ratio c_s'/c_s is constant for the
  // closed-form families ((gamma-1)/2 polytropic, -1 chaplygin).
  const double ratio = eos.sound_speed_deriv(0.0) / eos.sound_speed(0.0);
  return 0.5 * (1.0 + ratio);
}

double SimpleWave::speed_slope(double x) const { return dlambda_dR() * profile.d1(x); }

void SimpleWave::state_of_R(double R, double& lrho, double& v1) const {
  lrho = riemann_F_inverse(eos, 0.5 * R);
  v1 = 0.5 * R;
}

double SimpleWave::trace_back(double x, double t) const {
  // solve x0 + t lambda(R(x0)) = x; monotone in x0 before the crossing time
  double lam_min = lambda_plus(profile.value(0.0)), lam_max = lam_min;
  const int scan = 256;
  for (int i = 1; i <= scan; ++i) {
    const double lam = lambda_plus(profile.value(profile.L * i / scan));
    lam_min = std::min(lam_min, lam);
    lam_max = std::max(lam_max, lam);
  }
  double lo = x - t * lam_max - 1e-12, hi = x - t * lam_min + 1e-12;
  auto G = [&](double x0) { return x0 + t * lambda_plus(profile.value(x0)) - x; };
  for (int it = 0; it < 20; ++it) {
    const double mid = 0.5 * (lo + hi);
    (G(mid) > 0.0 ? hi : lo) = mid;
  }
  double x0 = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    const double g = G(x0);
    const double dg = 1.0 + t * speed_slope(x0);
    if (dg <= 0.0) break;
    const double step = g / dg;
    x0 -= step;
    x0 = std::min(std::max(x0, lo), hi);
    if (std::abs(step) < 1e-13) break;
  }
  return x0;
}

void SimpleWave::exact(double x, double t, double& lrho, double& v1) const {
  if (t > 0.0) {
    try {
      const ShockTime st = shock_time(*this);
      if (t >= st.t_star)
        fail(ErrorCode::PastShockTime, "t >= t_* = " + std::to_string(st.t_star));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoShock) throw;
    }
  }
  state_of_R(profile.value(trace_back(x, t)), lrho, v1);
}

ShockTime shock_time(const SimpleWave& wave, int sampling) {
  if (wave.eos.is_chaplygin())
    fail(ErrorCode::NoShock, "chaplygin simple waves are totally linearly degenerate");
  const double L = wave.profile.L;
  double best_x = 0.0, best_s = wave.speed_slope(0.0);
  for (int i = 1; i < sampling; ++i) {
    const double x = L * i / sampling;
    const double s = wave.speed_slope(x);
    if (s < best_s) {
      best_s = s;
      best_x = x;
    }
  }
  // Newton polish on s'(x) = 0; s = lambda' R'(x), constant lambda'
  const double lamp = wave.dlambda_dR();
  double x = best_x;
  for (int it = 0; it < 40; ++it) {
    const double g = lamp * wave.profile.d2(x);
    const double dg = lamp * wave.profile.d3(x);
    if (dg == 0.0) break;
    const double step = g / dg;
    if (std::abs(step) > L / sampling) break;  // leave the basin to the sampled min
    x -= step;
    if (std::abs(step) < 1e-15 * L) break;
  }
  const double s = wave.speed_slope(x);
  if (s < best_s) {
    best_s = s;
    best_x = x;
  }
  if (!(best_s < -1e-14)) fail(ErrorCode::NoShock, "speed profile is non-decreasing");
  return {-1.0 / best_s, best_x, best_s};
}

double shock_time_crossing_estimate(const SimpleWave& wave, int sampling) {
  if (wave.eos.is_chaplygin())
    fail(ErrorCode::NoShock, "chaplygin simple waves are totally linearly degenerate");
  const double L = wave.profile.L;
  const double dx = L / sampling;
  double t_min = 0.0;
  bool found = false;
  double lam_prev = wave.lambda_plus(wave.profile.value(0.0));
  for (int i = 1; i <= sampling; ++i) {
    const double lam = wave.lambda_plus(wave.profile.value(dx * i));
    if (lam_prev > lam) {
      const double t = dx / (lam_prev - lam);
      if (!found || t < t_min) {
        t_min = t;
        found = true;
      }
    }
    lam_prev = lam;
  }
  if (!found) fail(ErrorCode::NoShock, "no crossing pair found");
  return t_min;
}

std::pair<ScalarField, ScalarField> riemann_invariants(const EquationOfState& eos,
                                                       const FluidState& s) {
  ScalarField rm(s.grid()), rp(s.grid());
  for (std::size_t q = 0; q < rm.size(); ++q) {
    const double F = riemann_F(eos, s.lrho[q]);
    rm[q] = s.vel[0][q] - F;
    rp[q] = s.vel[0][q] + F;
  }
  return {rm, rp};
}

std::pair<ScalarField, ScalarField> characteristic_speeds(const EquationOfState& eos,
                                                          const FluidState& s) {
  ScalarField lm(s.grid()), lp(s.grid());
  for (std::size_t q = 0; q < lm.size(); ++q) {
    const double cs = eos.sound_speed(s.lrho[q]);
    lm[q] = s.vel[0][q] - cs;
    lp[q] = s.vel[0][q] + cs;
  }
  return {lm, lp};
}

}  // namespace ewt
