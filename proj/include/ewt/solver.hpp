#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ewt/scenario.hpp"

namespace ewt {

/// Full integration state: fluid unknowns plus, when the eikonal module is
/// attached, the periodic offsets of the geometric fields:
///   u = 1 - x^1 + w,   theta^A = x^{A+1} + xi^A
/// (w and xi are periodic on the window; u and theta themselves are not).
struct SimState {
  FluidState fluid;
  bool has_eikonal = false;
  ScalarField w;
  ScalarField xi1, xi2;

  double t() const { return fluid.t; }
  const Grid& grid() const { return fluid.grid(); }
};

struct EulerRhs {
  ScalarField dt_lrho;
  VectorField dt_v;
};

/// dt_lrho = -v.grad(lrho) - div v ; dt_v^i = -v.grad(v^i) - c_s^2 d_i lrho
EulerRhs euler_rhs(const EquationOfState& eos, const FluidState& s);

SimState initial_data_nearly_simple_plane_wave(const Scenario& sc);

/// The quantities Remark-level constrained data determine from the free data:
/// specific vorticity at t=0 and the initial time derivatives from the RHS.
struct ConstrainedData {
  VectorField pomega0;
  ScalarField dt_lrho0;
  VectorField dt_v0;
};
ConstrainedData complete_constrained_data(const FluidState& s0, const EquationOfState& eos);

enum class StopReason {
  TMax,
  StepLimit,
  MuStop,
  BlowupGuard,
  NanDetected,
  DegenerateGradient,
};
const char* to_string(StopReason r);

struct MuSample {
  double t = 0.0;
  double mu_min = 0.0;
  std::size_t argmin = 0;
};

/// Capture request: snapshots at steps [center - half, center + half].
struct WindowSpec {
  int center_step = 0;
  int half_width = 2;
};

struct Window {
  double dt = 0.0;
  int center_step = 0;
  int first_step = 0;
  std::vector<SimState> snaps;

  int center_index() const { return center_step - first_step; }
  const SimState& center() const { return snaps[center_index()]; }
};

struct IntegrateOptions {
  std::optional<double> fixed_dt;   // overrides CFL
  std::optional<int> fixed_steps;   // with scenario t_max: dt = t_max / steps
  int snapshot_every = 0;           // full-trajectory cadence, 0 = off
  std::vector<WindowSpec> windows;
  int mu_every = 1;                 // mu_* sampling cadence (eikonal runs)
  std::function<void(const SimState&, int)> on_step;
  int on_step_every = 0;
};

struct RunResult {
  StopReason stop = StopReason::TMax;
  int steps = 0;
  double dt = 0.0;
  double max_speed0 = 0.0;
  double grad_guard_ref = 0.0;
  SimState final_state;
  std::vector<SimState> trajectory;
  std::vector<Window> windows;
  std::vector<MuSample> mu_history;
};

/// RK4 method of lines with uniform dt (CFL-derived at t = 0 unless fixed).
/// Halts at t_max, at mu_stop when the eikonal is attached, on the gradient
/// safeguard, or on NaN; never throws for those (see RunResult::stop).
RunResult integrate(const Scenario& sc, const SimState& initial, const IntegrateOptions& opt = {});

/// max over cells of |v| + c_s (time-step speed bound)
double max_characteristic_speed(const EquationOfState& eos, const FluidState& s);

}  // namespace ewt
