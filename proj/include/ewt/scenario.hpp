#pragma once

#include <cstdint>
#include <string>

#include "ewt/eos.hpp"
#include "ewt/grid.hpp"
#include "ewt/riemann.hpp"

namespace ewt {

/// Nearly-simple-plane-wave data: R_- = 0 wave of amplitude delta in x^1,
/// plus x^2,x^3-dependent perturbations of amplitude epsilon. The size
/// hierarchy epsilon <= delta/10 is enforced at validation (unless delta = 0).
struct InitialDataParams {
  enum class Perturbation { None, Irrotational, Vortical };

  double delta = 0.5;
  double epsilon = 0.01;
  PlaneProfile::Kind profile = PlaneProfile::Kind::Sine;
  double bump_center = 0.5;
  double bump_width = 0.25;
  Perturbation perturbation = Perturbation::None;
};

struct Scenario {
  std::string name = "scenario";
  EquationOfState eos = EquationOfState::normalized_polytropic(2.0);
  Grid grid = Grid::make(256, 1, 1);
  InitialDataParams init;
  double cfl = 0.4;
  double t_max = 0.2;
  double mu_stop = 0.1;
  bool eikonal = false;
  double grad_guard_factor = 50.0;
  bool filter = false;
  uint64_t seed = 0;
};

/// Parse a scenario from JSON text / file. ConfigError with field diagnostics.
Scenario scenario_from_json(const std::string& text);
Scenario scenario_from_file(const std::string& path);
std::string scenario_to_json(const Scenario& sc);

/// FNV-1a over the canonical JSON form; embedded in every report.
uint64_t scenario_hash(const Scenario& sc);

/// Schema, EOS, size-hierarchy and CFL checks; returns human-readable problems
/// (empty = valid). Chaplygin with eikonal/shock diagnostics yields a warning
/// entry prefixed "warning:".
std::vector<std::string> validate_scenario(const Scenario& sc);

extern const char* kCodeVersion;

}  // namespace ewt
