#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ewt/metric.hpp"
#include "ewt/waveop.hpp"
#include "ewt/window.hpp"

namespace ewt {

/// Q^i = -(1 + c_s^{-1} c_s') (g^{-1})^{ab} d_a lrho d_b v^i
std::array<double, 3> null_form_Q_velocity(const SpacetimeMetric& m, const StateJet1& j);

/// Q = -3 c_s^{-1} c_s' (g^{-1})^{ab} d_a lrho d_b lrho
///     + 2 sum_{a<b} { d_a v^a d_b v^b - d_a v^b d_b v^a }
double null_form_Q_density(const SpacetimeMetric& m, const StateJet1& j);

/// P^i = eps_{iab} { (d_a w^c) d_c v^b - (d_a v^c) d_c w^b } on spatial jets;
/// d[a][c] = d_a of component c.
std::array<double, 3> null_form_P_omega(const std::array<std::array<double, 3>, 3>& dpom,
                                        const std::array<std::array<double, 3>, 3>& dv);

/// Residuals of the five equations, evaluated at a window center with all time
/// derivatives from snapshot differencing (never from the evolution equations).
VectorField residual_wave_velocity(const EquationOfState& eos, const Window& w);
ScalarField residual_wave_density(const EquationOfState& eos, const Window& w);
VectorField residual_transport_vorticity(const EquationOfState& eos, const Window& w);
ScalarField residual_div_identity(const EquationOfState& eos, const FluidState& s);
VectorField residual_curl_transport(const EquationOfState& eos, const Window& w);
/// Box_{gt} v^i with gt = exp(lrho) c_s g; vanishes only on irrotational runs.
VectorField residual_conformal_irrotational(const EquationOfState& eos, const Window& w);

/// Measurement region: optional x^1 interval (full domain otherwise).
struct Region {
  std::optional<std::pair<double, double>> x1_range;
  bool contains(const Grid& g, std::size_t q) const;
};

struct Norms {
  double l2 = 0.0;
  double linf = 0.0;
};
Norms field_norms(const ScalarField& f, const Region& r = {});
Norms vector_norms(const VectorField& f, const Region& r = {});

struct LevelNorms {
  int n1 = 0, n2 = 0, n3 = 0;
  double h1 = 0.0, dt = 0.0;
  std::vector<double> l2, linf;  // indexed per equation
};

struct ResidualReport {
  std::vector<std::string> equations;
  std::vector<LevelNorms> levels;
  double ratio = 1.5;
  std::vector<std::vector<double>> pair_orders_l2;  // [eq][level-pair]
  std::vector<double> fit_order_l2;                 // least-squares over all levels
  std::vector<double> fit_order_linf;
  bool all_rounding = false;  // every norm at rounding level; orders meaningless

  void compute_orders();
};

struct StudyOptions {
  int levels = 3;
  double ratio = 1.5;
  int base_center_step = 60;  // dt = t_center / base_center_step at level 0
  double t_center = 0.18;
  Region region;
  bool conformal = false;  // include Box_{gt} v (irrotational scenarios)
};

/// Runs the scenario at refined grids with dt proportional to h, evaluates all
/// residuals at t_center, and reports norms and observed orders.
ResidualReport convergence_study(const Scenario& base, const StudyOptions& opt);

/// Same measurement applied to manufactured non-solution fields (negative
/// control): residual norms must not decay under refinement.
ResidualReport negative_control_study(const Scenario& base, const StudyOptions& opt);

/// One window of analytic fields (for controls and operator tests).
Window manufactured_window(const Grid& g, double t_center, double dt, const SpacetimeFn& lrho,
                           const std::array<SpacetimeFn, 3>& v, int half = 4);

}  // namespace ewt
