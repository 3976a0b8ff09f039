#pragma once

#include <array>
#include <functional>

#include "ewt/eos.hpp"
#include "ewt/grid.hpp"
#include "ewt/solver.hpp"

namespace ewt {

/// Which Lorentzian metric weights the divergence-form operator:
///   Acoustical: sqrt|det g| g^{-1} = -c_s^{-3} B(x)B + c_s^{-1} sum_a d_a(x)d_a
///   Conformal:  gt = exp(lrho) c_s g (irrotational-case rescaling)
enum class WaveMetric { Acoustical, Conformal };

/// Uniformly spaced space-time lattice of scalar data: 9 time levels
/// (center +- 4) of the state and of the scalar phi, enough to difference the
/// weighted flux to 4th order in both time and space.
struct WaveOpInput {
  double dt = 0.0;
  std::array<FluidState, 9> state;
  std::array<ScalarField, 9> phi;

  const Grid& grid() const { return state[4].grid(); }
};

/// Box_g phi at the center level by finite-differencing the weighted flux
/// (1/sqrt|det g|) d_alpha { sqrt|det g| (g^{-1})^{alpha beta} d_beta phi }.
ScalarField wave_operator_divergence_form(const EquationOfState& eos, const WaveOpInput& in,
                                          WaveMetric metric = WaveMetric::Acoustical);

/// Builds the 9-level lattice from analytic functions of (t, x1, x2, x3).
using SpacetimeFn = std::function<double(double, double, double, double)>;
WaveOpInput sample_spacetime(const Grid& g, double t0, double dt, const SpacetimeFn& lrho,
                             const std::array<SpacetimeFn, 3>& v, const SpacetimeFn& phi);

/// Builds the lattice from 9 consecutive trajectory snapshots.
WaveOpInput lattice_from_window(const Window& w, const std::function<ScalarField(const SimState&)>& phi);

}  // namespace ewt
