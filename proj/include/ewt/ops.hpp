#pragma once

#include "ewt/grid.hpp"

namespace ewt {

/// Fully antisymmetric symbol, eps_123 = +1. Indices in {1,2,3}.
int levi_civita(int i, int j, int k);

/// d^order f / d(x^axis)^order on the periodic grid, axis in {0,1,2},
/// order in {1,2}. Uses the grid's per-axis scheme (4th-order centered
/// differences or trigonometric spectral). Returns zero on inactive axes.
void derivative_into(const ScalarField& f, int axis, int order, ScalarField& out);
ScalarField derivative(const ScalarField& f, int axis, int order = 1);

ScalarField divergence(const VectorField& V);
VectorField curl(const VectorField& V);
VectorField gradient(const ScalarField& f);

/// curl(v) / exp(lrho)
VectorField specific_vorticity(const FluidState& s);

/// B f = dt_f + v^a d_a f, with the time derivative supplied externally
/// (solver RHS or snapshot differencing).
ScalarField apply_B(const ScalarField& f, const ScalarField& dt_f, const FluidState& s);

/// Exponential low-pass filter acting on the top (1-cut) fraction of modes
/// of every active axis. Used by the optional solver de-aliasing stage.
void spectral_filter(ScalarField& f, double cut = 0.9, double alpha = 36.0, int p = 8);

}  // namespace ewt
