#pragma once

#include <functional>

#include "ewt/metric.hpp"
#include "ewt/solver.hpp"

namespace ewt {

/// Derived-field evaluator on one snapshot (e.g. specific vorticity).
using FieldMaker = std::function<ScalarField(const SimState&)>;

/// InsufficientSnapshots unless the window holds center +- half_needed.
void require_window(const Window& w, int half_needed);

/// 4th-order centered time derivatives of a derived field at the window
/// center, from 5 consecutive snapshots. Never uses the evolution equations.
ScalarField window_time_deriv1(const Window& w, const FieldMaker& maker);
ScalarField window_time_deriv2(const Window& w, const FieldMaker& maker);

/// First-order spacetime jets of (lrho, v) at every cell of the center snapshot.
struct StateJets {
  ScalarField dt_lrho;
  VectorField grad_lrho;
  std::array<ScalarField, 3> dt_v;
  std::array<VectorField, 3> grad_v;

  StateJet1 at(const FluidState& center, std::size_t q) const {
    StateJet1 j;
    j.lrho.val = center.lrho[q];
    j.lrho.d = {dt_lrho[q], grad_lrho[0][q], grad_lrho[1][q], grad_lrho[2][q]};
    for (int i = 0; i < 3; ++i) {
      j.v[i].val = center.vel[i][q];
      j.v[i].d = {dt_v[i][q], grad_v[i][0][q], grad_v[i][1][q], grad_v[i][2][q]};
    }
    return j;
  }
};
StateJets state_jets(const Window& w);

/// Second-order spacetime jets of one derived scalar at the window center.
struct Scalar2Jets {
  ScalarField f, dt, dtt;
  VectorField grad, grad_dt;
  std::array<ScalarField, 6> hess;  // spatial symmetric: 11,12,13,22,23,33

  static constexpr int sym3(int a, int b) {  // a,b in 0..2
    if (a > b) std::swap(a, b);
    return a * 3 + b - a * (a + 1) / 2;
  }
  Jet2 at(std::size_t q) const {
    Jet2 j;
    j.val = f[q];
    j.d = {dt[q], grad[0][q], grad[1][q], grad[2][q]};
    j.dd[sym4(0, 0)] = dtt[q];
    for (int a = 1; a < 4; ++a) j.dd[sym4(0, a)] = grad_dt[a - 1][q];
    for (int a = 1; a < 4; ++a)
      for (int b = a; b < 4; ++b) j.dd[sym4(a, b)] = hess[sym3(a - 1, b - 1)][q];
    return j;
  }
};
Scalar2Jets scalar2_jets(const Window& w, const FieldMaker& maker);

}  // namespace ewt
