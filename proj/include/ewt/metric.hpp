#pragma once

#include <array>

#include "ewt/eos.hpp"

namespace ewt {

/// First-order spacetime jet of a scalar at a point; d[0] is the time derivative.
struct Jet1 {
  double val = 0.0;
  std::array<double, 4> d{};
};

/// Second-order jet; dd stores the symmetric Hessian, see sym4().
struct Jet2 {
  double val = 0.0;
  std::array<double, 4> d{};
  std::array<double, 10> dd{};
};

/// Index into the packed symmetric 4x4 second-derivative storage.
constexpr int sym4(int a, int b) {
  if (a > b) std::swap(a, b);
  // (0,0)..(0,3),(1,1)..(1,3),(2,2),(2,3),(3,3)
  return a * 4 + b - a * (a + 1) / 2;
}

/// First-order jet of the fluid unknowns at a point.
struct StateJet1 {
  Jet1 lrho;
  std::array<Jet1, 3> v;
};

/// Acoustical metric, its closed-form inverse, and the state at a point.
/// g = -dt (x) dt + c_s^{-2} sum_a (dx^a - v^a dt) (x) (dx^a - v^a dt)
/// g^{-1} = -B (x) B + c_s^2 sum_a d_a (x) d_a, so (g^{-1})^{00} = -1 exactly.
struct SpacetimeMetric {
  std::array<std::array<double, 4>, 4> g{};
  std::array<std::array<double, 4>, 4> ginv{};
  double cs = 1.0;
  double csp = 0.0;
  std::array<double, 3> v{};

  std::array<double, 4> B() const { return {1.0, v[0], v[1], v[2]}; }
  double inner(const std::array<double, 4>& a, const std::array<double, 4>& b) const {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += g[i][j] * a[i] * b[j];
    return s;
  }
  /// (g^{-1})^{ab} da_a db_b for one-forms da, db.
  double inv_contract(const std::array<double, 4>& da, const std::array<double, 4>& db) const {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += ginv[i][j] * da[i] * db[j];
    return s;
  }
};

SpacetimeMetric metric_at(const EquationOfState& eos, double lrho, const std::array<double, 3>& v);

/// B = (1, v^1, v^2, v^3): future-directed, g(B,B) = -1, g(B, d_i) = 0.
std::array<double, 4> material_vectorfield(const std::array<double, 3>& v);

/// Numerical determinant of g_{ab} (LU); equals -c_s^{-6}.
double det_metric(const SpacetimeMetric& m);

struct ChristoffelSymbols {
  // G[nu][alpha][beta], symmetric in (alpha, beta)
  std::array<std::array<std::array<double, 4>, 4>, 4> G{};
};

/// dg[gamma][alpha][beta] = d_gamma g_{alpha beta}, assembled analytically from
/// the state jet through c_s(lrho).
using MetricDerivs = std::array<std::array<std::array<double, 4>, 4>, 4>;
MetricDerivs metric_derivatives(const EquationOfState& eos, const SpacetimeMetric& m,
                                const StateJet1& state);

ChristoffelSymbols christoffel(const SpacetimeMetric& m, const MetricDerivs& dg);

/// Box_g phi in Cartesian coordinates:
///   -BB phi + c_s^2 lap phi + 2 c_s^{-1} c_s' (B lrho)(B phi)
///   - (div v)(B phi) - c_s^{-1} c_s' (g^{-1})^{ab} (d_a lrho)(d_b phi)
double wave_operator_cartesian(const SpacetimeMetric& m, const Jet2& phi, const StateJet1& state);

/// B phi and BB phi expanded through the jet (time derivatives included).
double apply_B_jet(const SpacetimeMetric& m, const Jet1& phi);
double apply_BB_jet(const SpacetimeMetric& m, const Jet2& phi, const StateJet1& state);

}  // namespace ewt
