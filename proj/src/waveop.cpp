#include "ewt/waveop.hpp"

#include <cmath>

#include "ewt/ops.hpp"
#include "ewt/window.hpp"

namespace ewt {

namespace {

// 4th-order first derivative across 5 equispaced values
inline double d5(const double* f, double inv12h) {
  return (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) * inv12h;
}

}  // namespace

ScalarField wave_operator_divergence_form(const EquationOfState& eos, const WaveOpInput& in,
                                          WaveMetric metric) {
  const Grid& g = in.grid();
  const std::size_t n = g.size();
  const double inv12dt = 1.0 / (12.0 * in.dt);

  // B phi and the time flux F^0 on the five central levels
  std::array<ScalarField, 5> F0;
  std::array<ScalarField, 5> Bphi;
  for (int l = -2; l <= 2; ++l) {
    const int idx = l + 4;
    const FluidState& s = in.state[idx];
    ScalarField dtphi(g);
    for (std::size_t q = 0; q < n; ++q) {
      const double vals[5] = {in.phi[idx - 2][q], in.phi[idx - 1][q], in.phi[idx][q],
                              in.phi[idx + 1][q], in.phi[idx + 2][q]};
      dtphi[q] = d5(vals, inv12dt);
    }
    VectorField dphi = gradient(in.phi[idx]);
    ScalarField bp(g), f0(g);
    for (std::size_t q = 0; q < n; ++q) {
      double bv = dtphi[q];
      for (int a = 0; a < 3; ++a) bv += s.vel[a][q] * dphi[a][q];
      bp[q] = bv;
      const double cs = eos.sound_speed(s.lrho[q]);
      const double w0 = metric == WaveMetric::Acoustical
                            ? -1.0 / (cs * cs * cs)
                            : -std::exp(s.lrho[q]) / (cs * cs);
      f0[q] = w0 * bv;
    }
    F0[l + 2] = std::move(f0);
    if (l == 0) Bphi[2] = std::move(bp);
  }

  // dt F^0 at the center
  ScalarField div_flux(g);
  for (std::size_t q = 0; q < n; ++q) {
    const double vals[5] = {F0[0][q], F0[1][q], F0[2][q], F0[3][q], F0[4][q]};
    div_flux[q] = d5(vals, inv12dt);
  }

  // spatial fluxes F^a at the center, then their divergence
  const FluidState& c = in.state[4];
  VectorField dphi_c = gradient(in.phi[4]);
  for (int a = 0; a < 3; ++a) {
    ScalarField Fa(g);
    for (std::size_t q = 0; q < n; ++q) {
      const double cs = eos.sound_speed(c.lrho[q]);
      if (metric == WaveMetric::Acoustical)
        Fa[q] = -c.vel[a][q] * Bphi[2][q] / (cs * cs * cs) + dphi_c[a][q] / cs;
      else
        Fa[q] = std::exp(c.lrho[q]) * (-c.vel[a][q] * Bphi[2][q] / (cs * cs) + dphi_c[a][q]);
    }
    if (!g.active(a)) continue;
    ScalarField dFa = derivative(Fa, a, 1);
    for (std::size_t q = 0; q < n; ++q) div_flux[q] += dFa[q];
  }

  // 1/sqrt|det| factor: c_s^3 (acoustical), c_s exp(-2 lrho) (conformal)
  ScalarField out(g);
  for (std::size_t q = 0; q < n; ++q) {
    const double cs = eos.sound_speed(c.lrho[q]);
    const double norm =
        metric == WaveMetric::Acoustical ? cs * cs * cs : cs * std::exp(-2.0 * c.lrho[q]);
    out[q] = norm * div_flux[q];
  }
  return out;
}

WaveOpInput sample_spacetime(const Grid& g, double t0, double dt, const SpacetimeFn& lrho,
                             const std::array<SpacetimeFn, 3>& v, const SpacetimeFn& phi) {
  WaveOpInput in;
  in.dt = dt;
  for (int l = -4; l <= 4; ++l) {
    const double t = t0 + l * dt;
    FluidState s(g);
    s.t = t;
    ScalarField p(g);
    for (int k = 0; k < g.n3; ++k)
      for (int j = 0; j < g.n2; ++j)
        for (int i = 0; i < g.n1; ++i) {
          const std::size_t q = g.index(i, j, k);
          const double x1 = g.x(0, i), x2 = g.x(1, j), x3 = g.x(2, k);
          s.lrho[q] = lrho(t, x1, x2, x3);
          for (int a = 0; a < 3; ++a) s.vel[a][q] = v[a](t, x1, x2, x3);
          p[q] = phi(t, x1, x2, x3);
        }
    in.state[l + 4] = std::move(s);
    in.phi[l + 4] = std::move(p);
  }
  return in;
}

WaveOpInput lattice_from_window(const Window& w,
                                const std::function<ScalarField(const SimState&)>& phi) {
  require_window(w, 4);
  const int c = w.center_index();
  WaveOpInput in;
  in.dt = w.dt;
  for (int l = -4; l <= 4; ++l) {
    in.state[l + 4] = w.snaps[c + l].fluid;
    in.phi[l + 4] = phi(w.snaps[c + l]);
  }
  return in;
}

}  // namespace ewt
