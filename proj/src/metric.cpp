#include "ewt/metric.hpp"

#include <cmath>

namespace ewt {

SpacetimeMetric metric_at(const EquationOfState& eos, double lrho, const std::array<double, 3>& v) {
  SpacetimeMetric m;
  m.cs = eos.sound_speed(lrho);
  if (!(m.cs > 0.0)) fail(ErrorCode::NonHyperbolic, "c_s <= 0");
  m.csp = eos.sound_speed_deriv(lrho);
  m.v = v;

  const double w = 1.0 / (m.cs * m.cs);
  const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  m.g[0][0] = -1.0 + w * v2;
  for (int i = 0; i < 3; ++i) {
    m.g[0][i + 1] = m.g[i + 1][0] = -w * v[i];
    for (int j = 0; j < 3; ++j) m.g[i + 1][j + 1] = (i == j) ? w : 0.0;
  }

  // inverse from the closed form, never by matrix inversion
  const auto B = m.B();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m.ginv[a][b] = -B[a] * B[b];
  for (int i = 1; i < 4; ++i) m.ginv[i][i] += m.cs * m.cs;
  return m;
}

std::array<double, 4> material_vectorfield(const std::array<double, 3>& v) {
  return {1.0, v[0], v[1], v[2]};
}

double det_metric(const SpacetimeMetric& m) {
  // LU with partial pivoting on a copy of g
  std::array<std::array<double, 4>, 4> a = m.g;
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    if (a[c][c] == 0.0) return 0.0;
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int q = c; q < 4; ++q) a[r][q] -= f * a[c][q];
    }
  }
  return det;
}

MetricDerivs metric_derivatives(const EquationOfState& eos, const SpacetimeMetric& m,
                                const StateJet1& state) {
  (void)eos;
  MetricDerivs dg{};
  const double cs = m.cs, csp = m.csp;
  const double w = 1.0 / (cs * cs);
  const double dw_dlrho = -2.0 * csp / (cs * cs * cs);
  const auto& v = m.v;
  const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];

  for (int c = 0; c < 4; ++c) {
    const double dr = state.lrho.d[c];
    const double dw = dw_dlrho * dr;
    double vdv = 0.0;
    for (int a = 0; a < 3; ++a) vdv += v[a] * state.v[a].d[c];
    dg[c][0][0] = dw * v2 + 2.0 * w * vdv;
    for (int i = 0; i < 3; ++i) {
      dg[c][0][i + 1] = dg[c][i + 1][0] = -dw * v[i] - w * state.v[i].d[c];
      for (int j = 0; j < 3; ++j) dg[c][i + 1][j + 1] = (i == j) ? dw : 0.0;
    }
  }
  return dg;
}

ChristoffelSymbols christoffel(const SpacetimeMetric& m, const MetricDerivs& dg) {
  ChristoffelSymbols ch;
  for (int nu = 0; nu < 4; ++nu)
    for (int al = 0; al < 4; ++al)
      for (int be = al; be < 4; ++be) {
        double s = 0.0;
        for (int si = 0; si < 4; ++si)
          s += m.ginv[nu][si] * (dg[al][si][be] + dg[be][si][al] - dg[si][al][be]);
        ch.G[nu][al][be] = ch.G[nu][be][al] = 0.5 * s;
      }
  return ch;
}

double apply_B_jet(const SpacetimeMetric& m, const Jet1& phi) {
  return phi.d[0] + m.v[0] * phi.d[1] + m.v[1] * phi.d[2] + m.v[2] * phi.d[3];
}

double apply_BB_jet(const SpacetimeMetric& m, const Jet2& phi, const StateJet1& state) {
  // BB phi = dtt + (dt v^a) d_a phi + 2 v^a d_a dt phi
  //        + v^a v^b d_a d_b phi + v^a (d_a v^b) d_b phi
  const auto& v = m.v;
  double s = phi.dd[sym4(0, 0)];
  for (int a = 0; a < 3; ++a) {
    s += state.v[a].d[0] * phi.d[a + 1];
    s += 2.0 * v[a] * phi.dd[sym4(0, a + 1)];
    for (int b = 0; b < 3; ++b) {
      s += v[a] * v[b] * phi.dd[sym4(a + 1, b + 1)];
      s += v[a] * state.v[b].d[a + 1] * phi.d[b + 1];
    }
  }
  return s;
}

double wave_operator_cartesian(const SpacetimeMetric& m, const Jet2& phi, const StateJet1& state) {
  const double cs = m.cs, csp = m.csp;
  Jet1 phi1{phi.val, phi.d};
  const double Bphi = apply_B_jet(m, phi1);
  const double Brho = apply_B_jet(m, state.lrho);
  const double BBphi = apply_BB_jet(m, phi, state);

  double lap = 0.0;
  for (int a = 1; a < 4; ++a) lap += phi.dd[sym4(a, a)];

  double divv = 0.0;
  for (int a = 0; a < 3; ++a) divv += state.v[a].d[a + 1];

  const double q = m.inv_contract(state.lrho.d, phi.d);

  return -BBphi + cs * cs * lap + 2.0 * (csp / cs) * Brho * Bphi - divv * Bphi - (csp / cs) * q;
}

}  // namespace ewt
