#include "ewt/reformulation.hpp"

#include <cmath>

#include "ewt/ops.hpp"

namespace ewt {

std::array<double, 3> null_form_Q_velocity(const SpacetimeMetric& m, const StateJet1& j) {
  const double coef = -(1.0 + m.csp / m.cs);
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = coef * m.inv_contract(j.lrho.d, j.v[i].d);
  return out;
}

double null_form_Q_density(const SpacetimeMetric& m, const StateJet1& j) {
  double s = -3.0 * (m.csp / m.cs) * m.inv_contract(j.lrho.d, j.lrho.d);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      s += 2.0 * (j.v[a].d[a + 1] * j.v[b].d[b + 1] - j.v[b].d[a + 1] * j.v[a].d[b + 1]);
  return s;
}

std::array<double, 3> null_form_P_omega(const std::array<std::array<double, 3>, 3>& dpom,
                                        const std::array<std::array<double, 3>, 3>& dv) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
      s += dpom[a][c] * dv[c][b] - dv[a][c] * dpom[c][b];   // eps_{iab} = +1 part
      s -= dpom[b][c] * dv[c][a] - dv[b][c] * dpom[c][a];   // eps_{iba} = -1 part
    }
    out[i] = s;
  }
  return out;
}

namespace {

ScalarField pomega_component(const SimState& s, int i) {
  return specific_vorticity(s.fluid)[i];
}

ScalarField curl_pomega_component(const SimState& s, int i) {
  return curl(specific_vorticity(s.fluid))[i];
}

}  // namespace

VectorField residual_wave_velocity(const EquationOfState& eos, const Window& w) {
  require_window(w, 2);
  const SimState& c = w.center();
  const Grid& g = c.grid();
  const std::size_t n = g.size();

  StateJets sj = state_jets(w);
  VectorField pom = specific_vorticity(c.fluid);
  VectorField cpom = curl(pom);

  VectorField res(g);
  for (int i = 0; i < 3; ++i) {
    Scalar2Jets vj = scalar2_jets(w, [i](const SimState& s) { return s.fluid.vel[i]; });
    for (std::size_t q = 0; q < n; ++q) {
      const SpacetimeMetric m =
          metric_at(eos, c.fluid.lrho[q], {c.fluid.vel[0][q], c.fluid.vel[1][q], c.fluid.vel[2][q]});
      const StateJet1 st = sj.at(c.fluid, q);
      const Jet2 phi = vj.at(q);
      const double box = wave_operator_cartesian(m, phi, st);
      const double er = std::exp(c.fluid.lrho[q]);
      double rot = 0.0;  // eps_{iab} (B v^a) pomega^b
      {
        const int a = (i + 1) % 3, b = (i + 2) % 3;
        const double Ba = apply_B_jet(m, st.v[a]), Bb = apply_B_jet(m, st.v[b]);
        rot = Ba * pom[b][q] - Bb * pom[a][q];
      }
      const double Q = null_form_Q_velocity(m, st)[i];
      res[i][q] = box + m.cs * m.cs * er * cpom[i][q] - 2.0 * er * rot - Q;
    }
  }
  return res;
}

ScalarField residual_wave_density(const EquationOfState& eos, const Window& w) {
  require_window(w, 2);
  const SimState& c = w.center();
  const Grid& g = c.grid();
  StateJets sj = state_jets(w);
  Scalar2Jets rj = scalar2_jets(w, [](const SimState& s) { return s.fluid.lrho; });

  ScalarField res(g);
  for (std::size_t q = 0; q < g.size(); ++q) {
    const SpacetimeMetric m =
        metric_at(eos, c.fluid.lrho[q], {c.fluid.vel[0][q], c.fluid.vel[1][q], c.fluid.vel[2][q]});
    const StateJet1 st = sj.at(c.fluid, q);
    res[q] = wave_operator_cartesian(m, rj.at(q), st) - null_form_Q_density(m, st);
  }
  return res;
}

VectorField residual_transport_vorticity(const EquationOfState& eos, const Window& w) {
  (void)eos;
  require_window(w, 2);
  const SimState& c = w.center();
  const Grid& g = c.grid();
  VectorField pom = specific_vorticity(c.fluid);

  VectorField res(g);
  for (int i = 0; i < 3; ++i) {
    ScalarField dt_pom = window_time_deriv1(w, [i](const SimState& s) { return pomega_component(s, i); });
    VectorField dpom_i = gradient(pom[i]);
    VectorField dv_i = gradient(c.fluid.vel[i]);
    for (std::size_t q = 0; q < g.size(); ++q) {
      double B = dt_pom[q];
      double stretch = 0.0;
      for (int a = 0; a < 3; ++a) {
        B += c.fluid.vel[a][q] * dpom_i[a][q];
        stretch += pom[a][q] * dv_i[a][q];
      }
      res[i][q] = B - stretch;
    }
  }
  return res;
}

ScalarField residual_div_identity(const EquationOfState& eos, const FluidState& s) {
  (void)eos;
  VectorField pom = specific_vorticity(s);
  ScalarField div = divergence(pom);
  VectorField dlrho = gradient(s.lrho);
  ScalarField res(s.grid());
  for (std::size_t q = 0; q < res.size(); ++q) {
    double adv = 0.0;
    for (int a = 0; a < 3; ++a) adv += pom[a][q] * dlrho[a][q];
    res[q] = div[q] + adv;
  }
  return res;
}

VectorField residual_curl_transport(const EquationOfState& eos, const Window& w) {
  (void)eos;
  require_window(w, 2);
  const SimState& c = w.center();
  const Grid& g = c.grid();
  const std::size_t n = g.size();

  VectorField pom = specific_vorticity(c.fluid);
  VectorField cpom = curl(pom);
  ScalarField divpom = divergence(pom);

  // spatial jets of pomega and v for the null form P
  std::array<VectorField, 3> dpom{gradient(pom[0]), gradient(pom[1]), gradient(pom[2])};
  std::array<VectorField, 3> dv{gradient(c.fluid.vel[0]), gradient(c.fluid.vel[1]),
                                gradient(c.fluid.vel[2])};

  VectorField res(g);
  for (int i = 0; i < 3; ++i) {
    ScalarField dt_c =
        window_time_deriv1(w, [i](const SimState& s) { return curl_pomega_component(s, i); });
    VectorField dci = gradient(cpom[i]);
    for (std::size_t q = 0; q < n; ++q) {
      double B = dt_c[q];
      for (int a = 0; a < 3; ++a) B += c.fluid.vel[a][q] * dci[a][q];
      const double er = std::exp(c.fluid.lrho[q]);
      double adv = 0.0;
      for (int a = 0; a < 3; ++a) adv += pom[a][q] * dpom[i][a][q];
      std::array<std::array<double, 3>, 3> dpq, dvq;
      for (int a = 0; a < 3; ++a)
        for (int cc = 0; cc < 3; ++cc) {
          dpq[a][cc] = dpom[cc][a][q];
          dvq[a][cc] = dv[cc][a][q];
        }
      const double P = null_form_P_omega(dpq, dvq)[i];
      res[i][q] = B - (er * adv - er * pom[i][q] * divpom[q] + P);
    }
  }
  return res;
}

VectorField residual_conformal_irrotational(const EquationOfState& eos, const Window& w) {
  require_window(w, 4);
  VectorField res(w.center().grid());
  for (int i = 0; i < 3; ++i) {
    WaveOpInput in = lattice_from_window(w, [i](const SimState& s) { return s.fluid.vel[i]; });
    res[i] = wave_operator_divergence_form(eos, in, WaveMetric::Conformal);
  }
  return res;
}

bool Region::contains(const Grid& g, std::size_t q) const {
  if (!x1_range) return true;
  const int i = int(q % g.n1);
  const double x = g.x(0, i);
  return x >= x1_range->first && x <= x1_range->second;
}

Norms field_norms(const ScalarField& f, const Region& r) {
  Norms n;
  double sum = 0.0;
  std::size_t cnt = 0;
  for (std::size_t q = 0; q < f.size(); ++q) {
    if (!r.contains(f.grid, q)) continue;
    const double a = std::abs(f[q]);
    n.linf = std::max(n.linf, a);
    sum += a * a;
    ++cnt;
  }
  n.l2 = cnt ? std::sqrt(sum * f.grid.cell_volume()) : 0.0;
  return n;
}

Norms vector_norms(const VectorField& f, const Region& r) {
  Norms n;
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Norms ni = field_norms(f[i], r);
    n.linf = std::max(n.linf, ni.linf);
    sum += ni.l2 * ni.l2;
  }
  n.l2 = std::sqrt(sum);
  return n;
}

void ResidualReport::compute_orders() {
  const int ne = int(equations.size());
  const int nl = int(levels.size());
  pair_orders_l2.assign(ne, {});
  fit_order_l2.assign(ne, 0.0);
  fit_order_linf.assign(ne, 0.0);
  all_rounding = true;
  for (int e = 0; e < ne; ++e)
    for (int l = 0; l < nl; ++l)
      if (levels[l].l2[e] > 1e-12) all_rounding = false;
  if (nl < 2) return;

  auto fit = [&](auto getter) {
    std::vector<double> out(ne, 0.0);
    for (int e = 0; e < ne; ++e) {
      // least squares of log(norm) against log(h)
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      int m = 0;
      for (int l = 0; l < nl; ++l) {
        const double v = getter(levels[l], e);
        if (!(v > 0.0)) continue;
        const double x = std::log(levels[l].h1), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
      }
      out[e] = m >= 2 ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
    }
    return out;
  };
  fit_order_l2 = fit([](const LevelNorms& l, int e) { return l.l2[e]; });
  fit_order_linf = fit([](const LevelNorms& l, int e) { return l.linf[e]; });
  for (int e = 0; e < ne; ++e) {
    pair_orders_l2[e].resize(nl - 1);
    for (int l = 0; l + 1 < nl; ++l) {
      const double r = levels[l].h1 / levels[l + 1].h1;
      pair_orders_l2[e][l] =
          std::log(levels[l].l2[e] / std::max(levels[l + 1].l2[e], 1e-300)) / std::log(r);
    }
  }
}

namespace {

std::vector<std::string> equation_names(bool conformal) {
  std::vector<std::string> eq = {"wave_velocity", "wave_density", "vorticity_transport",
                                 "div_identity", "curl_transport"};
  if (conformal) eq.push_back("conformal_wave");
  return eq;
}

LevelNorms measure_window(const EquationOfState& eos, const Window& win, const Region& region,
                          bool conformal) {
  const Grid& g = win.center().grid();
  LevelNorms ln;
  ln.n1 = g.n1;
  ln.n2 = g.n2;
  ln.n3 = g.n3;
  ln.h1 = g.h(0);
  ln.dt = win.dt;
  auto push = [&](const Norms& n) {
    ln.l2.push_back(n.l2);
    ln.linf.push_back(n.linf);
  };
  push(vector_norms(residual_wave_velocity(eos, win), region));
  push(field_norms(residual_wave_density(eos, win), region));
  push(vector_norms(residual_transport_vorticity(eos, win), region));
  push(field_norms(residual_div_identity(eos, win.center().fluid), region));
  push(vector_norms(residual_curl_transport(eos, win), region));
  if (conformal) push(vector_norms(residual_conformal_irrotational(eos, win), region));
  return ln;
}

}  // namespace

ResidualReport convergence_study(const Scenario& base, const StudyOptions& opt) {
  ResidualReport rep;
  rep.equations = equation_names(opt.conformal);
  rep.ratio = opt.ratio;
  const int half = opt.conformal ? 4 : 2;

  for (int lvl = 0; lvl < opt.levels; ++lvl) {
    const double scale = std::pow(opt.ratio, lvl);
    Scenario sc = base;
    sc.grid = base.grid.refined(scale);
    const int center = int(std::lround(opt.base_center_step * scale));
    const double dt = opt.t_center / center;
    sc.t_max = dt * (center + half);

    SimState init = initial_data_nearly_simple_plane_wave(sc);
    IntegrateOptions io;
    io.fixed_steps = center + half;
    io.windows.push_back(WindowSpec{center, half});
    RunResult run = integrate(sc, init, io);
    if (run.stop != StopReason::TMax)
      fail(ErrorCode::RangeError,
           std::string("convergence level run stopped early: ") + to_string(run.stop));
    rep.levels.push_back(measure_window(sc.eos, run.windows.at(0), opt.region, opt.conformal));
  }
  rep.compute_orders();
  return rep;
}

Window manufactured_window(const Grid& g, double t_center, double dt, const SpacetimeFn& lrho,
                           const std::array<SpacetimeFn, 3>& v, int half) {
  Window w;
  w.dt = dt;
  w.center_step = half;
  w.first_step = 0;
  for (int l = -half; l <= half; ++l) {
    const double t = t_center + l * dt;
    SimState s;
    s.fluid = FluidState(g);
    s.fluid.t = t;
    for (int k = 0; k < g.n3; ++k)
      for (int j = 0; j < g.n2; ++j)
        for (int i = 0; i < g.n1; ++i) {
          const std::size_t q = g.index(i, j, k);
          const double x1 = g.x(0, i), x2 = g.x(1, j), x3 = g.x(2, k);
          s.fluid.lrho[q] = lrho(t, x1, x2, x3);
          for (int a = 0; a < 3; ++a) s.fluid.vel[a][q] = v[a](t, x1, x2, x3);
        }
    w.snaps.push_back(std::move(s));
  }
  return w;
}

ResidualReport negative_control_study(const Scenario& base, const StudyOptions& opt) {
  // smooth, time-dependent fields that do NOT solve the system
  const SpacetimeFn lrho = [](double t, double x1, double x2, double x3) {
    return 0.2 * std::sin(2.0 * M_PI * (x1 - 0.3 * t)) * std::cos(2.0 * M_PI * x2) +
           0.05 * std::cos(2.0 * M_PI * x3);
  };
  const std::array<SpacetimeFn, 3> v = {
      [](double t, double x1, double x2, double) {
        return 0.25 * std::cos(2.0 * M_PI * (x1 + 0.2 * t)) * std::sin(2.0 * M_PI * x2);
      },
      [](double t, double x1, double, double x3) {
        return 0.15 * std::sin(2.0 * M_PI * (x3 - t)) + 0.1 * std::sin(2.0 * M_PI * x1);
      },
      [](double t, double, double x2, double x3) {
        return 0.2 * std::cos(2.0 * M_PI * (x2 + 0.5 * t)) * std::sin(2.0 * M_PI * x3);
      }};

  ResidualReport rep;
  rep.equations = equation_names(opt.conformal);
  rep.ratio = opt.ratio;
  const int half = opt.conformal ? 4 : 2;
  for (int lvl = 0; lvl < opt.levels; ++lvl) {
    const double scale = std::pow(opt.ratio, lvl);
    const Grid g = base.grid.refined(scale);
    const int center = int(std::lround(opt.base_center_step * scale));
    const double dt = opt.t_center / center;
    Window win = manufactured_window(g, opt.t_center, dt, lrho, v, half);
    rep.levels.push_back(measure_window(base.eos, win, opt.region, opt.conformal));
  }
  rep.compute_orders();
  return rep;
}

}  // namespace ewt
