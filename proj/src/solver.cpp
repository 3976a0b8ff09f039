#include "ewt/solver.hpp"

#include <cmath>
#include <random>

#include "ewt/ops.hpp"

namespace ewt {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::TMax: return "t_max";
    case StopReason::StepLimit: return "step_limit";
    case StopReason::MuStop: return "mu_stop";
    case StopReason::BlowupGuard: return "blowup_guard";
    case StopReason::NanDetected: return "nan_detected";
    case StopReason::DegenerateGradient: return "degenerate_gradient";
  }
  return "unknown";
}

EulerRhs euler_rhs(const EquationOfState& eos, const FluidState& s) {
  const Grid& g = s.grid();
  EulerRhs r{ScalarField(g), VectorField(g)};

  VectorField dlrho = gradient(s.lrho);
  std::array<VectorField, 3> dv{VectorField(g), VectorField(g), VectorField(g)};
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) derivative_into(s.vel[i], a, 1, dv[i][a]);

  const std::size_t n = g.size();
  std::vector<double> cs2(n);
  for (std::size_t q = 0; q < n; ++q) {
    const double cs = eos.sound_speed(s.lrho[q]);
    cs2[q] = cs * cs;
  }
  for (std::size_t q = 0; q < n; ++q) {
    double adv = 0.0, div = 0.0;
    for (int a = 0; a < 3; ++a) {
      adv += s.vel[a][q] * dlrho[a][q];
      div += dv[a][a][q];
    }
    r.dt_lrho[q] = -adv - div;
  }
  for (int i = 0; i < 3; ++i)
    for (std::size_t q = 0; q < n; ++q) {
      double adv = 0.0;
      for (int a = 0; a < 3; ++a) adv += s.vel[a][q] * dv[i][a][q];
      r.dt_v[i][q] = -adv - cs2[q] * dlrho[i][q];
    }
  return r;
}

double max_characteristic_speed(const EquationOfState& eos, const FluidState& s) {
  double m = 0.0;
  for (std::size_t q = 0; q < s.lrho.size(); ++q) {
    const double vv = std::sqrt(s.vel[0][q] * s.vel[0][q] + s.vel[1][q] * s.vel[1][q] +
                                s.vel[2][q] * s.vel[2][q]);
    m = std::max(m, vv + eos.sound_speed(s.lrho[q]));
  }
  return m;
}

SimState initial_data_nearly_simple_plane_wave(const Scenario& sc) {
  const Grid& g = sc.grid;
  SimState st;
  st.fluid = FluidState(g);
  st.has_eikonal = sc.eikonal;
  if (sc.eikonal) {
    st.w = ScalarField(g);
    st.xi1 = ScalarField(g);
    st.xi2 = ScalarField(g);
  }

  SimpleWave wave;
  wave.eos = sc.eos;
  wave.profile.kind = sc.init.profile;
  wave.profile.amplitude = sc.init.delta;
  wave.profile.L = g.L1;
  wave.profile.center = sc.init.bump_center;
  wave.profile.width = sc.init.bump_width;

  // plane-symmetric R_- = 0 wave along x^1
  std::vector<double> lrho_line(g.n1), v1_line(g.n1);
  for (int i = 0; i < g.n1; ++i) {
    const double R = sc.init.delta == 0.0 ? 0.0 : wave.profile.value(g.x(0, i));
    wave.state_of_R(R, lrho_line[i], v1_line[i]);
  }

  // perturbation phases from the scenario seed
  std::mt19937_64 rng(sc.seed);
  auto unit = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
  const double ph1 = sc.seed ? 2.0 * M_PI * unit() : 0.0;
  const double ph2 = sc.seed ? 2.0 * M_PI * unit() : 0.0;

  const double eps = sc.init.epsilon;
  const bool pert = sc.init.perturbation != InitialDataParams::Perturbation::None && eps != 0.0;
  const bool vort = sc.init.perturbation == InitialDataParams::Perturbation::Vortical;
  const double k2 = 2.0 * M_PI / g.L2, k3 = 2.0 * M_PI / g.L3;

  for (int k = 0; k < g.n3; ++k)
    for (int j = 0; j < g.n2; ++j) {
      const double x2 = g.x(1, j), x3 = g.x(2, k);
      for (int i = 0; i < g.n1; ++i) {
        const std::size_t q = g.index(i, j, k);
        double lr = lrho_line[i], v1 = v1_line[i], v2 = 0.0, v3 = 0.0;
        if (pert && g.active(1)) {
          // gradient perturbation: v += grad(chi), curl-free by construction
          lr += eps * std::sin(k2 * x2 + ph1);
          v2 += eps * std::sin(k2 * x2 + ph1);
        }
        if (pert && vort) {
          // curl-carrying component, x^1-independent, |curl| = eps
          if (g.active(2))
            v2 += (eps / k3) * std::sin(k3 * x3 + ph2);
          else if (g.active(1))
            v1 += (eps / k2) * std::sin(k2 * x2 + ph2);
        }
        st.fluid.lrho[q] = lr;
        st.fluid.vel[0][q] = v1;
        st.fluid.vel[1][q] = v2;
        st.fluid.vel[2][q] = v3;
      }
    }
  return st;
}

ConstrainedData complete_constrained_data(const FluidState& s0, const EquationOfState& eos) {
  ConstrainedData c;
  c.pomega0 = specific_vorticity(s0);
  EulerRhs r = euler_rhs(eos, s0);
  c.dt_lrho0 = std::move(r.dt_lrho);
  c.dt_v0 = std::move(r.dt_v);
  return c;
}

namespace {

// preallocated derivative buffers for the combined fluid + eikonal RHS
struct Workspace {
  VectorField dlrho;
  std::array<VectorField, 3> dv;
  std::vector<double> cs;
  VectorField du;
  std::vector<double> gu;
  VectorField dxi1, dxi2;

  explicit Workspace(const Grid& g)
      : dlrho(g),
        dv{VectorField(g), VectorField(g), VectorField(g)},
        cs(g.size()),
        du(g),
        gu(g.size()),
        dxi1(g),
        dxi2(g) {}
};

bool compute_rhs(const Scenario& sc, const SimState& y, SimState& dy, Workspace& ws) {
  const Grid& g = y.grid();
  const std::size_t n = g.size();

  for (int a = 0; a < 3; ++a) derivative_into(y.fluid.lrho, a, 1, ws.dlrho[a]);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) derivative_into(y.fluid.vel[i], a, 1, ws.dv[i][a]);

  const bool poly = sc.eos.family == EquationOfState::Family::Polytropic;
  const double cbar = sc.eos.sound_speed0();
  const double kexp = poly ? 0.5 * (sc.eos.gamma - 1.0) : -1.0;
  for (std::size_t q = 0; q < n; ++q) ws.cs[q] = cbar * std::exp(kexp * y.fluid.lrho[q]);

  const auto& v = y.fluid.vel;
  parallel_for_slabs(g.n3, [&](int k0, int k1) {
    const std::size_t q0 = g.index(0, 0, k0), q1 = g.index(0, 0, k1);
    for (std::size_t q = q0; q < q1; ++q) {
      double adv = 0.0, div = 0.0;
      for (int a = 0; a < 3; ++a) {
        adv += v[a][q] * ws.dlrho[a][q];
        div += ws.dv[a][a][q];
      }
      dy.fluid.lrho[q] = -adv - div;
      for (int i = 0; i < 3; ++i) {
        double ai = 0.0;
        for (int a = 0; a < 3; ++a) ai += v[a][q] * ws.dv[i][a][q];
        dy.fluid.vel[i][q] = -ai - ws.cs[q] * ws.cs[q] * ws.dlrho[i][q];
      }
    }
  });

  if (!y.has_eikonal) return true;

  for (int a = 0; a < 3; ++a) derivative_into(y.w, a, 1, ws.du[a]);
  for (std::size_t q = 0; q < n; ++q) ws.du[0][q] -= 1.0;  // u = 1 - x^1 + w
  bool ok = true;
  for (std::size_t q = 0; q < n; ++q) {
    const double g2 =
        ws.du[0][q] * ws.du[0][q] + ws.du[1][q] * ws.du[1][q] + ws.du[2][q] * ws.du[2][q];
    ws.gu[q] = std::sqrt(g2);
    if (!(ws.gu[q] > 1e-8)) ok = false;
  }
  if (!ok) return false;

  for (int a = 0; a < 3; ++a) derivative_into(y.xi1, a, 1, ws.dxi1[a]);
  for (int a = 0; a < 3; ++a) derivative_into(y.xi2, a, 1, ws.dxi2[a]);

  parallel_for_slabs(g.n3, [&](int k0, int k1) {
    const std::size_t q0 = g.index(0, 0, k0), q1 = g.index(0, 0, k1);
    for (std::size_t q = q0; q < q1; ++q) {
      // outgoing Hamilton-Jacobi branch: dt_u = -v.grad u + c_s |grad u| > 0
      double vdu = 0.0;
      for (int a = 0; a < 3; ++a) vdu += v[a][q] * ws.du[a][q];
      dy.w[q] = -vdu + ws.cs[q] * ws.gu[q];
      // theta advection speed c^i = L^i / L^0 = v^i - c_s du_i / |grad u|
      double c1 = 0.0, c2 = 0.0;
      std::array<double, 3> cvec;
      for (int a = 0; a < 3; ++a) cvec[a] = v[a][q] - ws.cs[q] * ws.du[a][q] / ws.gu[q];
      for (int a = 0; a < 3; ++a) {
        c1 += cvec[a] * ws.dxi1[a][q];
        c2 += cvec[a] * ws.dxi2[a][q];
      }
      dy.xi1[q] = -c1 - cvec[1];
      dy.xi2[q] = -c2 - cvec[2];
    }
  });
  return true;
}

void for_each_field(SimState& s, const std::function<void(ScalarField&)>& f) {
  f(s.fluid.lrho);
  for (int i = 0; i < 3; ++i) f(s.fluid.vel[i]);
  if (s.has_eikonal) {
    f(s.w);
    f(s.xi1);
    f(s.xi2);
  }
}

void state_axpy(SimState& dst, double a, const SimState& src) {
  auto sit = [&](ScalarField& d, const ScalarField& s) {
    for (std::size_t q = 0; q < d.size(); ++q) d[q] += a * s[q];
  };
  sit(dst.fluid.lrho, src.fluid.lrho);
  for (int i = 0; i < 3; ++i) sit(dst.fluid.vel[i], src.fluid.vel[i]);
  if (dst.has_eikonal) {
    sit(dst.w, src.w);
    sit(dst.xi1, src.xi1);
    sit(dst.xi2, src.xi2);
  }
}

void state_set_sum(SimState& dst, const SimState& base, double a, const SimState& k) {
  auto sit = [&](ScalarField& d, const ScalarField& b, const ScalarField& s) {
    for (std::size_t q = 0; q < d.size(); ++q) d[q] = b[q] + a * s[q];
  };
  sit(dst.fluid.lrho, base.fluid.lrho, k.fluid.lrho);
  for (int i = 0; i < 3; ++i) sit(dst.fluid.vel[i], base.fluid.vel[i], k.fluid.vel[i]);
  if (dst.has_eikonal) {
    sit(dst.w, base.w, k.w);
    sit(dst.xi1, base.xi1, k.xi1);
    sit(dst.xi2, base.xi2, k.xi2);
  }
}

bool has_nan(const SimState& s) {
  for (double x : s.fluid.lrho.v)
    if (!std::isfinite(x)) return true;
  for (double x : s.fluid.vel[0].v)
    if (!std::isfinite(x)) return true;
  return false;
}

// mu = 1 / (c_s |grad u|); minimum and argmin over the grid
MuSample mu_min_sample(const Scenario& sc, const SimState& s) {
  const Grid& g = s.grid();
  ScalarField du1 = derivative(s.w, 0, 1), du2 = derivative(s.w, 1, 1), du3 = derivative(s.w, 2, 1);
  MuSample ms;
  ms.t = s.t();
  double best = 0.0;
  for (std::size_t q = 0; q < g.size(); ++q) {
    const double a = du1[q] - 1.0, b = du2[q], c = du3[q];
    const double gu = std::sqrt(a * a + b * b + c * c);
    const double cs = sc.eos.sound_speed(s.fluid.lrho[q]);
    const double mu = 1.0 / (cs * gu);
    if (q == 0 || mu < best) {
      best = mu;
      ms.argmin = q;
    }
  }
  ms.mu_min = best;
  return ms;
}

}  // namespace

RunResult integrate(const Scenario& sc, const SimState& initial, const IntegrateOptions& opt) {
  const Grid& g = initial.grid();
  RunResult res;
  res.max_speed0 = max_characteristic_speed(sc.eos, initial.fluid);

  double dt;
  int max_steps;
  if (opt.fixed_steps) {
    max_steps = *opt.fixed_steps;
    dt = sc.t_max / max_steps;
  } else if (opt.fixed_dt) {
    dt = *opt.fixed_dt;
    max_steps = int(std::ceil(sc.t_max / dt - 1e-12));
  } else {
    dt = sc.cfl * g.h_min_active() / std::max(res.max_speed0, 1e-12);
    max_steps = int(std::ceil(sc.t_max / dt - 1e-12));
  }
  res.dt = dt;

  // gradient-magnitude safeguard reference
  {
    ScalarField d1v1 = derivative(initial.fluid.vel[0], 0, 1);
    res.grad_guard_ref = std::max(field_max_abs(d1v1), 1e-6);
  }

  SimState y = initial;
  SimState k(y), acc(y), ytmp(y);
  Workspace ws(g);

  auto capture = [&](int step) {
    if (opt.snapshot_every > 0 && step % opt.snapshot_every == 0) res.trajectory.push_back(y);
    for (const auto& wspec : opt.windows) {
      if (step < wspec.center_step - wspec.half_width || step > wspec.center_step + wspec.half_width)
        continue;
      Window* win = nullptr;
      for (auto& cand : res.windows)
        if (cand.center_step == wspec.center_step) win = &cand;
      if (!win) {
        res.windows.push_back(Window{dt, wspec.center_step, wspec.center_step - wspec.half_width, {}});
        win = &res.windows.back();
      }
      win->snaps.push_back(y);
    }
  };
  auto diag = [&](int step) -> bool {
    if (y.has_eikonal && (step % std::max(1, opt.mu_every) == 0 || step == max_steps)) {
      MuSample ms = mu_min_sample(sc, y);
      res.mu_history.push_back(ms);
      if (ms.mu_min <= sc.mu_stop) {
        res.stop = StopReason::MuStop;
        return false;
      }
    }
    if (opt.on_step && opt.on_step_every > 0 && step % opt.on_step_every == 0) opt.on_step(y, step);
    return true;
  };

  capture(0);
  diag(0);
  res.stop = StopReason::TMax;

  for (int step = 1; step <= max_steps; ++step) {
    // classical RK4
    if (!compute_rhs(sc, y, k, ws)) {
      res.stop = StopReason::DegenerateGradient;
      break;
    }
    acc = k;
    state_set_sum(ytmp, y, 0.5 * dt, k);
    ytmp.fluid.t = y.t() + 0.5 * dt;
    if (!compute_rhs(sc, ytmp, k, ws)) {
      res.stop = StopReason::DegenerateGradient;
      break;
    }
    state_axpy(acc, 2.0, k);
    state_set_sum(ytmp, y, 0.5 * dt, k);
    if (!compute_rhs(sc, ytmp, k, ws)) {
      res.stop = StopReason::DegenerateGradient;
      break;
    }
    state_axpy(acc, 2.0, k);
    state_set_sum(ytmp, y, dt, k);
    ytmp.fluid.t = y.t() + dt;
    if (!compute_rhs(sc, ytmp, k, ws)) {
      res.stop = StopReason::DegenerateGradient;
      break;
    }
    state_axpy(acc, 1.0, k);
    state_axpy(y, dt / 6.0, acc);
    y.fluid.t = initial.t() + step * dt;

    if (sc.filter)
      for_each_field(y, [](ScalarField& f) { spectral_filter(f); });

    res.steps = step;
    if (has_nan(y)) {
      res.stop = StopReason::NanDetected;
      break;
    }
    {
      ScalarField d1v1 = derivative(y.fluid.vel[0], 0, 1);
      if (field_max_abs(d1v1) > sc.grad_guard_factor * res.grad_guard_ref) {
        res.stop = StopReason::BlowupGuard;
        capture(step);
        break;
      }
    }
    capture(step);
    if (!diag(step)) break;
  }

  res.final_state = std::move(y);
  return res;
}

}  // namespace ewt
