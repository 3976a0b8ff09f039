#include "ewt/nullframe.hpp"

#include <cmath>

namespace ewt {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = double(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double verify_frame(const NullFrame& f) {
  const auto& m = f.m;
  double r = 0.0;
  r = std::max(r, std::abs(m.inner(f.L(), f.L())));
  r = std::max(r, std::abs(m.inner(f.Lbar(), f.Lbar())));
  r = std::max(r, std::abs(m.inner(f.L(), f.Lbar()) + 2.0));
  for (int A = 0; A < 2; ++A) {
    r = std::max(r, std::abs(m.inner(f.L(), f.e[A])));
    r = std::max(r, std::abs(m.inner(f.Lbar(), f.e[A])));
    for (int B = 0; B < 2; ++B)
      r = std::max(r, std::abs(m.inner(f.e[A], f.e[B]) - (A == B ? 1.0 : 0.0)));
  }
  return r;
}

namespace {

std::array<double, 3> unit3(const std::array<double, 3>& a) {
  const double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  return {a[0] / n, a[1] / n, a[2] / n};
}

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

NullFrame canonical_null_frame(const SpacetimeMetric& m, const std::array<double, 3>& n_in) {
  const std::array<double, 3> n = unit3(n_in);
  // Euclidean triad {m1, m2, n}
  int smallest = 0;
  for (int a = 1; a < 3; ++a)
    if (std::abs(n[a]) < std::abs(n[smallest])) smallest = a;
  std::array<double, 3> seed{0.0, 0.0, 0.0};
  seed[smallest] = 1.0;
  const std::array<double, 3> m1 = unit3(cross3(n, seed));
  const std::array<double, 3> m2 = cross3(n, m1);

  NullFrame f;
  f.m = m;
  const double cs = m.cs;
  for (int A = 0; A < 2; ++A) {
    const auto& mm = A == 0 ? m1 : m2;
    f.e[A] = {0.0, cs * mm[0], cs * mm[1], cs * mm[2]};
  }
  f.e[3] = {1.0, m.v[0] + cs * n[0], m.v[1] + cs * n[1], m.v[2] + cs * n[2]};
  f.e[2] = {1.0, m.v[0] - cs * n[0], m.v[1] - cs * n[1], m.v[2] - cs * n[2]};
  return f;
}

NullFrame random_null_frame(const SpacetimeMetric& m, std::mt19937_64& rng) {
  // random unit direction (rejection-free via trig construction)
  const double z = uniform(rng, -1.0, 1.0);
  const double ph = uniform(rng, 0.0, 2.0 * M_PI);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  NullFrame f = canonical_null_frame(m, {s * std::cos(ph), s * std::sin(ph), z});

  // boost
  const double a = std::exp(uniform(rng, std::log(0.25), std::log(4.0)));
  for (int c = 0; c < 4; ++c) {
    f.e[3][c] *= a;
    f.e[2][c] /= a;
  }
  // rotation of (e1, e2)
  const double th = uniform(rng, 0.0, 2.0 * M_PI);
  for (int c = 0; c < 4; ++c) {
    const double e1 = f.e[0][c], e2 = f.e[1][c];
    f.e[0][c] = std::cos(th) * e1 + std::sin(th) * e2;
    f.e[1][c] = -std::sin(th) * e1 + std::cos(th) * e2;
  }
  // null rotation about L
  const double q1 = uniform(rng, -1.0, 1.0), q2 = uniform(rng, -1.0, 1.0);
  for (int c = 0; c < 4; ++c) {
    const double e1 = f.e[0][c], e2 = f.e[1][c];
    f.e[2][c] += 2.0 * q1 * e1 + 2.0 * q2 * e2 + (q1 * q1 + q2 * q2) * f.e[3][c];
    f.e[0][c] = e1 + q1 * f.e[3][c];
    f.e[1][c] = e2 + q2 * f.e[3][c];
  }
  return f;
}

double verify_inverse_metric_decomposition(const NullFrame& f) {
  double r = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double t = -0.5 * (f.L()[a] * f.Lbar()[b] + f.Lbar()[a] * f.L()[b]);
      for (int A = 0; A < 2; ++A) t += f.e[A][a] * f.e[A][b];
      r = std::max(r, std::abs(t - f.m.ginv[a][b]));
    }
  return r;
}

namespace {

// 4x4 inverse by Gauss-Jordan with partial pivoting; returns false if singular
bool invert4(const std::array<std::array<double, 4>, 4>& in,
             std::array<std::array<double, 4>, 4>& out) {
  double a[4][8];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a[i][j] = in[i][j];
      a[i][j + 4] = i == j ? 1.0 : 0.0;
    }
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (a[p][c] == 0.0) return false;
    if (p != c)
      for (int j = 0; j < 8; ++j) std::swap(a[p][j], a[c][j]);
    const double piv = a[c][c];
    for (int j = 0; j < 8; ++j) a[c][j] /= piv;
    for (int r = 0; r < 4; ++r) {
      if (r == c) continue;
      const double fz = a[r][c];
      for (int j = 0; j < 8; ++j) a[r][j] -= fz * a[c][j];
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = a[i][j + 4];
  return true;
}

double norm_inf4(const std::array<std::array<double, 4>, 4>& a) {
  double n = 0.0;
  for (int i = 0; i < 4; ++i) {
    double row = 0.0;
    for (int j = 0; j < 4; ++j) row += std::abs(a[i][j]);
    n = std::max(n, row);
  }
  return n;
}

}  // namespace

FrameExpansion frame_expansion(const NullFrame& f) {
  // columns of E are the frame vectors: E[beta][A] = e_A^beta
  std::array<std::array<double, 4>, 4> E, Einv;
  for (int b = 0; b < 4; ++b)
    for (int A = 0; A < 4; ++A) E[b][A] = f.e[A][b];
  if (!invert4(E, Einv)) fail(ErrorCode::SingularFrame, "frame matrix singular");

  FrameExpansion ex;
  ex.condition_estimate = norm_inf4(E) * norm_inf4(Einv);
  if (ex.condition_estimate > 1e12)
    fail(ErrorCode::SingularFrame,
         "frame condition estimate " + std::to_string(ex.condition_estimate));

  // M_alpha^A = (E^{-1})^A_alpha ; beta = E^{-1} B
  for (int al = 0; al < 4; ++al)
    for (int A = 0; A < 4; ++A) ex.M[al][A] = Einv[A][al];
  const auto B = f.m.B();
  for (int A = 0; A < 4; ++A) {
    double s = 0.0;
    for (int b = 0; b < 4; ++b) s += Einv[A][b] * B[b];
    ex.beta[A] = s;
  }

  double rres = 0.0;
  for (int al = 0; al < 4; ++al)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int A = 0; A < 4; ++A) s += ex.M[al][A] * f.e[A][b];
      rres = std::max(rres, std::abs(s - (al == b ? 1.0 : 0.0)));
    }
  for (int b = 0; b < 4; ++b) {
    double s = 0.0;
    for (int A = 0; A < 4; ++A) s += ex.beta[A] * f.e[A][b];
    rres = std::max(rres, std::abs(s - B[b]));
  }
  ex.reconstruction_residual = rres;
  return ex;
}

void QuadraticNonlinearity::symmetrize() {
  for (int al = 0; al < 4; ++al)
    for (int be = al; be < 4; ++be)
      for (int th = 0; th < 7; ++th)
        for (int ga = 0; ga < 7; ++ga) {
          if (be == al && ga < th) continue;
          const double s = 0.5 * (get(al, be, th, ga) + get(be, al, ga, th));
          at(al, be, th, ga) = s;
          at(be, al, ga, th) = s;
        }
}

double QuadraticNonlinearity::evaluate(const std::array<std::array<double, 7>, 4>& dV) const {
  double s = 0.0;
  for (int al = 0; al < 4; ++al)
    for (int be = 0; be < 4; ++be)
      for (int th = 0; th < 7; ++th)
        for (int ga = 0; ga < 7; ++ga) {
          const double c = get(al, be, th, ga);
          if (c != 0.0) s += c * dV[al][th] * dV[be][ga];
        }
  return s;
}

QuadraticNonlinearity standard_Qg(const SpacetimeMetric& m, int th, int ga) {
  QuadraticNonlinearity N;
  for (int al = 0; al < 4; ++al)
    for (int be = 0; be < 4; ++be) N.at(al, be, th, ga) += m.ginv[al][be];
  N.symmetrize();
  return N;
}

QuadraticNonlinearity standard_Qab(int al, int be, int th, int ga) {
  QuadraticNonlinearity N;
  N.at(al, be, th, ga) += 1.0;
  N.at(al, be, ga, th) -= 1.0;
  N.symmetrize();
  return N;
}

QuadraticNonlinearity dt_squared_control(int th) {
  QuadraticNonlinearity N;
  N.at(0, 0, th, th) = 1.0;
  return N;
}

DecomposeResult decompose_nonlinearity(const QuadraticNonlinearity& N, const NullFrame& f,
                                       const FrameExpansion& ex,
                                       const std::array<std::array<double, 7>, 4>& dV) {
  DecomposeResult res;
  // frame derivatives e_A V^T = e_A^alpha d_alpha V^T
  std::array<std::array<double, 7>, 4> eV{};
  for (int A = 0; A < 4; ++A)
    for (int th = 0; th < 7; ++th) {
      double s = 0.0;
      for (int al = 0; al < 4; ++al) s += f.e[A][al] * dV[al][th];
      eV[A][th] = s;
    }

  for (int A = 0; A < 4; ++A)
    for (int Bq = 0; Bq < 4; ++Bq)
      for (int th = 0; th < 7; ++th)
        for (int ga = 0; ga < 7; ++ga) {
          double c = 0.0;
          for (int al = 0; al < 4; ++al)
            for (int be = 0; be < 4; ++be) {
              const double fv = N.get(al, be, th, ga);
              if (fv != 0.0) c += fv * ex.M[al][A] * ex.M[be][Bq];
            }
          res.c[((A * 4 + Bq) * 7 + th) * 7 + ga] = c;
          res.value_frame += c * eV[A][th] * eV[Bq][ga];
          if (A == 2 && Bq == 2) res.max_diag3 = std::max(res.max_diag3, std::abs(c));
          if (A == 3 && Bq == 3) res.max_diag4 = std::max(res.max_diag4, std::abs(c));
        }
  res.value_cartesian = N.evaluate(dV);
  return res;
}

POmegaCheck strong_null_check_P_omega(const NullFrame& f, const FrameExpansion& ex,
                                      const std::array<double, 3>& pom,
                                      const std::array<std::array<double, 3>, 4>& dv,
                                      const std::array<std::array<double, 3>, 4>& dpom) {
  POmegaCheck out;

  // frame derivatives of v and pomega
  std::array<std::array<double, 3>, 4> ev{}, epom{};
  for (int A = 0; A < 4; ++A)
    for (int c = 0; c < 3; ++c) {
      double sv = 0.0, sp = 0.0;
      for (int al = 0; al < 4; ++al) {
        sv += f.e[A][al] * dv[al][c];
        sp += f.e[A][al] * dpom[al][c];
      }
      ev[A][c] = sv;
      epom[A][c] = sp;
    }

  // transport residual r^c = B pomega^c - pomega^d d_d v^c
  std::array<double, 3> r{};
  for (int c = 0; c < 3; ++c) {
    double Bp = dpom[0][c];
    for (int a = 0; a < 3; ++a) Bp += f.m.v[a] * dpom[a + 1][c];
    double st = 0.0;
    for (int d = 0; d < 3; ++d) st += pom[d] * dv[d + 1][c];
    r[c] = Bp - st;
    out.transport_residual[c] = r[c];
  }

  for (int i = 0; i < 3; ++i) {
    double defect_i = 0.0, exceptional_i = 0.0, recon_i = 0.0;
    for (int K = 2; K <= 3; ++K) {
      const double beta = ex.beta[K];
      if (beta == 0.0) fail(ErrorCode::SingularFrame, "beta^K vanishes");
      // antisymmetric sum over (a,b) with eps_{iab}
      auto eps_sum = [&](auto term) {
        const int a0 = (i + 1) % 3, b0 = (i + 2) % 3;
        return term(a0, b0) - term(b0, a0);
      };
      const double D_K = eps_sum([&](int a, int b) {
        double s = 0.0;
        for (int c = 0; c < 3; ++c)
          s += ex.M[a + 1][K] * ex.M[c + 1][K] * (epom[K][c] * ev[K][b] - ev[K][c] * epom[K][b]);
        return s;
      });
      double allowed1 = 0.0;
      for (int A = 0; A < 4; ++A) {
        if (A == K) continue;
        allowed1 -= (ex.beta[A] / beta) * eps_sum([&](int a, int b) {
          double s = 0.0;
          for (int c = 0; c < 3; ++c)
            s += ex.M[a + 1][K] * ex.M[c + 1][K] * (epom[A][c] * ev[K][b] - ev[K][c] * epom[A][b]);
          return s;
        });
      }
      double allowed2 = 0.0;
      for (int A = 0; A < 4; ++A) {
        if (A == K) continue;
        double pomM = 0.0;
        for (int d = 0; d < 3; ++d) pomM += pom[d] * ex.M[d + 1][A];
        allowed2 += (pomM / beta) * eps_sum([&](int a, int b) {
          double s = 0.0;
          for (int c = 0; c < 3; ++c)
            s += ex.M[a + 1][K] * ex.M[c + 1][K] * (ev[A][c] * ev[K][b] - ev[K][c] * ev[A][b]);
          return s;
        });
      }
      const double defect_K = (1.0 / beta) * eps_sum([&](int a, int b) {
        double s = 0.0;
        for (int c = 0; c < 3; ++c)
          s += ex.M[a + 1][K] * ex.M[c + 1][K] * (r[c] * ev[K][b] - ev[K][c] * r[b]);
        return s;
      });
      defect_i += defect_K;
      exceptional_i += D_K;
      recon_i = std::max(recon_i, std::abs(D_K - (allowed1 + allowed2 + defect_K)));
    }
    out.defect[i] = defect_i;
    out.exceptional[i] = exceptional_i;
    out.defect_max = std::max(out.defect_max, std::abs(defect_i));
    out.reconstruction_error = std::max(out.reconstruction_error, recon_i);
  }
  return out;
}

std::vector<CatalogEntry> euler_nonlinearity_catalog() {
  std::vector<CatalogEntry> cat;

  cat.push_back({"Q_velocity", NullClassification::OffShellNull, true,
                 [](const SpacetimeMetric& m, int i) {
                   QuadraticNonlinearity N = standard_Qg(m, 0, 1 + i);
                   const double coef = -(1.0 + m.csp / m.cs);
                   for (double& x : N.f) x *= coef;
                   return N;
                 }});
  cat.push_back({"Q_density", NullClassification::OffShellNull, true,
                 [](const SpacetimeMetric& m, int) {
                   QuadraticNonlinearity N = standard_Qg(m, 0, 0);
                   const double coef = -3.0 * m.csp / m.cs;
                   for (double& x : N.f) x *= coef;
                   // + 2 sum_{a<b} Q_(ab)(dv^a, dv^b)
                   for (int a = 0; a < 3; ++a)
                     for (int b = a + 1; b < 3; ++b) {
                       QuadraticNonlinearity Q = standard_Qab(a + 1, b + 1, 1 + a, 1 + b);
                       for (std::size_t q = 0; q < N.f.size(); ++q) N.f[q] += 2.0 * Q.f[q];
                     }
                   return N;
                 }});
  cat.push_back({"vorticity_stretching(pom.dv)", NullClassification::DerivativeLinear, false, {}});
  cat.push_back({"pomega_advect(pom.dpom)", NullClassification::DerivativeLinear, false, {}});
  cat.push_back({"pomega_div(pom divpom)", NullClassification::DerivativeLinear, false, {}});
  cat.push_back({"pomega_grad_lrho(pom.dlrho)", NullClassification::DerivativeLinear, false, {}});
  cat.push_back({"P_omega", NullClassification::OnShellNull, true,
                 [](const SpacetimeMetric&, int i) {
                   QuadraticNonlinearity N;
                   for (int a = 0; a < 3; ++a)
                     for (int b = 0; b < 3; ++b) {
                       const int eps = levi_civita(i + 1, a + 1, b + 1);
                       if (!eps) continue;
                       for (int c = 0; c < 3; ++c) {
                         N.at(a + 1, c + 1, 4 + c, 1 + b) += eps;
                         N.at(a + 1, c + 1, 1 + c, 4 + b) -= eps;
                       }
                     }
                   N.symmetrize();
                   return N;
                 }});
  return cat;
}

SpacetimeMetric random_admissible_metric(std::mt19937_64& rng) {
  static const double gammas[3] = {1.4, 2.0, 3.0};
  const EquationOfState eos = EquationOfState::normalized_polytropic(gammas[rng() % 3]);
  const double lrho = uniform(rng, -1.0, 1.0);
  std::array<double, 3> v;
  do {
    for (int a = 0; a < 3; ++a) v[a] = uniform(rng, -0.5, 0.5);
  } while (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] > 0.25);
  return metric_at(eos, lrho, v);
}

StandardFormsReport strong_null_check_standard_forms(int n_states, int frames_per_state,
                                                     uint64_t seed) {
  StandardFormsReport rep;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < n_states; ++s) {
    const SpacetimeMetric m = random_admissible_metric(rng);
    for (int fr = 0; fr < frames_per_state; ++fr) {
      const NullFrame f = random_null_frame(m, rng);
      const FrameExpansion ex = frame_expansion(f);
      std::array<std::array<double, 7>, 4> dV;
      for (auto& row : dV)
        for (double& x : row) x = uniform(rng, -1.0, 1.0);

      {
        const DecomposeResult d = decompose_nonlinearity(standard_Qg(m, 0, 1), f, ex, dV);
        rep.max_diag_Qg = std::max({rep.max_diag_Qg, d.max_diag3, d.max_diag4});
        const double denom = std::max(std::abs(d.value_cartesian), 1e-3);
        rep.max_reassembly_rel =
            std::max(rep.max_reassembly_rel, std::abs(d.value_frame - d.value_cartesian) / denom);
      }
      for (int al = 0; al < 4; ++al)
        for (int be = al + 1; be < 4; ++be) {
          const DecomposeResult d =
              decompose_nonlinearity(standard_Qab(al, be, 0, 1), f, ex, dV);
          rep.max_diag_Qab = std::max({rep.max_diag_Qab, d.max_diag3, d.max_diag4});
        }
      {
        const DecomposeResult d = decompose_nonlinearity(dt_squared_control(1), f, ex, dV);
        rep.min_control_diag =
            std::min(rep.min_control_diag, std::max(d.max_diag3, d.max_diag4));
      }
      ++rep.samples;
    }
  }
  return rep;
}

}  // namespace ewt
