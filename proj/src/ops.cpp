#include "ewt/ops.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace ewt {

int levi_civita(int i, int j, int k) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3)
    fail(ErrorCode::RangeError, "levi_civita index out of {1,2,3}");
  return (i - j) * (j - k) * (k - i) / 2;
}

namespace {

struct WrapTables {
  std::vector<int> m2, m1, p1, p2;
};

WrapTables make_tables(int m) {
  WrapTables t;
  t.m2.resize(m);
  t.m1.resize(m);
  t.p1.resize(m);
  t.p2.resize(m);
  for (int i = 0; i < m; ++i) {
    t.m2[i] = (i - 2 + m) % m;
    t.m1[i] = (i - 1 + m) % m;
    t.p1[i] = (i + 1) % m;
    t.p2[i] = (i + 2) % m;
  }
  return t;
}

void fd4_axis(const ScalarField& f, int axis, int order, ScalarField& out) {
  const Grid& g = f.grid;
  const int m = g.n(axis);
  const double h = g.h(axis);
  const WrapTables t = make_tables(m);
  const double c1 = 1.0 / (12.0 * h);
  const double c2 = 1.0 / (12.0 * h * h);
  const double* fv = f.v.data();
  double* ov = out.v.data();
  const int n1 = g.n1, n2 = g.n2;

  if (axis == 0) {
    parallel_for_slabs(g.n3, [&](int k0, int k1) {
      for (int k = k0; k < k1; ++k)
        for (int j = 0; j < n2; ++j) {
          const std::size_t b = g.index(0, j, k);
          if (order == 1)
            for (int i = 0; i < m; ++i)
              ov[b + i] = c1 * (fv[b + t.m2[i]] - 8.0 * fv[b + t.m1[i]] + 8.0 * fv[b + t.p1[i]] -
                                fv[b + t.p2[i]]);
          else
            for (int i = 0; i < m; ++i)
              ov[b + i] = c2 * (-fv[b + t.m2[i]] + 16.0 * fv[b + t.m1[i]] - 30.0 * fv[b + i] +
                                16.0 * fv[b + t.p1[i]] - fv[b + t.p2[i]]);
        }
    });
  } else if (axis == 1) {
    parallel_for_slabs(g.n3, [&](int k0, int k1) {
      for (int k = k0; k < k1; ++k)
        for (int j = 0; j < m; ++j) {
          const std::size_t bc = g.index(0, j, k);
          const std::size_t bm2 = g.index(0, t.m2[j], k), bm1 = g.index(0, t.m1[j], k);
          const std::size_t bp1 = g.index(0, t.p1[j], k), bp2 = g.index(0, t.p2[j], k);
          if (order == 1)
            for (int i = 0; i < n1; ++i)
              ov[bc + i] =
                  c1 * (fv[bm2 + i] - 8.0 * fv[bm1 + i] + 8.0 * fv[bp1 + i] - fv[bp2 + i]);
          else
            for (int i = 0; i < n1; ++i)
              ov[bc + i] = c2 * (-fv[bm2 + i] + 16.0 * fv[bm1 + i] - 30.0 * fv[bc + i] +
                                 16.0 * fv[bp1 + i] - fv[bp2 + i]);
        }
    });
  } else {
    parallel_for_slabs(m, [&](int k0, int k1) {
      for (int k = k0; k < k1; ++k)
        for (int j = 0; j < n2; ++j) {
          const std::size_t bc = g.index(0, j, k);
          const std::size_t bm2 = g.index(0, j, t.m2[k]), bm1 = g.index(0, j, t.m1[k]);
          const std::size_t bp1 = g.index(0, j, t.p1[k]), bp2 = g.index(0, j, t.p2[k]);
          if (order == 1)
            for (int i = 0; i < n1; ++i)
              ov[bc + i] =
                  c1 * (fv[bm2 + i] - 8.0 * fv[bm1 + i] + 8.0 * fv[bp1 + i] - fv[bp2 + i]);
          else
            for (int i = 0; i < n1; ++i)
              ov[bc + i] = c2 * (-fv[bm2 + i] + 16.0 * fv[bm1 + i] - 30.0 * fv[bc + i] +
                                 16.0 * fv[bp1 + i] - fv[bp2 + i]);
        }
    });
  }
}

// One cached 1D r2c/c2r plan pair per line length; executed on caller buffers.
struct FftPlans {
  fftw_plan fwd = nullptr, bwd = nullptr;
  std::vector<double> re;
  std::vector<fftw_complex> cx;
};

std::map<int, FftPlans>& plan_cache() {
  static std::map<int, FftPlans> cache;
  return cache;
}
std::mutex plan_mutex;

FftPlans& plans_for(int m) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  FftPlans p;
  p.re.resize(m);
  p.cx.resize(m / 2 + 1);
  p.fwd = fftw_plan_dft_r2c_1d(m, p.re.data(), p.cx.data(), FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_c2r_1d(m, p.cx.data(), p.re.data(), FFTW_ESTIMATE);
  return cache.emplace(m, std::move(p)).first->second;
}

// Applies a per-mode complex multiplier along one axis, line by line.
template <typename ModeOp>
void spectral_axis(ScalarField& f, int axis, ModeOp op) {
  const Grid& g = f.grid;
  const int m = g.n(axis);
  FftPlans& pl = plans_for(m);
  std::lock_guard<std::mutex> lock(plan_mutex);  // serial path; plans share buffers

  const std::size_t stride = axis == 0 ? 1 : (axis == 1 ? std::size_t(g.n1) : std::size_t(g.n1) * g.n2);
  const int nlines = int(g.size() / m);
  // enumerate line base indices
  for (int line = 0; line < nlines; ++line) {
    std::size_t base = 0;
    if (axis == 0) {
      base = std::size_t(line) * m;
    } else if (axis == 1) {
      const int i = line % g.n1, k = line / g.n1;
      base = g.index(i, 0, k);
    } else {
      const int i = line % g.n1, j = line / g.n1;
      base = g.index(i, j, 0);
    }
    for (int q = 0; q < m; ++q) pl.re[q] = f.v[base + q * stride];
    fftw_execute(pl.fwd);
    for (int q = 0; q <= m / 2; ++q) op(q, m, pl.cx[q]);
    fftw_execute(pl.bwd);
    const double inv = 1.0 / m;
    for (int q = 0; q < m; ++q) f.v[base + q * stride] = pl.re[q] * inv;
  }
}

void spectral_derivative(const ScalarField& f, int axis, int order, ScalarField& out) {
  out = f;
  const double L = f.grid.extent(axis);
  const double two_pi_over_L = 2.0 * std::numbers::pi / L;
  spectral_axis(out, axis, [&](int q, int m, fftw_complex& c) {
    const double k = two_pi_over_L * q;
    if (order == 1) {
      // Nyquist mode of an odd derivative is dropped (real output).
      if (2 * q == m) {
        c[0] = 0.0;
        c[1] = 0.0;
        return;
      }
      const double re = c[0], im = c[1];
      c[0] = -k * im;
      c[1] = k * re;
    } else {
      c[0] *= -k * k;
      c[1] *= -k * k;
    }
  });
}

}  // namespace

void derivative_into(const ScalarField& f, int axis, int order, ScalarField& out) {
  const Grid& g = f.grid;
  if (!out.grid.same_shape(g)) out = ScalarField(g);
  if (order != 1 && order != 2) fail(ErrorCode::RangeError, "derivative order must be 1 or 2");
  if (!g.active(axis)) {
    std::fill(out.v.begin(), out.v.end(), 0.0);
    return;
  }
  if (g.n(axis) < 5)
    fail(ErrorCode::StencilTooWide, "axis " + std::to_string(axis + 1) + " too short for stencil");
  if (g.scheme[axis] == DerivScheme::Spectral)
    spectral_derivative(f, axis, order, out);
  else
    fd4_axis(f, axis, order, out);
}

ScalarField derivative(const ScalarField& f, int axis, int order) {
  ScalarField out(f.grid);
  derivative_into(f, axis, order, out);
  return out;
}

ScalarField divergence(const VectorField& V) {
  const Grid& g = V.grid();
  ScalarField out(g);
  ScalarField tmp(g);
  for (int a = 0; a < 3; ++a) {
    if (!g.active(a)) continue;
    derivative_into(V[a], a, 1, tmp);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += tmp[i];
  }
  return out;
}

VectorField curl(const VectorField& V) {
  const Grid& g = V.grid();
  VectorField out(g);
  ScalarField tmp(g);
  // (curl V)^i = eps_{iab} d_a V^b
  for (int i = 0; i < 3; ++i) {
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    derivative_into(V[b], a, 1, tmp);
    out[i] = tmp;
    derivative_into(V[a], b, 1, tmp);
    for (std::size_t q = 0; q < tmp.size(); ++q) out[i][q] -= tmp[q];
  }
  return out;
}

VectorField gradient(const ScalarField& f) {
  VectorField out(f.grid);
  for (int a = 0; a < 3; ++a) derivative_into(f, a, 1, out[a]);
  return out;
}

VectorField specific_vorticity(const FluidState& s) {
  VectorField w = curl(s.vel);
  const std::size_t n = s.lrho.size();
  std::vector<double> scale(n);
  for (std::size_t q = 0; q < n; ++q) scale[q] = std::exp(-s.lrho[q]);
  for (int i = 0; i < 3; ++i)
    for (std::size_t q = 0; q < n; ++q) w[i][q] *= scale[q];
  return w;
}

ScalarField apply_B(const ScalarField& f, const ScalarField& dt_f, const FluidState& s) {
  ScalarField out = dt_f;
  ScalarField tmp(f.grid);
  for (int a = 0; a < 3; ++a) {
    if (!f.grid.active(a)) continue;
    derivative_into(f, a, 1, tmp);
    for (std::size_t q = 0; q < out.size(); ++q) out[q] += s.vel[a][q] * tmp[q];
  }
  return out;
}

void spectral_filter(ScalarField& f, double cut, double alpha, int p) {
  for (int a = 0; a < 3; ++a) {
    if (!f.grid.active(a)) continue;
    spectral_axis(f, a, [&](int q, int m, fftw_complex& c) {
      const double frac = double(q) / (m / 2);
      if (frac <= cut) return;
      const double s = std::exp(-alpha * std::pow((frac - cut) / (1.0 - cut), p));
      c[0] *= s;
      c[1] *= s;
    });
  }
}

}  // namespace ewt
