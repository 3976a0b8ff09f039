#include "ewt/window.hpp"

#include "ewt/ops.hpp"

namespace ewt {

void require_window(const Window& w, int half_needed) {
  const int c = w.center_index();
  if (c < half_needed || c + half_needed >= int(w.snaps.size()))
    fail(ErrorCode::InsufficientSnapshots,
         "need center +- " + std::to_string(half_needed) + " snapshots, window has " +
             std::to_string(w.snaps.size()));
}

namespace {

ScalarField stencil5(const Window& w, const FieldMaker& maker, const double wts[5], double scale) {
  require_window(w, 2);
  const int c = w.center_index();
  ScalarField out;
  for (int s = -2; s <= 2; ++s) {
    ScalarField f = maker(w.snaps[c + s]);
    if (out.v.empty()) out = ScalarField(f.grid);
    const double a = wts[s + 2] * scale;
    if (a == 0.0) continue;
    for (std::size_t q = 0; q < out.size(); ++q) out[q] += a * f[q];
  }
  return out;
}

}  // namespace

ScalarField window_time_deriv1(const Window& w, const FieldMaker& maker) {
  static const double wts[5] = {1.0, -8.0, 0.0, 8.0, -1.0};
  return stencil5(w, maker, wts, 1.0 / (12.0 * w.dt));
}

ScalarField window_time_deriv2(const Window& w, const FieldMaker& maker) {
  static const double wts[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};
  return stencil5(w, maker, wts, 1.0 / (12.0 * w.dt * w.dt));
}

StateJets state_jets(const Window& w) {
  require_window(w, 2);
  const SimState& c = w.center();
  StateJets j;
  j.dt_lrho = window_time_deriv1(w, [](const SimState& s) { return s.fluid.lrho; });
  j.grad_lrho = gradient(c.fluid.lrho);
  for (int i = 0; i < 3; ++i) {
    j.dt_v[i] = window_time_deriv1(w, [i](const SimState& s) { return s.fluid.vel[i]; });
    j.grad_v[i] = gradient(c.fluid.vel[i]);
  }
  return j;
}

Scalar2Jets scalar2_jets(const Window& w, const FieldMaker& maker) {
  require_window(w, 2);
  Scalar2Jets j;
  j.f = maker(w.center());
  j.dt = window_time_deriv1(w, maker);
  j.dtt = window_time_deriv2(w, maker);
  j.grad = gradient(j.f);
  j.grad_dt = gradient(j.dt);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      if (a == b)
        j.hess[Scalar2Jets::sym3(a, b)] = derivative(j.f, a, 2);
      else
        j.hess[Scalar2Jets::sym3(a, b)] = derivative(j.grad[a], b, 1);
    }
  return j;
}

}  // namespace ewt
