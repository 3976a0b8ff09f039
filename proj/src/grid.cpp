#include "ewt/grid.hpp"

#include <cmath>
#include <thread>

namespace ewt {

Grid Grid::make(int n1, int n2, int n3, double L1, double L2, double L3) {
  Grid g;
  g.n1 = n1;
  g.n2 = n2;
  g.n3 = n3;
  g.L1 = L1;
  g.L2 = L2;
  g.L3 = L3;
  for (int a = 0; a < 3; ++a) {
    if (g.n(a) < 1 || !(g.extent(a) > 0.0))
      fail(ErrorCode::ConfigError, "grid axis " + std::to_string(a + 1) + " invalid");
    if (g.active(a) && g.n(a) < 8)
      fail(ErrorCode::StencilTooWide,
           "active axis " + std::to_string(a + 1) + " needs n >= 8, got " + std::to_string(g.n(a)));
  }
  return g;
}

double Grid::h_min_active() const {
  double hm = 0.0;
  bool any = false;
  for (int a = 0; a < 3; ++a) {
    if (!active(a)) continue;
    hm = any ? std::min(hm, h(a)) : h(a);
    any = true;
  }
  return any ? hm : 1.0;
}

Grid Grid::refined(double r) const {
  auto scale = [&](int n) {
    if (n == 1) return 1;
    const double x = n * r;
    const int m = int(std::lround(x));
    if (std::abs(x - m) > 1e-9)
      fail(ErrorCode::ConfigError, "refinement ratio does not produce integer grid dims");
    return m;
  };
  Grid g = *this;
  g.n1 = scale(n1);
  g.n2 = scale(n2);
  g.n3 = scale(n3);
  return g;
}

void parallel_for_slabs(int n3, const std::function<void(int, int)>& body) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (hw == 1 || n3 < 4) {
    body(0, n3);
    return;
  }
  const unsigned nt = std::min<unsigned>(hw, unsigned(n3));
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (unsigned t = 0; t < nt; ++t) {
    const int k0 = int(std::size_t(n3) * t / nt);
    const int k1 = int(std::size_t(n3) * (t + 1) / nt);
    pool.emplace_back([&body, k0, k1] { body(k0, k1); });
  }
  for (auto& th : pool) th.join();
}

double field_max_abs(const ScalarField& f) {
  double m = 0.0;
  for (double x : f.v) m = std::max(m, std::abs(x));
  return m;
}

double field_min(const ScalarField& f) {
  double m = f.v.empty() ? 0.0 : f.v[0];
  for (double x : f.v) m = std::min(m, x);
  return m;
}

}  // namespace ewt
