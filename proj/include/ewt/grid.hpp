#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ewt/error.hpp"

namespace ewt {

enum class DerivScheme : uint8_t { FD4, Spectral };

/// Structured periodic grid on the spatial window [0,L1) x T^2.
/// Axis 1 is the line direction (periodic window sized per scenario),
/// axes 2 and 3 are torus directions. Inactive axes have n = 1.
/// Storage is row-major with x^1 fastest.
struct Grid {
  int n1 = 1, n2 = 1, n3 = 1;
  double L1 = 1.0, L2 = 1.0, L3 = 1.0;
  std::array<DerivScheme, 3> scheme = {DerivScheme::FD4, DerivScheme::FD4, DerivScheme::FD4};

  static Grid make(int n1, int n2, int n3, double L1 = 1.0, double L2 = 1.0, double L3 = 1.0);

  int n(int axis) const { return axis == 0 ? n1 : (axis == 1 ? n2 : n3); }
  double extent(int axis) const { return axis == 0 ? L1 : (axis == 1 ? L2 : L3); }
  double h(int axis) const { return extent(axis) / n(axis); }
  double h_min_active() const;
  double cell_volume() const { return h(0) * h(1) * h(2); }
  bool active(int axis) const { return n(axis) > 1; }

  std::size_t size() const { return std::size_t(n1) * n2 * n3; }
  std::size_t index(int i, int j, int k) const {
    return (std::size_t(k) * n2 + j) * n1 + i;
  }
  double x(int axis, int idx) const { return h(axis) * idx; }

  /// Refined copy: dimensions scaled by r on active axes (must land on integers).
  Grid refined(double r) const;

  bool same_shape(const Grid& o) const {
    return n1 == o.n1 && n2 == o.n2 && n3 == o.n3 && L1 == o.L1 && L2 == o.L2 && L3 == o.L3;
  }
};

struct ScalarField {
  Grid grid;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0) : grid(g), v(g.size(), fill) {}
  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
  std::size_t size() const { return v.size(); }
};

struct VectorField {
  std::array<ScalarField, 3> c;

  VectorField() = default;
  explicit VectorField(const Grid& g) : c{ScalarField(g), ScalarField(g), ScalarField(g)} {}
  ScalarField& operator[](int i) { return c[i]; }
  const ScalarField& operator[](int i) const { return c[i]; }
  const Grid& grid() const { return c[0].grid; }
};

/// Fluid snapshot: logarithmic density and velocity at time t.
struct FluidState {
  double t = 0.0;
  ScalarField lrho;
  VectorField vel;

  FluidState() = default;
  explicit FluidState(const Grid& g) : lrho(g), vel(g) {}
  const Grid& grid() const { return lrho.grid; }
};

/// Deterministic parallel-for: fixed chunking by x^3-slab, independent of the
/// number of worker threads, so reductions assembled in slab order are
/// bit-stable across machines with different core counts.
void parallel_for_slabs(int n3, const std::function<void(int, int)>& body);

double field_max_abs(const ScalarField& f);
double field_min(const ScalarField& f);

}  // namespace ewt
