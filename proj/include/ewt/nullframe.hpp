#pragma once

#include <random>
#include <string>
#include <vector>

#include "ewt/metric.hpp"

namespace ewt {

/// g-null frame {e1, e2, e3 = Lbar, e4 = L}:
///   g(L,L) = g(Lbar,Lbar) = 0, g(L,Lbar) = -2,
///   g(L,e_A) = g(Lbar,e_A) = 0, g(e_A,e_B) = delta_AB.
struct NullFrame {
  std::array<std::array<double, 4>, 4> e{};  // e[A], A = 0..3 in frame order
  SpacetimeMetric m;

  const std::array<double, 4>& L() const { return e[3]; }
  const std::array<double, 4>& Lbar() const { return e[2]; }
};

/// Max absolute residual over the six normalization conditions.
double verify_frame(const NullFrame& f);

/// L = B + c_s n, Lbar = B - c_s n, e_A = c_s m_A with {m1, m2, n} a Euclidean
/// orthonormal triad; all conditions hold exactly by the metric's block form.
NullFrame canonical_null_frame(const SpacetimeMetric& m, const std::array<double, 3>& n);

/// Canonical frame composed with a boost L -> aL, Lbar -> Lbar/a
/// (a in [1/4,4] log-uniform), an e-plane rotation, and a null rotation
/// e_A -> e_A + q_A L, Lbar -> Lbar + 2 q_A e_A + |q|^2 L with q in [-1,1]^2.
NullFrame random_null_frame(const SpacetimeMetric& m, std::mt19937_64& rng);

/// Max-norm defect of the symmetrized frame decomposition
/// g^{-1} = -1/2 L (x) Lbar - 1/2 Lbar (x) L + sum_A e_A (x) e_A.
double verify_inverse_metric_decomposition(const NullFrame& f);

/// M_alpha^A with d_alpha = sum_A M_alpha^A e_A, and beta^A with
/// B = sum_A beta^A e_A; both solved from the 4x4 frame system and
/// verified by reconstruction.
struct FrameExpansion {
  std::array<std::array<double, 4>, 4> M{};  // M[alpha][A]
  std::array<double, 4> beta{};
  double reconstruction_residual = 0.0;
  double condition_estimate = 0.0;
};
FrameExpansion frame_expansion(const NullFrame& f);

/// Derivative-quadratic nonlinearity f(V)^{ab}_{TG} dV^T_a dV^G_b with the
/// bilinear-form symmetry f^{ab}_{TG} = f^{ba}_{GT}. V^0 = lrho,
/// V^{1..3} = v, V^{4..6} = pomega.
struct QuadraticNonlinearity {
  std::vector<double> f = std::vector<double>(4 * 4 * 7 * 7, 0.0);

  double& at(int al, int be, int th, int ga) { return f[((al * 4 + be) * 7 + th) * 7 + ga]; }
  double get(int al, int be, int th, int ga) const {
    return f[((al * 4 + be) * 7 + th) * 7 + ga];
  }
  void symmetrize();
  /// direct Cartesian evaluation; dV[alpha][Theta]
  double evaluate(const std::array<std::array<double, 7>, 4>& dV) const;
};

/// Standard null forms as quadratic nonlinearities acting on slots (th, ga).
QuadraticNonlinearity standard_Qg(const SpacetimeMetric& m, int th, int ga);
QuadraticNonlinearity standard_Qab(int al, int be, int th, int ga);
/// (dt V^th)^2 — not a null form (negative control).
QuadraticNonlinearity dt_squared_control(int th);

/// Frame coefficients c^{AB}_{TG} = f^{ab}_{TG} M_a^A M_b^B and the
/// reassembled value; the reassembly must match the Cartesian evaluation.
struct DecomposeResult {
  std::vector<double> c = std::vector<double>(4 * 4 * 7 * 7, 0.0);
  double value_frame = 0.0;
  double value_cartesian = 0.0;
  double max_diag3 = 0.0;  // max_{T,G} |c^{33}_{TG}|
  double max_diag4 = 0.0;

  double coeff(int A, int B, int th, int ga) const {
    return c[((A * 4 + B) * 7 + th) * 7 + ga];
  }
};
DecomposeResult decompose_nonlinearity(const QuadraticNonlinearity& N, const NullFrame& f,
                                       const FrameExpansion& ex,
                                       const std::array<std::array<double, 7>, 4>& dV);

/// On-shell substitution pipeline for P_(pomega), following the exceptional
/// -> B-substitution -> transport-substitution chain. The exceptional diagonal
/// part decomposes exactly as allowed terms plus a defect linear in the
/// transport residual r^c = B pomega^c - pomega^d d_d v^c; defect = 0 on jets
/// satisfying the transport equation.
struct POmegaCheck {
  std::array<double, 3> defect{};
  std::array<double, 3> exceptional{};  // D_3 + D_4 before substitution
  double reconstruction_error = 0.0;    // |D_K - (allowed + defect)| checked per i
  double defect_max = 0.0;
  std::array<double, 3> transport_residual{};
};
POmegaCheck strong_null_check_P_omega(const NullFrame& f, const FrameExpansion& ex,
                                      const std::array<double, 3>& pom,
                                      const std::array<std::array<double, 3>, 4>& dv,
                                      const std::array<std::array<double, 3>, 4>& dpom);

enum class NullClassification { OffShellNull, DerivativeLinear, OnShellNull };

struct CatalogEntry {
  std::string name;
  NullClassification cls;
  bool has_quadratic_form = false;
  /// builds the form at a state; component selects i for vector-valued entries
  std::function<QuadraticNonlinearity(const SpacetimeMetric&, int component)> form;
};

/// The seven derivative-quadratic / derivative-linear inhomogeneities of the
/// wave-transport system with their null classifications.
std::vector<CatalogEntry> euler_nonlinearity_catalog();

/// Random admissible fluid state: lrho in [-1,1], |v| <= 0.5,
/// normalized polytropic gamma in {1.4, 2, 3}.
SpacetimeMetric random_admissible_metric(std::mt19937_64& rng);
/// Uniform double in [lo, hi) from raw generator bits (platform-stable).
double uniform(std::mt19937_64& rng, double lo = 0.0, double hi = 1.0);

struct StandardFormsReport {
  double max_diag_Qg = 0.0;
  double max_diag_Qab = 0.0;
  double min_control_diag = 1e300;
  double max_reassembly_rel = 0.0;
  int samples = 0;
};
/// Samples random states and randomized frames and checks the diagonal frame
/// coefficients of both standard-form families (plus the (dt phi)^2 control).
StandardFormsReport strong_null_check_standard_forms(int n_states, int frames_per_state,
                                                     uint64_t seed);

}  // namespace ewt
