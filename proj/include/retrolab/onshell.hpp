#pragma once

#include "retrolab/currents.hpp"
#include "retrolab/guidance.hpp"

namespace rlab {

// Aggregated on-shell diagnostics along a worldline. All vanish (to rounding
// or to O(dt^2) for the field term) exactly when the trajectory obeys
// u = j/rho0 and the field solves the free Dirac equation.
struct OnShellReport {
  double particle_lagrangian_value = 0.0;  // max |u.j - rho0| over samples
  double rhs_norm = 0.0;                   // max generalized-RHS spinor norm
  double field_term_rms = 0.0;             // RMS of the field Lagrangian density
  double minimizer_gap = 0.0;              // worst scan-vs-on-shell gap
};

// The particle Lagrangian bracket -rho0 (u.u)^{1/2} + u.j for unit timelike
// u, i.e. u.j - rho0 with u.j = u0 j0 - u1 j1. Errors unless u.u = 1 within
// 1e-12 and u is future-pointing.
double particle_lagrangian_density(double u0, double u1, double j0, double j1,
                                   double rho0);

// The two-state field Lagrangian density on slice `slice` of psi_i:
// Re[(1/N)(-i psibar_f gamma^a d_a psi_i + m psibar_f psi_i)], centered time
// difference, spectral space derivative. Pointwise ~0 when psi_i solves the
// Dirac equation. `slice` must be interior.
std::vector<double> field_lagrangian_density(const FieldHistory& psi_i,
                                             const FieldHistory& psi_f,
                                             std::size_t slice,
                                             const Overlap& n, double m);

// The generalized field-equation right-hand side (u_a - j_a/rho0) gamma^a psi
// at one point, with the point-density factor normalized to 1. The zero
// spinor exactly when u = j/rho0. Errors when rho0 <= 0.
Spinor generalized_dirac_rhs(const Spinor& psi, double u0, double u1,
                             double j0, double j1, double rho0);

struct RapidityScan {
  double grid_min = 0.0;     // min bracket over the eta grid alone
  double grid_argmin = 0.0;  // eta attaining it
  double eta_star = 0.0;     // atanh(j1/j0), the on-shell rapidity
  double onshell_value = 0.0;
  double gap = 0.0;  // min over grid-plus-on-shell-point minus onshell_value
};

// Scans the bracket over u(eta) = (cosh eta, sinh eta) on a uniform grid plus
// the exact on-shell point. For timelike future-pointing j the minimum is 0,
// attained only at eta_star.
RapidityScan rapidity_scan(double j0, double j1, double eta_min,
                           double eta_max, int n_points);

// Aggregates bracket, RHS norm, minimizer gap and field-term RMS along a
// worldline whose samples sit on the slice times of psi_i.
OnShellReport onshell_report(const FieldHistory& psi_i,
                             const WorldLine& worldline,
                             const FieldHistory& psi_f, double m);

}  // namespace rlab
