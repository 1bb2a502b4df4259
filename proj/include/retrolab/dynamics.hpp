#pragma once

#include "retrolab/fields.hpp"

namespace rlab {

enum class Direction { forward, backward };

// Free Dirac evolution: per momentum mode the exact matrix exponential of
// h(k) = alpha*k + gamma0*m over +/- dt, applied n_steps times. Unitary to
// rounding. Backward applies the inverse step, so a final wavefunction can be
// carried back onto the same slice times as a forward-evolved initial one.
// Slices are returned in ascending time order for both directions.
FieldHistory evolve_dirac(const SpinorField& field,
                          const SpacetimeLattice& lattice, double m,
                          int n_steps, Direction direction);

// Free Klein-Gordon evolution: exact per-mode harmonic rotation of
// (phi_k, pi_k) at frequency omega(k) = sqrt(k^2 + m^2).
KGHistory evolve_kg(const KGField& field, const SpacetimeLattice& lattice,
                    double m, int n_steps, Direction direction);

// RMS over interior slices of || i gamma^a d_a psi - m psi ||_{L2}, with a
// centered time difference and spectral space derivative. O(dt^2) on true
// solutions; O(m ||psi||) on garbage.
double dirac_equation_residual(const FieldHistory& history, double m);

}  // namespace rlab
