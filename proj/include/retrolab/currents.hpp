#pragma once

#include <vector>

#include "retrolab/fields.hpp"

namespace rlab {

enum class Causal { timelike, null, spacelike };

// (j0, j1) on a slice. For the standard Dirac current j0 >= 0 and
// j0^2 - j1^2 >= 0 hold cell-wise as algebraic identities; weak currents
// carry no such guarantee and get classified instead.
struct FourCurrentField {
  std::vector<double> j0;
  std::vector<double> j1;
  double time_label = 0.0;

  int size() const { return static_cast<int>(j0.size()); }
};

struct Rho0Field {
  std::vector<double> rho0;  // sqrt(|j0^2 - j1^2|)
  std::vector<Causal> causal_class;
  int spacelike_count = 0;
};

// N = <f|i> at a common slice time.
struct Overlap {
  cplx value;
  double time_label = 0.0;
};

// Relative floor below which a two-state channel counts as degenerate:
// |N| <= kEpsOverlapRel * ||psi_f|| * ||psi_i||.
inline constexpr double kEpsOverlapRel = 1e-8;
// Null band: |j.j| <= kEpsNullRel * j0^2.
inline constexpr double kEpsNullRel = 1e-12;

// j^a = psibar gamma^a psi. In the fixed representation
// j0 = |psi1|^2 + |psi2|^2, j1 = 2 Re(conj(psi1) psi2).
FourCurrentField dirac_current(const SpinorField& field);

// Conserved Klein-Gordon current j^a = (i/2m)(phi* d^a phi - phi d^a phi*),
// j0 from the stored pi, j1 from the spectral space derivative.
FourCurrentField kg_current(const KGField& field,
                            const SpacetimeLattice& lattice, double m);

// N = <f|i> = dx * sum psi_f^dag psi_i. Errors on mismatched time labels.
Overlap overlap(const SpinorField& psi_f, const SpinorField& psi_i,
                const SpacetimeLattice& lattice);

// Two-state current (1/N) psibar_f gamma^a psi_i + (1/N*) psibar_i gamma^a
// psi_f. The two terms are mutual conjugates, so the result is real; it is
// not guaranteed non-negative or timelike. Degenerate N raises
// ErrorKind::degenerate_channel.
FourCurrentField weak_current(const SpinorField& psi_i,
                              const SpinorField& psi_f, const Overlap& n,
                              const SpacetimeLattice& lattice);

Causal classify_causal(double j0, double j1);

// rho0 = sqrt(|j.j|) with causal classification per cell. Spacelike cells are
// counted, not fatal.
Rho0Field current_magnitude(const FourCurrentField& current);

// RMS of d_t j0 + d_x j1 over interior slices (centered time difference,
// spectral space derivative).
double continuity_residual(const std::vector<FourCurrentField>& currents,
                           const SpacetimeLattice& lattice);

// dx * sum j0.
double total_charge(const FourCurrentField& current,
                    const SpacetimeLattice& lattice);

}  // namespace rlab
