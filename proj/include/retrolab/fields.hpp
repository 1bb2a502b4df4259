#pragma once

#include <vector>

#include "retrolab/lattice.hpp"
#include "retrolab/spinor.hpp"

namespace rlab {

// Two-component complex field on a spatial slice. Serves as the initial
// wavefunction, the final wavefunction, or any intermediate slice.
struct SpinorField {
  std::vector<Spinor> values;
  double time_label = 0.0;

  int size() const { return static_cast<int>(values.size()); }
};

// Klein-Gordon slice: phi and its stored time derivative pi = d_t phi.
struct KGField {
  std::vector<cplx> phi;
  std::vector<cplx> pi;
  double time_label = 0.0;

  int size() const { return static_cast<int>(phi.size()); }
};

struct FieldHistory {
  SpacetimeLattice lattice;
  std::vector<SpinorField> slices;  // ascending time, uniform spacing dt
};

struct KGHistory {
  SpacetimeLattice lattice;
  std::vector<KGField> slices;
};

// Gaussian momentum-space profile centered at k0, projected per mode onto the
// positive-energy eigenspinor and normalized to 1. `width` is the position
// envelope scale: |psi(x)| ~ exp(-(x-x0)^2 / (2 width^2)).
// Preconditions: width >= 4 dx and L > 10 width.
SpinorField gaussian_packet(const SpacetimeLattice& lattice, double m,
                            double x0, double width, double k0);

// Positive-frequency Klein-Gordon Gaussian, normalized to unit charge.
KGField gaussian_packet_kg(const SpacetimeLattice& lattice, double m,
                           double x0, double width, double k0);

// Dirac norm, dx * sum psi^dag psi.
double field_norm(const SpinorField& field, const SpacetimeLattice& lattice);

// Conserved Klein-Gordon charge, (i/2m) dx * sum (phi* pi - phi pi*).
double kg_charge(const KGField& field, const SpacetimeLattice& lattice,
                 double m);

// dx * sum a^dag b.
cplx inner_product(const SpinorField& a, const SpinorField& b,
                   const SpacetimeLattice& lattice);

double centroid(const SpinorField& field, const SpacetimeLattice& lattice);

// Spectral (exact band-limited) spatial derivative.
std::vector<cplx> spectral_derivative(const std::vector<cplx>& values,
                                      const SpacetimeLattice& lattice);

// Two time labels are "the same slice" up to accumulated rounding.
bool same_time(double a, double b);

}  // namespace rlab
