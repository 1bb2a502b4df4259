#pragma once

#include <vector>

namespace rlab {

struct SimConfig;

// Discretized 1+1D arena: a periodic spatial grid of nx points spaced dx and
// nt uniform time steps of dt. 3+1D quantities specialize to indices
// alpha in {0, 1} throughout; the metric signature is (+, -).
struct SpacetimeLattice {
  int nx = 0;
  double dx = 0.0;
  int nt = 0;
  double dt = 0.0;
  double x_min = 0.0;
  bool periodic = true;

  double length() const { return nx * dx; }
  double coord(int k) const { return x_min + k * dx; }
  std::vector<double> coords() const;
};

bool is_power_of_two(int n);

// Validates the grid invariants (power-of-two nx, positive spacings) and
// builds the lattice. Errors name the offending config key.
SpacetimeLattice build_lattice(const SimConfig& config);

// Wavenumbers in standard discrete-transform order [0, dk, ..., -dk] with
// dk = 2*pi/L; the Nyquist entry carries the negative sign convention.
std::vector<double> wavenumbers(const SpacetimeLattice& lattice);

}  // namespace rlab
