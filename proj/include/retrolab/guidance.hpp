#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "retrolab/currents.hpp"

namespace rlab {

enum class WorldLineFlag {
  superluminal,        // |j1/j0| > 1 encountered (weak currents only)
  near_zero_density,   // |j0| at or below the stagnation floor
  spacelike_cell,      // local current not timelike; u undefined there
  truncated,           // integration halted at a stagnation point
  frame_order_reversal // boosted superluminal segment reversed time order
};

// Time-ordered samples of one particle trajectory. `x` is the unwrapped
// (continuous) coordinate; the field is read through the periodic wrap.
// u0/u1 are recorded where the local current is timelike and NaN elsewhere,
// with a flag naming the condition.
struct WorldLine {
  struct Sample {
    double t, x, u0, u1;
  };
  struct Event {
    std::size_t sample;
    WorldLineFlag flag;
  };
  std::vector<Sample> samples;
  std::vector<Event> flags;

  bool has(WorldLineFlag f) const;
  std::size_t count(WorldLineFlag f) const;
};

struct Ensemble {
  std::vector<WorldLine> lines;
  std::uint64_t seed = 0;
};

struct Velocity {
  double v = 0.0;
  bool superluminal = false;
};

// u = j / rho0 for timelike future-pointing j; errors with the causal
// classification otherwise.
std::pair<double, double> four_velocity(double j0, double j1);

// v = j1/j0 (defined wherever j0 is usable, timelike or not).
// eps_j0 is the stagnation floor; at or below it raises ErrorKind::stagnation.
Velocity coordinate_velocity(double j0, double j1, double eps_j0);

// Classical 4th-order stepping of dx/dt = v(x,t), dt_sub = dt/substeps.
// (j0, j1) are interpolated linearly in x and t; a stagnation point halts the
// trajectory with a truncated flag rather than fabricating a jump.
// record_stride > 1 records every stride-th slice (plus the first and last);
// integration itself always proceeds substep by substep.
WorldLine integrate_worldline(double x_start,
                              const std::vector<FourCurrentField>& currents,
                              const SpacetimeLattice& lattice, int substeps,
                              int record_stride = 1);

// Deterministic per (seed, index): position i depends only on seed and i,
// never on n or scheduling.
std::vector<double> sample_positions(const std::vector<double>& j0_slice,
                                     const SpacetimeLattice& lattice, int n,
                                     std::uint64_t seed);

// Kolmogorov-Smirnov distance between the empirical positions and the CDF of
// the (non-negative) density slice.
double equivariance_stat(std::vector<double> positions,
                         const std::vector<double>& j0_slice,
                         const SpacetimeLattice& lattice);

// Integrates one worldline per start, optionally across threads; output is
// indexed by start and independent of the worker count.
Ensemble integrate_ensemble(const std::vector<double>& starts,
                            const std::vector<FourCurrentField>& currents,
                            const SpacetimeLattice& lattice, int substeps,
                            std::uint64_t seed, int workers,
                            int record_stride = 1);

// max |x_{s+1} - 2 x_s + x_{s-1}| / dt^2 over interior samples.
double max_second_difference(const WorldLine& line);

// Bilinear interpolation of (j0, j1) at (x, t) over a slice stack, periodic
// in x, clamped in t. The trajectory integrator and the on-shell report both
// read the field through this one function.
void interpolate_current(const std::vector<FourCurrentField>& currents,
                         const SpacetimeLattice& lattice, double x, double t,
                         double& j0, double& j1);

}  // namespace rlab
