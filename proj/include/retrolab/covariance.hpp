#pragma once

#include "retrolab/guidance.hpp"
#include "retrolab/spinor.hpp"

namespace rlab {

// Boost parameters; |eta| is capped at 5 to keep cosh/sinh within the range
// where the 1e-12 tolerances are meaningful.
struct BoostParams {
  double rapidity = 0.0;
};

inline constexpr double kMaxRapidity = 5.0;

// Passive boost to a frame moving with velocity tanh(eta):
// j0' = cosh(eta) j0 - sinh(eta) j1, j1' = -sinh(eta) j0 + cosh(eta) j1.
std::pair<double, double> boost_vector(double j0, double j1, double eta);

// Spinor boost S(eta) paired with boost_vector so that
// dirac_current(S psi) = Lambda(eta) dirac_current(psi) pointwise:
// S = cosh(eta/2) I - sinh(eta/2) alpha.
Spinor boost_spinor(const Spinor& psi, double eta);

// v' = (v - tanh eta) / (1 - v tanh eta). Fixed points at v = +-1.
double velocity_addition(double v, double eta);

// Max discrepancy across the plane-wave covariance checks: boosted-spinor
// current vs vector-boosted current, dispersion of the boosted mode
// (E', k') = Lambda (E, k), spinor mapping onto the boosted eigenspinor, and
// phase invariance k x - E t at sample points.
double covariance_error_planewave(double k, double m, double eta);

// Boosts every sample (t, x) and u, re-sorts by the new time. A subluminal
// worldline stays monotonic; a superluminal (weak-current) segment that
// reverses time order gets a frame_order_reversal flag, not an error.
WorldLine boost_worldline(const WorldLine& worldline, double eta);

}  // namespace rlab
