#pragma once

#include <vector>

#include "retrolab/config.hpp"
#include "retrolab/currents.hpp"
#include "retrolab/dynamics.hpp"

namespace rlab {

// Two-particle state on the nx * nx configuration grid, spinor x spinor.
// This is the only object in the codebase that lives in configuration space;
// everything derived from it (conditional fields, per-particle currents) is
// reduced back onto 1-space arrays of length nx.
struct JointField {
  int nx = 0;
  std::vector<cplx> values;  // index ((x1*nx + x2)*2 + s1)*2 + s2
  double time_label = 0.0;

  cplx& at(int x1, int x2, int s1, int s2) {
    return values[static_cast<std::size_t>(((x1 * nx + x2) * 2 + s1) * 2 + s2)];
  }
  const cplx& at(int x1, int x2, int s1, int s2) const {
    return values[static_cast<std::size_t>(((x1 * nx + x2) * 2 + s1) * 2 + s2)];
  }
};

// sqrt(dx^2 sum |Psi|^2).
double joint_norm(const JointField& joint, const SpacetimeLattice& lattice);

// Psi = c1 (a1 x a2) + c2 (b1 x b2), normalized. Errors when both
// coefficients are zero or the combination vanishes.
JointField entangled_joint_state(const SpinorField& a1, const SpinorField& b1,
                                 const SpinorField& a2, const SpinorField& b2,
                                 cplx c1, cplx c2,
                                 const SpacetimeLattice& lattice);

// Free non-interacting evolution, H = H1 x 1 + 1 x H2, exact per 2-D mode.
// Slices ascend in time for both directions.
std::vector<JointField> evolve_joint(const JointField& joint,
                                     const SpacetimeLattice& lattice,
                                     double m1, double m2, int n_steps,
                                     Direction direction);

// Partial inner product: for which = 1,
// psi(x1) = dx * sum_{x2} f_other(x2)^dag Psi(x1, x2), contracting the other
// particle's spinor index. Unnormalized by design; the channel amplitude
// absorbs the scale.
SpinorField conditional_field(const JointField& joint,
                              const SpinorField& f_other, int which,
                              const SpacetimeLattice& lattice);

struct FinalChannel {
  SpinorField f1, f2;
  cplx amplitude = 0.0;  // N = <f1 f2 | Psi>
  double weight = 0.0;   // |N|^2
};

// Channels below this weight are marked negligible but always kept in sums.
inline constexpr double kWeightFloor = 1e-14;

// Complete orthonormal product basis of final outcomes at one time slice.
// Position basis: grid-delta x spinor (2 nx elements per particle);
// momentum basis: plane-wave x spinor. Amplitudes for all (2nx)^2 channels
// are stored; basis fields materialize on access.
class ChannelEnsemble {
 public:
  ChannelEnsemble(ChannelBasis basis, const SpacetimeLattice& lattice,
                  double time_label, std::vector<cplx> amplitudes,
                  bool complete);

  std::size_t size() const { return amplitudes_.size(); }
  std::size_t per_particle() const;  // 2 * nx
  cplx amplitude(std::size_t i) const { return amplitudes_[i]; }
  double weight(std::size_t i) const;
  bool negligible(std::size_t i) const { return weight(i) < kWeightFloor; }
  double weight_sum() const;
  bool complete() const { return complete_; }
  ChannelBasis basis() const { return basis_; }
  double time_label() const { return time_label_; }

  // Basis field for one particle: index = a * 2 + s (position a or mode a,
  // spinor component s).
  SpinorField basis_field(std::size_t index) const;
  FinalChannel channel(std::size_t i) const;
  // (index for particle 1, index for particle 2)
  std::pair<std::size_t, std::size_t> split_index(std::size_t i) const;

  // Deletes one channel; the ensemble is then incomplete and refuses to be
  // Born-averaged.
  void remove_channel(std::size_t i);

 private:
  ChannelBasis basis_;
  SpacetimeLattice lattice_;
  double time_label_;
  std::vector<cplx> amplitudes_;
  bool complete_;
};

ChannelEnsemble final_channel_ensemble(const JointField& joint,
                                       const SpacetimeLattice& lattice,
                                       ChannelBasis basis = ChannelBasis::position);

// Weak current of one particle for one final channel: psi_i is the
// conditional field, psi_f the channel's own final state, N the amplitude.
FourCurrentField per_particle_weak_current(const FinalChannel& channel,
                                           const JointField& joint, int which,
                                           const SpacetimeLattice& lattice);

// sum_f weight_f * (per-particle weak current of f), computed channel by
// channel over the complete set. The weight * (1/N) product is carried as
// conj(N) so channels with vanishing overlap contribute their (zero) limit
// instead of dividing by zero. Equals 2x the marginal current by basis
// completeness; that identity is asserted by tests, never assumed here.
FourCurrentField born_average_current(const ChannelEnsemble& ensemble,
                                      const JointField& joint, int which,
                                      const SpacetimeLattice& lattice);

// Standard current contracted over the other particle: the independent
// oracle for the Born-average identity.
FourCurrentField marginal_current(const JointField& joint, int which,
                                  const SpacetimeLattice& lattice);

}  // namespace rlab
