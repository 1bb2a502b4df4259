#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "retrolab/currents.hpp"
#include "retrolab/fields.hpp"
#include "retrolab/guidance.hpp"

namespace rlab {

// One executed check: a measured value compared against a threshold. The
// comparison direction is part of the check's definition; most checks pass
// when value <= tolerance.
struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Flat key = value report of one run. Deterministic content only: the config
// echo, version, seed and the executed checks. Wall-clock timing goes to the
// console, never into the manifest, so identical (config, seed) runs produce
// byte-identical files.
struct RunManifest {
  std::string command;
  std::string version;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<CheckResult> checks;

  void add(const std::string& name, double value, double tolerance,
           bool passed);
  // value <= tolerance
  void add_le(const std::string& name, double value, double tolerance);
  bool overall() const;
};

// Lossless round-trip decimal form (17 significant digits).
std::string format_real(double v);

void ensure_directory(const std::string& path);

void write_manifest(const RunManifest& manifest, const std::string& path);

// traj_id, t, x, u0, u1, flags. Flags are |-joined token lists.
void write_trajectories_csv(const Ensemble& ensemble, const std::string& path);

// t, x, re_psi1, im_psi1, re_psi2, im_psi2
void write_fields_csv(const FieldHistory& history, const std::string& path);

// t, x, re_phi, im_phi, re_pi, im_pi
void write_kg_fields_csv(const KGHistory& history, const std::string& path);

// t, x, j0, j1, causal_class
void write_currents_csv(const std::vector<FourCurrentField>& currents,
                        const SpacetimeLattice& lattice,
                        const std::string& path);

const char* causal_name(Causal c);
const char* flag_name(WorldLineFlag f);

}  // namespace rlab
