#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rlab {

enum class Backend { dirac, klein_gordon };
enum class ChannelBasis { position, momentum };

struct PacketParams {
  double center = 0.0;
  double width = 1.0;
  double momentum = 0.0;
};

// Run configuration, natural units (hbar = c = 1).
//
// Required keys: nx, dx, dt, n_steps, mass, packet.center, packet.width,
// packet.momentum, seed, n_traj, backend, potential.
// Optional keys (defaults in parentheses): x_min (-nx*dx/2), substeps (4),
// output_dir ("out"), workers (1), final.center/width/momentum (packet.*),
// boost.rapidity (0.5), channel_basis ("position").
struct SimConfig {
  int nx = 0;
  double dx = 0.0;
  double dt = 0.0;
  int n_steps = 0;
  double mass = 0.0;
  PacketParams packet;
  PacketParams final_packet;
  std::uint64_t seed = 0;
  int n_traj = 0;
  Backend backend = Backend::dirac;
  std::string potential = "none";
  double x_min = 0.0;
  int substeps = 4;
  std::string output_dir = "out";
  int workers = 1;
  double boost_rapidity = 0.5;
  ChannelBasis channel_basis = ChannelBasis::position;

  double span() const { return n_steps * dt; }
};

// Parses flat `key = value` text; `#` starts a comment. Unknown, duplicate,
// missing or unparsable keys raise ErrorKind::config naming the key and line.
SimConfig parse_config(const std::string& text);

SimConfig load_config(const std::string& path);

// Canonical key = value echo of a resolved config (defaults applied), stable
// ordering. Used for the manifest.
std::vector<std::pair<std::string, std::string>> config_echo(const SimConfig& c);

const char* backend_name(Backend b);
const char* channel_basis_name(ChannelBasis b);

}  // namespace rlab
