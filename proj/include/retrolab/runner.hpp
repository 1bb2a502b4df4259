#pragma once

#include <string>

#include "retrolab/config.hpp"
#include "retrolab/io.hpp"

namespace rlab {

// Each run writes its CSV outputs and manifest.txt under the resolved output
// directory and returns the manifest. Checks that fail leave the files in
// place and flip the manifest's overall status; hard errors (bad config,
// degenerate channels, unwritable paths) throw.

RunManifest run_evolve(const SimConfig& config, const std::string& out_dir);
RunManifest run_guide(const SimConfig& config, const std::string& out_dir);
RunManifest run_weak(const SimConfig& config, const std::string& out_dir);
RunManifest run_retro(const SimConfig& config, const std::string& out_dir);
RunManifest run_boost_check(const SimConfig& config,
                            const std::string& out_dir);
RunManifest run_verify(const SimConfig& config, const std::string& out_dir);

// Precedence: explicit override, then RETROLAB_OUTPUT_DIR, then the config.
// The manifest echoes only the config value, so two runs of the same config
// into different directories stay byte-identical.
std::string resolve_output_dir(const SimConfig& config,
                               const std::string& override_dir);

// RETROLAB_WORKERS overrides the config's worker count.
int resolve_workers(const SimConfig& config);

}  // namespace rlab
