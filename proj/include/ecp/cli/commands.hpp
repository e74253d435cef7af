#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ecp/cli/config.hpp"

namespace ecp {

/* Experiment drivers behind the CLI subcommands.  Each writes its
   machine-readable outputs under cfg.out, prints a human summary to `out`,
   and throws (UsageError for misuse, other Error kinds for bad data) so
   the entry point owns the exit-code mapping. */

void cmd_detect(const RunConfig& cfg, std::ostream& out);

void cmd_bench(const RunConfig& cfg, std::ostream& out);

// permutation test of the window pair at candidate index t; dump_null
// optionally names a CSV for the null samples
void cmd_permtest(const RunConfig& cfg, int t, const std::string& dump_null,
                  std::ostream& out);

void cmd_sweep(const RunConfig& cfg, double lo, double hi, double step,
               std::ostream& out);

void cmd_noise_sweep(const RunConfig& cfg, const std::vector<double>& sigmas,
                     int trials, std::ostream& out);

/* Generator passthroughs for `synth logistic`; lorenz and eeg run their
   frozen defaults.  step_at < 0 keeps the map at a constant lambda. */
struct SynthOptions {
    double lambda = 3.5;
    double lambda_to = 3.5;
    int step_at = -1;
    int n = 1000;
    double noise_sigma = 0.0;
};

void cmd_synth(const RunConfig& cfg, const SynthOptions& opt,
               std::ostream& out);

// seeded re-run of the oracle cross-checks; false means a disagreement
bool cmd_verify(std::uint64_t seed, int clouds, std::ostream& out);

void cmd_embed_select(const RunConfig& cfg, std::ostream& out);

}  // namespace ecp
