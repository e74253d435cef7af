#pragma once

#include <cstdint>
#include <vector>

namespace ecp {

/* Protocol for S(lambda): one window generated at each grid value and one
   at the next, so S measures the cross-regime overlap of consecutive grid
   points.  The last grid value pairs with itself. */
struct SweepConfig {
    int series_len = 240;   // recorded samples per lambda
    int subsample = 20;     // points per window after thinning
    long lyap_iters = 200000;
    std::uint64_t seed = 0;
};

struct SweepRow {
    double lambda = 0.0;
    int s = 0;
    double lambda1 = 0.0;
};

std::vector<SweepRow> sweep_logistic(const std::vector<double>& grid,
                                     const SweepConfig& cfg);

/* Noise robustness run: a lambda step under observation noise, windows
   pinned at the step.  S comes from thinned embedded windows; G is the
   variance gap of short raw slices either side of the step, short
   enough that sampling scatter lets heavy noise show up in the mean. */
struct NoiseSweepConfig {
    double lambda_pre = 3.2;
    double lambda_post = 3.8;
    int pre_len = 450;
    int post_len = 250;
    int w = 200;        // embedded window half-width for S
    int subsample = 40; // points per S window after thinning
    int g_w = 50;       // raw samples per side for G
    std::uint64_t seed = 0;
};

struct NoiseSweepRow {
    double sigma = 0.0;
    double s_mean = 0.0, s_sd = 0.0;
    double g_mean = 0.0, g_sd = 0.0;
};

std::vector<NoiseSweepRow> noise_sweep(const std::vector<double>& sigmas,
                                       int trials,
                                       const NoiseSweepConfig& cfg);

}  // namespace ecp
