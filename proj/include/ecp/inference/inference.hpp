#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ecp/embedding/series.hpp"
#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

/* Outcome of the low-side permutation test.  The observed split is suspect
   when its overlap statistic sits in the lower tail of the resampled null,
   so small p flags a regime change. */
struct PermutationResult {
    int s_obs = 0;
    std::vector<int> null_samples;
    int B = 0;
    double p_value = 1.0;  // #{S^pi <= s_obs} / B
    double null_mean = 0.0;
    double null_sd = 0.0;
};

/* Pools the 2n points of X and Y, redraws B random balanced splits and
   scores each with the mixup statistic.  Permutation b consumes its own
   (seed, b) stream, so any evaluation order gives the same null. */
PermutationResult perm_test(const PointCloud& X, const PointCloud& Y, int B,
                            std::uint64_t seed);

// null samples as "pi,s" rows for offline inspection
void null_samples_csv(const PermutationResult& result, std::ostream& out);

/* Delay channels for the aggregate statistic.  taus must be distinct,
   positive and sorted; d, w, n mirror the single-delay signal settings
   (n = 0 keeps windows at full size). */
struct MultiDelayParams {
    std::vector<int> taus;
    int d = 2;
    int w = 1;
    int n = 0;
};

struct MultiDelayStat {
    int s_star = 0;
    int tau_star = 0;  // channel the max came from, ties to the smallest
};

/* S*(t) = max over the delay set of the single-delay statistic at t, so
   S* dominates every channel it aggregates.  Window indices follow the
   embedded-cloud convention of window_pair for each tau separately. */
MultiDelayStat multi_delay_stat(const TimeSeries& series, int t,
                                const MultiDelayParams& params);

}  // namespace ecp
