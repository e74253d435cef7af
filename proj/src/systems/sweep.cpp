#include "ecp/systems/sweep.hpp"

#include <cmath>
#include <string>

#include "ecp/ecc/mixup.hpp"
#include "ecp/embedding/takens.hpp"
#include "ecp/errors.hpp"
#include "ecp/rng.hpp"
#include "ecp/signals/signals.hpp"
#include "ecp/systems/logistic.hpp"
#include "ecp/systems/lyapunov.hpp"

namespace ecp {

namespace {

// one thinned (x_n, x_{n+1}) cloud for a constant-lambda orbit
PointCloud orbit_cloud(double lambda, const SweepConfig& cfg) {
    const TimeSeries series =
        gen_logistic(logistic_constant(lambda, cfg.series_len), cfg.seed);
    return thin_uniform(takens_embed(series, {1, 2}), cfg.subsample);
}

}  // namespace

std::vector<SweepRow> sweep_logistic(const std::vector<double>& grid,
                                     const SweepConfig& cfg) {
    if (grid.empty()) throw OutOfRange("the lambda grid must not be empty");
    if (cfg.series_len < 3)
        throw OutOfRange("series length too small to embed");

    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double here = grid[i];
        const double next = grid[std::min(i + 1, grid.size() - 1)];
        SweepRow row;
        row.lambda = here;
        row.s = mixup_ecp(orbit_cloud(here, cfg), orbit_cloud(next, cfg))
                    .s_stat;
        row.lambda1 = lyapunov_logistic(here, cfg.lyap_iters).lambda1;
        rows.push_back(row);
    }
    return rows;
}

std::vector<NoiseSweepRow> noise_sweep(const std::vector<double>& sigmas,
                                       int trials,
                                       const NoiseSweepConfig& cfg) {
    if (sigmas.empty()) throw OutOfRange("the sigma list must not be empty");
    if (trials < 1)
        throw OutOfRange("need at least one trial, got " +
                         std::to_string(trials));
    const int t0 = cfg.pre_len;
    const int n_total = cfg.pre_len + cfg.post_len;
    if (t0 < 2 * cfg.w || t0 + cfg.w >= n_total - 1)
        throw OutOfRange("windows of w " + std::to_string(cfg.w) +
                         " do not fit around the step");
    if (cfg.g_w < 2 || cfg.g_w > t0 || t0 + cfg.g_w > n_total)
        throw OutOfRange("raw windows of " + std::to_string(cfg.g_w) +
                         " samples do not fit around the step");

    std::vector<NoiseSweepRow> rows;
    rows.reserve(sigmas.size());
    for (std::size_t si = 0; si < sigmas.size(); ++si) {
        const double sigma = sigmas[si];
        std::vector<double> s_vals, g_vals;
        for (int trial = 0; trial < trials; ++trial) {
            const std::uint64_t trial_seed =
                SplitMix64::stream(cfg.seed,
                                   si * static_cast<std::size_t>(trials) +
                                       static_cast<std::size_t>(trial))
                    .next();
            LogisticParams p = logistic_step(cfg.lambda_pre, cfg.lambda_post,
                                             t0, n_total);
            p.noise_sigma = sigma;
            const TimeSeries series = gen_logistic(p, trial_seed);
            const PointCloud embedded = takens_embed(series, {1, 2});
            const WindowPair wp = window_pair(embedded, t0, cfg.w);

            s_vals.push_back(static_cast<double>(
                mixup_ecp(thin_uniform(wp.X, cfg.subsample),
                          thin_uniform(wp.Y, cfg.subsample))
                    .s_stat));

            const auto slice_var = [&series](int lo, int hi) {
                double mean = 0.0;
                for (int i = lo; i < hi; ++i) mean += series.values[i];
                mean /= hi - lo;
                double ss = 0.0;
                for (int i = lo; i < hi; ++i) {
                    const double d = series.values[i] - mean;
                    ss += d * d;
                }
                return ss / (hi - lo);
            };
            g_vals.push_back(std::abs(slice_var(t0, t0 + cfg.g_w) -
                                      slice_var(t0 - cfg.g_w, t0)));
        }

        NoiseSweepRow row;
        row.sigma = sigma;
        const auto mean_sd = [trials](const std::vector<double>& v,
                                      double& mean, double& sd) {
            mean = 0.0;
            for (const double x : v) mean += x;
            mean /= trials;
            double ss = 0.0;
            for (const double x : v) ss += (x - mean) * (x - mean);
            sd = std::sqrt(ss / trials);
        };
        mean_sd(s_vals, row.s_mean, row.s_sd);
        mean_sd(g_vals, row.g_mean, row.g_sd);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ecp
