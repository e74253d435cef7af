#include "ecp/inference/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "ecp/ecc/mixup.hpp"
#include "ecp/embedding/takens.hpp"
#include "ecp/errors.hpp"
#include "ecp/rng.hpp"
#include "ecp/signals/signals.hpp"

namespace ecp {

PermutationResult perm_test(const PointCloud& X, const PointCloud& Y, int B,
                            std::uint64_t seed) {
    if (X.dim != Y.dim)
        throw DimensionMismatch("cannot pool clouds of dimension " +
                                std::to_string(X.dim) + " and " +
                                std::to_string(Y.dim));
    if (X.size() != Y.size())
        throw SizeMismatch("balanced splits need equal window sizes, got " +
                           std::to_string(X.size()) + " and " +
                           std::to_string(Y.size()));
    if (B < 1)
        throw OutOfRange("permutation count must be positive, got " +
                         std::to_string(B));

    PermutationResult out;
    out.B = B;
    out.s_obs = mixup_ecp(X, Y).s_stat;

    const std::size_t n = X.size();
    std::vector<Point> pool = X.pts;
    pool.insert(pool.end(), Y.pts.begin(), Y.pts.end());

    out.null_samples.reserve(static_cast<std::size_t>(B));
    std::vector<std::size_t> order(pool.size());
    for (int b = 0; b < B; ++b) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(b));
        rng.shuffle(order);

        std::vector<Point> left, right;
        left.reserve(n);
        right.reserve(n);
        for (std::size_t i = 0; i < n; ++i) left.push_back(pool[order[i]]);
        for (std::size_t i = n; i < order.size(); ++i)
            right.push_back(pool[order[i]]);
        out.null_samples.push_back(
            mixup_ecp(PointCloud(std::move(left), X.dim),
                      PointCloud(std::move(right), X.dim))
                .s_stat);
    }

    int below = 0;
    double sum = 0.0;
    for (const int s : out.null_samples) {
        if (s <= out.s_obs) ++below;
        sum += s;
    }
    out.p_value = static_cast<double>(below) / B;
    out.null_mean = sum / B;
    double ss = 0.0;
    for (const int s : out.null_samples) {
        const double d = s - out.null_mean;
        ss += d * d;
    }
    out.null_sd = std::sqrt(ss / B);
    return out;
}

void null_samples_csv(const PermutationResult& result, std::ostream& out) {
    out << "pi,s\n";
    for (std::size_t i = 0; i < result.null_samples.size(); ++i)
        out << i << ',' << result.null_samples[i] << '\n';
}

MultiDelayStat multi_delay_stat(const TimeSeries& series, int t,
                                const MultiDelayParams& params) {
    if (params.taus.empty())
        throw OutOfRange("the delay set must not be empty");
    for (std::size_t i = 0; i < params.taus.size(); ++i) {
        if (params.taus[i] < 1)
            throw OutOfRange("delays must be positive, got " +
                             std::to_string(params.taus[i]));
        if (i > 0 && params.taus[i] <= params.taus[i - 1])
            throw OutOfRange("the delay set must climb strictly");
    }

    MultiDelayStat out;
    bool first = true;
    for (const int tau : params.taus) {
        PointCloud embedded;
        try {
            embedded = takens_embed(series, {tau, params.d});
        } catch (const SeriesTooShort&) {
            throw SeriesTooShort("series too short to embed at tau " +
                                 std::to_string(tau));
        }
        const int m = static_cast<int>(embedded.size());
        if (t < 2 * params.w || t + params.w >= m)
            throw SeriesTooShort("windows at t " + std::to_string(t) +
                                 " do not fit the embedding at tau " +
                                 std::to_string(tau));
        const WindowPair wp = window_pair(embedded, t, params.w);
        const int s = mixup_ecp(thin_uniform(wp.X, params.n),
                                thin_uniform(wp.Y, params.n))
                          .s_stat;
        if (first || s > out.s_star) {
            out.s_star = s;
            out.tau_star = tau;
            first = false;
        }
    }
    return out;
}

}  // namespace ecp
