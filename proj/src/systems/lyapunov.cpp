#include "ecp/systems/lyapunov.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "ecp/errors.hpp"

namespace ecp {

LyapunovEstimate lyapunov_logistic(double lambda, long iterations) {
    if (lambda <= 0.0 || lambda > 4.0)
        throw OutOfRange("lambda must lie in (0, 4], got " +
                         std::to_string(lambda));
    if (iterations < 1)
        throw OutOfRange("need at least one iteration");

    double x = 0.4;
    for (int k = 0; k < 500; ++k) x = lambda * x * (1.0 - x);

    double sum = 0.0;
    for (long k = 0; k < iterations; ++k) {
        const double slope = std::abs(lambda * (1.0 - 2.0 * x));
        // superstable orbits pass through slope zero; floor keeps the
        // average finite instead of dragging it to -inf
        sum += std::log(std::max(slope, 1e-300));
        x = lambda * x * (1.0 - x);
    }
    return {sum / static_cast<double>(iterations), "map-derivative"};
}

LyapunovEstimate lyapunov_trajectory(const PointCloud& trajectory,
                                     double dt) {
    if (dt <= 0.0)
        throw OutOfRange("dt must be positive, got " + std::to_string(dt));
    const std::size_t n = trajectory.size();

    /* Pairs are followed for 1.6 time units and the mean log-gap curve is
       fitted from 0.4 on.  The first stretch sits in the closest-approach
       pocket (the neighbour was found at its distance minimum, so early
       growth overshoots); past the horizon, saturated pairs flatten the
       curve.  Both ends bias the slope away from the exponent. */
    const std::size_t horizon = static_cast<std::size_t>(
        std::max(2l, std::lround(1.6 / dt)));
    const std::size_t fit_lo = std::min(
        static_cast<std::size_t>(std::max(1l, std::lround(0.4 / dt))),
        horizon - 1);
    const std::size_t ref_step = static_cast<std::size_t>(
        std::max(1l, std::lround(0.2 / dt)));
    const std::size_t theiler = static_cast<std::size_t>(
        std::max(1l, std::lround(1.0 / dt)));
    if (n < horizon + theiler + 2)
        throw TooFewPoints("trajectory too short for a divergence span");

    const auto& pts = trajectory.pts;
    const int dim = trajectory.dim;
    std::vector<double> curve(horizon + 1, 0.0);
    std::vector<long> count(horizon + 1, 0);
    for (std::size_t i = 0; i + horizon < n; i += ref_step) {
        std::size_t best = n;
        double best_d2 = 0.0;
        for (std::size_t k = 0; k + horizon < n; ++k) {
            const std::size_t gap = k > i ? k - i : i - k;
            if (gap <= theiler) continue;
            const double d2 = dist2(pts[i], pts[k], dim);
            if (d2 <= 1e-20) continue;
            if (best == n || d2 < best_d2) {
                best = k;
                best_d2 = d2;
            }
        }
        if (best == n) continue;
        for (std::size_t k = 0; k <= horizon; ++k) {
            const double d =
                std::sqrt(dist2(pts[i + k], pts[best + k], dim));
            if (d > 0.0) {
                curve[k] += std::log(d);
                ++count[k];
            }
        }
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long m = 0;
    for (std::size_t k = fit_lo; k <= horizon; ++k) {
        if (count[k] == 0) continue;
        const double x = static_cast<double>(k) * dt;
        const double y = curve[k] / static_cast<double>(count[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2)
        throw DegenerateInput(
            "no usable divergence pairs; trajectory may have collapsed");
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return {slope, "neighbour-divergence"};
}

}  // namespace ecp
