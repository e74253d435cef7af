#include "ecp/embedding/takens.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ecp/errors.hpp"

namespace ecp {

PointCloud takens_embed(const TimeSeries& series, const EmbeddingParams& p) {
    if (p.tau < 1)
        throw OutOfRange("delay must be positive, got " + std::to_string(p.tau));
    if (p.d != 2 && p.d != 3)
        throw DimensionUnsupported("embedding dimension must be 2 or 3, got " +
                                   std::to_string(p.d));
    const std::size_t span = static_cast<std::size_t>(p.d - 1) *
                             static_cast<std::size_t>(p.tau);
    const std::size_t n = series.size();
    if (n <= span)
        throw SeriesTooShort("embedding with tau=" + std::to_string(p.tau) +
                             ", d=" + std::to_string(p.d) + " needs more than " +
                             std::to_string(span) + " samples, got " +
                             std::to_string(n));

    std::vector<Point> pts;
    pts.reserve(n - span);
    for (std::size_t i = 0; i + span < n; ++i) {
        Point q{0.0, 0.0, 0.0};
        for (int j = 0; j < p.d; ++j)
            q[j] = series.values[i + static_cast<std::size_t>(j) * p.tau];
        pts.push_back(q);
    }
    return PointCloud(std::move(pts), p.d);
}

namespace {

// histogram estimate of I(x_t; x_{t+tau}) in nats, bins spanning [lo, hi]
double lagged_mi(const std::vector<double>& x, int tau, int bins, double lo,
                 double hi) {
    const std::size_t m = x.size() - static_cast<std::size_t>(tau);
    const double width = (hi - lo) / bins;
    const auto bin_of = [&](double v) {
        return std::min(static_cast<int>((v - lo) / width), bins - 1);
    };
    std::vector<int> px(static_cast<std::size_t>(bins), 0);
    std::vector<int> py(static_cast<std::size_t>(bins), 0);
    std::vector<int> pxy(static_cast<std::size_t>(bins) * bins, 0);
    for (std::size_t t = 0; t < m; ++t) {
        const int bx = bin_of(x[t]);
        const int by = bin_of(x[t + tau]);
        ++px[bx];
        ++py[by];
        ++pxy[static_cast<std::size_t>(bx) * bins + by];
    }
    double mi = 0.0;
    for (int bx = 0; bx < bins; ++bx)
        for (int by = 0; by < bins; ++by) {
            const int c = pxy[static_cast<std::size_t>(bx) * bins + by];
            if (c == 0) continue;
            const double pj = static_cast<double>(c) / m;
            mi += pj * std::log(pj * m * m /
                                (static_cast<double>(px[bx]) * py[by]));
        }
    return mi;
}

}  // namespace

DelayChoice select_delay_mi(const TimeSeries& series, int tau_max) {
    if (tau_max < 1)
        throw OutOfRange("tau_max must be positive, got " +
                         std::to_string(tau_max));
    const std::size_t n = series.size();
    if (n < 4 * static_cast<std::size_t>(tau_max))
        throw SeriesTooShort("delay selection up to tau_max=" +
                             std::to_string(tau_max) + " needs at least " +
                             std::to_string(4 * tau_max) + " samples, got " +
                             std::to_string(n));

    const auto [lo_it, hi_it] =
        std::minmax_element(series.values.begin(), series.values.end());
    if (*lo_it == *hi_it)
        throw DegenerateSeries("series range is zero, nothing to histogram");
    const int bins =
        static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));

    std::vector<double> mi(static_cast<std::size_t>(tau_max) + 1, 0.0);
    for (int tau = 1; tau <= tau_max; ++tau)
        mi[tau] = lagged_mi(series.values, tau, bins, *lo_it, *hi_it);

    for (int tau = 1; tau < tau_max; ++tau) {
        const bool falls_from_left = tau == 1 || mi[tau] < mi[tau - 1];
        if (falls_from_left && mi[tau] <= mi[tau + 1]) return {tau, false};
    }
    return {tau_max, true};
}

DimChoice select_dim_fnn(const TimeSeries& series, int tau, int d_max) {
    if (tau < 1)
        throw OutOfRange("delay must be positive, got " + std::to_string(tau));
    if (d_max < 1)
        throw OutOfRange("d_max must be positive, got " +
                         std::to_string(d_max));
    const std::size_t n = series.size();
    const std::size_t need = static_cast<std::size_t>(d_max) * tau + 10;
    if (n < need)
        throw SeriesTooShort("dimension selection up to d_max=" +
                             std::to_string(d_max) + " with tau=" +
                             std::to_string(tau) + " needs at least " +
                             std::to_string(need) + " samples, got " +
                             std::to_string(n));

    const std::vector<double>& x = series.values;
    double mean = 0.0;
    for (const double v : x) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const double v : x) var += (v - mean) * (v - mean);
    const double spread = std::sqrt(var / static_cast<double>(n));
    if (spread == 0.0)
        throw DegenerateSeries("series range is zero, all neighbours tie");

    constexpr double kRTol = 10.0;  // distance blow-up marking a false pair
    constexpr double kATol = 2.0;   // lifted distance vs attractor spread
    for (int d = 1; d <= d_max; ++d) {
        // neighbours in d dimensions among points that still have a
        // (d+1)-th coordinate to lift into
        const std::size_t m = n - static_cast<std::size_t>(d) * tau;
        std::size_t counted = 0, false_pairs = 0;
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t best = m;
            double best_d2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                double d2 = 0.0;
                for (int c = 0; c < d; ++c) {
                    const double diff =
                        x[i + static_cast<std::size_t>(c) * tau] -
                        x[j + static_cast<std::size_t>(c) * tau];
                    d2 += diff * diff;
                }
                if (best == m || d2 < best_d2) {
                    best = j;
                    best_d2 = d2;
                }
            }
            if (best == m) continue;
            const double lift = x[i + static_cast<std::size_t>(d) * tau] -
                                x[best + static_cast<std::size_t>(d) * tau];
            ++counted;
            if (best_d2 == 0.0) {
                // exact recurrence; false only if the lift separates it
                if (lift != 0.0) ++false_pairs;
                continue;
            }
            const double rd = std::sqrt(best_d2);
            if (std::abs(lift) / rd > kRTol ||
                std::sqrt(best_d2 + lift * lift) / spread > kATol)
                ++false_pairs;
        }
        if (counted > 0 &&
            static_cast<double>(false_pairs) / counted < 0.02)
            return {d, false};
    }
    return {d_max, true};
}

}  // namespace ecp
