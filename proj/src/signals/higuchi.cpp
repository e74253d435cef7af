#include "ecp/signals/higuchi.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "ecp/errors.hpp"

namespace ecp {

int higuchi_default_pmax(int window_len) {
    if (window_len >= 64) return 8;
    return std::max(2, window_len / 8);
}

double higuchi_fd(const TimeSeries& series, const HiguchiParams& params) {
    const int len = static_cast<int>(series.size());
    if (params.p_max < 2)
        throw OutOfRange("higuchi needs p_max >= 2, got " +
                         std::to_string(params.p_max));
    if (len < 4 * params.p_max)
        throw SeriesTooShort("higuchi with p_max=" +
                             std::to_string(params.p_max) +
                             " needs at least " +
                             std::to_string(4 * params.p_max) +
                             " samples, got " + std::to_string(len));

    const std::vector<double>& x = series.values;
    std::vector<double> log_p, log_len;
    for (int p = 1; p <= params.p_max; ++p) {
        double mean_len = 0.0;
        for (int start = 0; start < p; ++start) {
            const int steps = (len - 1 - start) / p;
            double sum = 0.0;
            for (int i = 1; i <= steps; ++i)
                sum += std::abs(x[start + i * p] - x[start + (i - 1) * p]);
            // normalized so a unit-slope line yields (len-1)/p at every p
            mean_len += sum * (len - 1) /
                        (static_cast<double>(steps) * p) / p;
        }
        mean_len /= p;
        if (mean_len <= 0.0)
            throw DegenerateSeries("series has no curve length at stride " +
                                   std::to_string(p));
        log_p.push_back(std::log(static_cast<double>(p)));
        log_len.push_back(std::log(mean_len));
    }

    const std::size_t m = log_p.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += log_p[i];
        sy += log_len[i];
        sxx += log_p[i] * log_p[i];
        sxy += log_p[i] * log_len[i];
    }
    const double slope = (static_cast<double>(m) * sxy - sx * sy) /
                         (static_cast<double>(m) * sxx - sx * sx);
    return -slope;
}

}  // namespace ecp
