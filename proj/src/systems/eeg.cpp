#include "ecp/systems/eeg.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ecp/errors.hpp"
#include "ecp/rng.hpp"

namespace ecp {

TimeSeries gen_eeg(const EegParams& p, std::uint64_t seed) {
    if (p.sample_rate <= 0.0)
        throw OutOfRange("sample rate must be positive, got " +
                         std::to_string(p.sample_rate));
    if (p.duration_s <= 0.0)
        throw OutOfRange("duration must be positive");
    if (p.seizure_start_s < 0.0 || p.seizure_end_s < p.seizure_start_s ||
        p.seizure_end_s > p.duration_s)
        throw OutOfRange("seizure span must sit inside the recording");

    SplitMix64 rng(seed);
    // delta through beta bands, amplitudes falling off roughly as 1/f
    const double bands[4] = {2.0, 5.0, 10.0, 20.0};
    double phase[4], amp[4];
    for (int b = 0; b < 4; ++b) {
        phase[b] = rng.uniform(0.0, 2.0 * M_PI);
        amp[b] = 40.0 / bands[b];
    }
    const double spike_phase = rng.uniform(0.0, 2.0 * M_PI);

    const long n = std::lround(p.duration_s * p.sample_rate);
    std::vector<double> v, ts;
    v.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / p.sample_rate;
        double x = 2.0 * rng.gaussian();
        for (int b = 0; b < 4; ++b)
            x += amp[b] * std::sin(2.0 * M_PI * bands[b] * t + phase[b]);
        if (t >= p.seizure_start_s && t < p.seizure_end_s) {
            // 3 Hz spike-wave with harmonics, roughly 10x the background
            const double w = 2.0 * M_PI * 3.0 * t + spike_phase;
            x += 150.0 * std::sin(w) + 90.0 * std::sin(2.0 * w) +
                 45.0 * std::sin(3.0 * w);
        }
        v.push_back(x);
        ts.push_back(t);
    }
    return TimeSeries(std::move(v), std::move(ts));
}

}  // namespace ecp
