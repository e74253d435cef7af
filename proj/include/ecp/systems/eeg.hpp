#pragma once

#include <cstdint>

#include "ecp/embedding/series.hpp"

namespace ecp {

/* Synthetic scalp-like signal: band-limited background oscillations with
   1/f amplitudes plus broadband noise, and a high-amplitude 3 Hz
   spike-wave burst superimposed over the seizure span.  Amplitudes are in
   microvolt scale so the output looks like a plausible recording. */
struct EegParams {
    double duration_s = 120.0;
    double seizure_start_s = 60.0;
    double seizure_end_s = 80.0;
    double sample_rate = 256.0;
};

TimeSeries gen_eeg(const EegParams& params, std::uint64_t seed);

}  // namespace ecp
