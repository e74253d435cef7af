#pragma once

#include <cstdint>

#include "ecp/embedding/series.hpp"

namespace ecp {

/* x_{n+1} = lambda(n) x_n (1 - x_n) iterated from x0, with the first
   burn_in iterates discarded.  noise_sigma adds observation noise to the
   recorded values only; the orbit itself stays clean. */
struct LogisticParams {
    enum class Schedule { kConstant, kStep, kSweep };

    Schedule schedule = Schedule::kConstant;
    double lambda1 = 3.5;  // constant value, step start, or sweep start
    double lambda2 = 3.5;  // step end or sweep end
    int t0 = 0;            // recorded index where a step switches
    int n = 1000;          // recorded samples
    double x0 = 0.4;
    int burn_in = 500;
    double noise_sigma = 0.0;
};

LogisticParams logistic_constant(double lambda, int n);
LogisticParams logistic_step(double from, double to, int t0, int n);
LogisticParams logistic_sweep(double from, double to, int n);

TimeSeries gen_logistic(const LogisticParams& params, std::uint64_t seed);

}  // namespace ecp
