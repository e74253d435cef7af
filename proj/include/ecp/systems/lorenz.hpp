#pragma once

#include "ecp/embedding/series.hpp"
#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

/* Piecewise-constant rho: rho_pre before switch_time, rho_post from there
   on.  Time is measured from the start of the recording; the burn-in runs
   before t = 0 entirely at rho_pre. */
struct LorenzParams {
    double sigma = 10.0;
    double beta = 8.0 / 3.0;
    double rho_pre = 20.0;
    double rho_post = 28.0;
    double switch_time = 50.0;
    double dt = 0.01;
    double duration = 100.0;
    double burn_in = 10.0;
    Point initial_state{1.0, 1.0, 1.0};
};

struct LorenzRun {
    PointCloud trajectory;  // full 3d state per recorded step
    TimeSeries x;           // x component, timestamps in time units
};

// fixed-step Runge-Kutta 4 integration of the Lorenz equations
LorenzRun gen_lorenz(const LorenzParams& params);

}  // namespace ecp
