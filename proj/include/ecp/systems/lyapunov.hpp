#pragma once

#include <string>

#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

struct LyapunovEstimate {
    double lambda1 = 0.0;  // nats per iteration (map) or per time unit
    std::string method;
};

// orbit average of ln|lambda(1 - 2x)| after a settling prefix
LyapunovEstimate lyapunov_logistic(double lambda, long iterations);

/* Largest exponent from trajectory data alone: track the gap to a nearest
   neighbour over fixed spans, log the growth, pick a fresh neighbour, and
   average.  No access to the vector field is needed. */
LyapunovEstimate lyapunov_trajectory(const PointCloud& trajectory, double dt);

}  // namespace ecp
