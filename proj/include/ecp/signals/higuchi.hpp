#pragma once

#include "ecp/embedding/series.hpp"

namespace ecp {

struct HiguchiParams {
    int p_max = 8;  // largest stride over which curve lengths are measured
};

// 8 for windows of 64+ samples, an eighth of the window otherwise, never
// below the minimum the regression needs
int higuchi_default_pmax(int window_len);

/* Negated slope of log mean curve length against log scale.  1 for smooth
   rectifiable curves, approaching 2 for planar self-similar noise. */
double higuchi_fd(const TimeSeries& series, const HiguchiParams& params);

}  // namespace ecp
