#pragma once

#include "ecp/embedding/series.hpp"
#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

struct EmbeddingParams {
    int tau = 1;  // delay in samples
    int d = 2;    // embedding dimension, 2 or 3
};

// point i = (x_i, x_{i+tau}, ..., x_{i+(d-1)tau}); order preserved,
// N - (d-1)*tau points in total
PointCloud takens_embed(const TimeSeries& series, const EmbeddingParams& p);

/* hit_cap marks a selection that exhausted its candidates without meeting
   the criterion and fell back to the cap; callers should surface that. */
struct DelayChoice {
    int tau = 1;
    bool hit_cap = false;
};
struct DimChoice {
    int d = 2;
    bool hit_cap = false;
};

// smallest tau whose histogram mutual information I(x_t; x_{t+tau}) sits at
// a local minimum; equal-width histogram with ceil(sqrt(N)) bins per axis
DelayChoice select_delay_mi(const TimeSeries& series, int tau_max);

// smallest d whose false-nearest-neighbour fraction drops below 2%
// (distance ratio over 10 or lifted distance over twice the series spread)
DimChoice select_dim_fnn(const TimeSeries& series, int tau, int d_max);

}  // namespace ecp
