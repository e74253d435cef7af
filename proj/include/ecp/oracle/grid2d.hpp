#pragma once

#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

struct GridSpec {
    double lo[2] = {0, 0};
    double hi[2] = {1, 1};
    int resolution = 16;  // cells per axis at the coarsest attempt
};

// box holding every ball with a further one-radius margin
GridSpec grid_spec_for(const PointCloud& x, const PointCloud* y, double r,
                       int resolution);

/* chi of the rasterized region as vertices - edges + squares of the closed
   occupied cells (centers sampled).  The resolution doubles until two
   successive values agree; three doublings without agreement mean r sits on
   a topological transition and the caller gets NoConvergence. */
int grid_chi_union(const PointCloud& x, double r, const GridSpec& grid);
int grid_chi_intersect(const PointCloud& x, const PointCloud& y, double r,
                       const GridSpec& grid);

}  // namespace ecp
