#pragma once

#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

/* chi of the union of r-balls, computed without any triangulation: k balls
   of radius r share a point iff the minimum enclosing ball of their centers
   has radius <= r, so the nerve is read off subset-by-subset and
   chi = sum over nonempty subsets S of (-1)^(|S|+1) [meb(S) <= r].
   Monotonicity of meb under inclusion prunes the enumeration. */
int cech_chi_oracle(const PointCloud& cloud, double r);

}  // namespace ecp
