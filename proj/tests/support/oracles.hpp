#pragma once

#include <vector>

#include "ecp/geometry/point_cloud.hpp"

namespace ecp::testsupport {

// smallest enclosing ball radius by exhaustive support-subset enumeration,
// with its own tiny linear solver so it shares no code with the library
double exhaustive_meb_radius(const std::vector<Point>& pts, int dim);

// true iff some empty circle passes through both endpoints (2D, tol 1e-9)
bool edge_has_empty_circle(const std::vector<Point>& pts, int a, int b);

// no point strictly inside the circumball of the simplex, squared tol 1e-9
bool circumball_is_empty(const std::vector<Point>& pts,
                         const std::vector<int>& simplex, int dim);

std::vector<Point> random_cloud(unsigned long long seed, int n, int dim,
                                double span = 1.0);

// sorted radii where the union-of-balls topology can change: alpha
// filtration values plus every subset's enclosing-ball radius (n <= 12)
std::vector<double> critical_radii(const PointCloud& cloud);

// the alpha values alone; topology transitions of the union live here,
// so this is the list raster probes must keep their distance from
std::vector<double> transition_radii(const PointCloud& cloud);

/* Radii at which chi comparisons are stable: midpoints between consecutive
   distinct critical values, one probe below the first and one beyond the
   last.  min_gap drops transitions too close together to separate
   reliably. */
std::vector<double> probe_radii(const PointCloud& cloud, int max_count,
                                double min_gap = 1e-9);

}  // namespace ecp::testsupport
