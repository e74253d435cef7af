#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

/* Delaunay complex of the merged cloud.  Simplex indices refer to `points`
   (the merged coordinates), not to the caller's raw point order.

   rank is the affine rank of the merged points: 0 (single point), 1
   (collinear, complex is the sorted path), 2, or 3.  In R^3 rank-2 inputs are
   triangulated inside their plane; ball unions centered on a lower-dimensional
   flat deformation-retract onto that flat's slice, so the complex is still the
   right one for Euler characteristic purposes. */
struct DelaunayResult {
    std::vector<Point> points;
    std::vector<int> multiplicity;
    std::size_t merged_away = 0;
    bool jittered = false;
    int rank = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> tetrahedra;
};

/* Incremental (Bowyer-Watson) Delaunay triangulation with ghost simplices for
   the hull.  Conflict ties (points exactly on a circumsphere) resolve as
   "outside", so the result is the Delaunay triangulation determined by the
   insertion order, which is the input order: deterministic across runs.
   Inputs that defeat that rule (a new vertex exactly on a cavity wall plane)
   are retried once with a deterministic index-keyed jitter of relative size
   1e-9; if that also fails, DegenerateInput. */
DelaunayResult delaunay(const PointCloud& cloud);

}  // namespace ecp
