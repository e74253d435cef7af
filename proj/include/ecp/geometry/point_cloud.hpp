#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace ecp {

// z is ignored when the ambient dimension is 2
using Point = std::array<double, 3>;

/* Ordered list of points in R^2 or R^3.  Order matters (delay embeddings
   address windows by position), so construction keeps duplicates; geometric
   operations merge coincident points themselves and report how many they
   collapsed. */
struct PointCloud {
    std::vector<Point> pts;
    int dim = 2;

    PointCloud() = default;
    PointCloud(std::vector<Point> p, int d);

    std::size_t size() const { return pts.size(); }
    bool empty() const { return pts.empty(); }
};

double dist2(const Point& a, const Point& b, int dim);

/* Points closer than `tol` collapse onto their first occurrence (scan order,
   so the result is deterministic).  multiplicity[i] counts how many inputs
   landed on survivor i. */
struct MergeResult {
    std::vector<Point> pts;
    std::vector<int> multiplicity;
    std::size_t merged_away = 0;
};

inline constexpr double kMergeTol = 1e-12;

MergeResult merge_duplicates(const std::vector<Point>& pts, int dim,
                             double tol = kMergeTol);

}  // namespace ecp
