#include "ecp/geometry/point_cloud.hpp"

#include "ecp/errors.hpp"

namespace ecp {

PointCloud::PointCloud(std::vector<Point> p, int d) : pts(std::move(p)), dim(d) {
    if (d != 2 && d != 3)
        throw DimensionUnsupported("point cloud dimension must be 2 or 3, got " +
                                   std::to_string(d));
    if (d == 2)
        for (auto& pt : pts) pt[2] = 0.0;
}

double dist2(const Point& a, const Point& b, int dim) {
    double s = 0;
    for (int j = 0; j < dim; ++j) {
        const double d = a[j] - b[j];
        s += d * d;
    }
    return s;
}

MergeResult merge_duplicates(const std::vector<Point>& pts, int dim, double tol) {
    MergeResult r;
    const double tol2 = tol * tol;
    for (const auto& p : pts) {
        bool absorbed = false;
        for (std::size_t k = 0; k < r.pts.size(); ++k) {
            if (dist2(p, r.pts[k], dim) < tol2) {
                ++r.multiplicity[k];
                ++r.merged_away;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) {
            r.pts.push_back(p);
            r.multiplicity.push_back(1);
        }
    }
    return r;
}

}  // namespace ecp
