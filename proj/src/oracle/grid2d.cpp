#include "ecp/oracle/grid2d.hpp"

#include <algorithm>
#include <vector>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

bool in_union(const std::vector<Point>& pts, double cx, double cy, double r2) {
    for (const auto& p : pts) {
        const double dx = cx - p[0], dy = cy - p[1];
        if (dx * dx + dy * dy <= r2) return true;
    }
    return false;
}

int chi_at_resolution(const PointCloud& x, const PointCloud* y, double r,
                      const GridSpec& g, int res) {
    const double r2 = r * r;
    const double wx = (g.hi[0] - g.lo[0]) / res;
    const double wy = (g.hi[1] - g.lo[1]) / res;

    std::vector<char> cell(static_cast<std::size_t>(res) * res, 0);
    long faces = 0;
    for (int j = 0; j < res; ++j) {
        const double cy = g.lo[1] + (j + 0.5) * wy;
        for (int i = 0; i < res; ++i) {
            const double cx = g.lo[0] + (i + 0.5) * wx;
            bool in = in_union(x.pts, cx, cy, r2);
            if (y != nullptr) in = in && in_union(y->pts, cx, cy, r2);
            if (in) {
                cell[static_cast<std::size_t>(j) * res + i] = 1;
                ++faces;
            }
        }
    }

    auto occupied = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= res || j >= res) return false;
        return cell[static_cast<std::size_t>(j) * res + i] != 0;
    };

    long verts = 0, edges = 0;
    for (int j = 0; j <= res; ++j) {
        for (int i = 0; i <= res; ++i) {
            if (occupied(i, j) || occupied(i - 1, j) || occupied(i, j - 1) ||
                occupied(i - 1, j - 1))
                ++verts;
            // edge to the right of node (i,j)
            if (i < res && (occupied(i, j) || occupied(i, j - 1))) ++edges;
            // edge above node (i,j)
            if (j < res && (occupied(i, j) || occupied(i - 1, j))) ++edges;
        }
    }
    return static_cast<int>(verts - edges + faces);
}

int converged_chi(const PointCloud& x, const PointCloud* y, double r,
                  const GridSpec& g) {
    if (x.dim != 2 || (y != nullptr && y->dim != 2))
        throw DimensionUnsupported("grid oracle works in the plane only");
    if (g.resolution < 16)
        throw OutOfRange("grid resolution must be at least 16");
    if (r < 0) throw OutOfRange("ball radius must be nonnegative");

    int prev = chi_at_resolution(x, y, r, g, g.resolution);
    int res = g.resolution;
    for (int doubling = 0; doubling < 3; ++doubling) {
        res *= 2;
        const int cur = chi_at_resolution(x, y, r, g, res);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw NoConvergence("grid chi keeps changing under refinement");
}

}  // namespace

GridSpec grid_spec_for(const PointCloud& x, const PointCloud* y, double r,
                       int resolution) {
    GridSpec g;
    g.resolution = resolution;
    g.lo[0] = g.hi[0] = x.pts[0][0];
    g.lo[1] = g.hi[1] = x.pts[0][1];
    auto widen = [&](const PointCloud& c) {
        for (const auto& p : c.pts) {
            g.lo[0] = std::min(g.lo[0], p[0]);
            g.hi[0] = std::max(g.hi[0], p[0]);
            g.lo[1] = std::min(g.lo[1], p[1]);
            g.hi[1] = std::max(g.hi[1], p[1]);
        }
    };
    widen(x);
    if (y != nullptr) widen(*y);
    for (int j = 0; j < 2; ++j) {
        g.lo[j] -= 2 * r;
        g.hi[j] += 2 * r;
    }
    return g;
}

int grid_chi_union(const PointCloud& x, double r, const GridSpec& grid) {
    return converged_chi(x, nullptr, r, grid);
}

int grid_chi_intersect(const PointCloud& x, const PointCloud& y, double r,
                       const GridSpec& grid) {
    return converged_chi(x, &y, r, grid);
}

}  // namespace ecp
