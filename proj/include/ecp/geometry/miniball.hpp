#pragma once

#include <vector>

#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

struct Ball {
    Point center{};
    double radius = -1.0;  // negative marks the empty ball
};

// smallest enclosing ball, Welzl's algorithm; count must be in [1, 31]
Ball meb(const std::vector<Point>& pts, int dim);
double meb_radius(const std::vector<Point>& pts, int dim);

}  // namespace ecp
