#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

struct Simplex {
    std::vector<int> vertices;  // strictly increasing indices into points
    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

struct FiltrationEntry {
    Simplex simplex;
    double value;  // radius at which the simplex enters
};

// Alpha filtration of the Delaunay complex, in radius units.  Gabriel
// simplices carry their own circumradius; a face whose circumball is not
// empty inherits the minimum value over its cofaces.  At radius r the
// subcomplex {value <= r} is homotopy equivalent to the union of r-balls,
// so Euler characteristics can be read off the entry list directly.
struct Filtration {
    std::vector<Point> points;  // after duplicate merge; indices refer here
    std::vector<int> multiplicity;
    std::size_t merged_away = 0;
    bool jittered = false;
    int rank = 0;
    // sorted by (value, dim, vertices); vertices enter at 0; face-closed
    std::vector<FiltrationEntry> entries;
};

Filtration alpha_filtration(const PointCloud& cloud);

// one line per simplex: vertices semicolon-joined, then the value
void filtration_csv(const Filtration& f, std::ostream& os);

}  // namespace ecp
