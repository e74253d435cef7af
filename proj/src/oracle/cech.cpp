#include "ecp/oracle/cech.hpp"

#include <bit>
#include <vector>

#include "ecp/errors.hpp"
#include "ecp/geometry/miniball.hpp"

namespace ecp {

int cech_chi_oracle(const PointCloud& cloud, double r) {
    if (r < 0) throw OutOfRange("ball radius must be nonnegative");
    const MergeResult m = merge_duplicates(cloud.pts, cloud.dim);
    const unsigned n = static_cast<unsigned>(m.pts.size());
    if (n > 20)
        throw TooManyPoints("subset enumeration oracle capped at 20 points");

    std::vector<char> occ(std::size_t{1} << n, 0);
    std::vector<Point> subset;
    int chi = 0;
    for (std::size_t mask = 1; mask < occ.size(); ++mask) {
        const int k = std::popcount(mask);
        bool inside;
        if (k == 1) {
            inside = true;
        } else {
            // if any facet subset is not a simplex, this one cannot be
            inside = true;
            for (unsigned b = 0; b < n && inside; ++b)
                if ((mask >> b) & 1u)
                    inside = occ[mask ^ (std::size_t{1} << b)] != 0;
            if (inside) {
                subset.clear();
                for (unsigned b = 0; b < n; ++b)
                    if ((mask >> b) & 1u) subset.push_back(m.pts[b]);
                inside = meb_radius(subset, cloud.dim) <= r;
            }
        }
        if (inside) {
            occ[mask] = 1;
            chi += (k % 2 == 1) ? 1 : -1;
        }
    }
    return chi;
}

}  // namespace ecp
