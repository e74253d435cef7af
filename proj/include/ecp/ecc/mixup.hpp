#pragma once

#include "ecp/ecc/step_function.hpp"
#include "ecp/geometry/point_cloud.hpp"

namespace ecp {

/* Mixup Euler characteristic profile
       delta_chi(r) = chi_X(r) + chi_Y(r) - chi_{X u Y}(r),
   which by inclusion-exclusion is the Euler characteristic of the
   intersection of the two ball unions.  Zero below dmin/2 (balls from
   different clouds cannot meet yet), and equal to chi of the common
   attractor for large r. */
struct MixupProfile {
    StepFunction profile;
    double dmin = 0.0;  // minimum cross-cloud point distance
    int s_stat = 0;     // max_r |delta_chi(r)|
};

// Y points that coincide with an X point (within the merge tolerance) are
// nudged by a deterministic index-keyed 1e-9-scale offset first, so the two
// clouds are honestly disjoint in all three complexes.
MixupProfile mixup_ecp(const PointCloud& x, const PointCloud& y);

int detection_stat(const MixupProfile& profile);

struct VarianceStats {
    double variance = 0.0;      // mean squared distance to the centroid
    double diameter = 0.0;      // max pairwise distance
    double support_bound = 0.0; // sqrt(2 n V) >= diameter
    std::size_t n = 0;          // sample count, duplicates included
};

// stats over the sample multiset (duplicates keep their weight); throws
// TooFewPoints when fewer than two distinct points exist
VarianceStats variance_stats(const PointCloud& cloud);

}  // namespace ecp
