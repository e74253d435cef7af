#include "ecp/ecc/mixup.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "ecp/ecc/euler.hpp"
#include "ecp/errors.hpp"
#include "ecp/geometry/alpha.hpp"
#include "ecp/rng.hpp"

namespace ecp {

namespace {

bool collides_with(const Point& p, const std::vector<Point>& cloud, int dim) {
    const double tol2 = kMergeTol * kMergeTol;
    for (const auto& q : cloud)
        if (dist2(p, q, dim) <= tol2) return true;
    return false;
}

double bbox_diag(const std::vector<Point>& a, const std::vector<Point>& b,
                 int dim) {
    double lo[3], hi[3];
    for (int j = 0; j < dim; ++j) lo[j] = hi[j] = a[0][j];
    auto widen = [&](const std::vector<Point>& pts) {
        for (const auto& p : pts)
            for (int j = 0; j < dim; ++j) {
                lo[j] = std::min(lo[j], p[j]);
                hi[j] = std::max(hi[j], p[j]);
            }
    };
    widen(a);
    widen(b);
    double d2 = 0;
    for (int j = 0; j < dim; ++j) d2 += (hi[j] - lo[j]) * (hi[j] - lo[j]);
    return std::sqrt(d2);
}

}  // namespace

MixupProfile mixup_ecp(const PointCloud& x, const PointCloud& y) {
    if (x.dim != y.dim)
        throw DimensionMismatch("mixup clouds must share a dimension");
    if (x.empty() || y.empty())
        throw TooFewPoints("mixup needs two nonempty clouds");
    const int dim = x.dim;

    std::vector<Point> ypts = y.pts;
    const double nudge = 1e-9 * std::max(1.0, bbox_diag(x.pts, ypts, dim));
    for (std::size_t i = 0; i < ypts.size(); ++i) {
        if (!collides_with(ypts[i], x.pts, dim)) continue;
        SplitMix64 g = SplitMix64::stream(0x6A17, i);
        bool placed = false;
        for (int attempt = 0; attempt < 16 && !placed; ++attempt) {
            Point cand = y.pts[i];
            for (int j = 0; j < dim; ++j)
                cand[j] += nudge * (2.0 * g.uniform() - 1.0);
            if (!collides_with(cand, x.pts, dim)) {
                ypts[i] = cand;
                placed = true;
            }
        }
        if (!placed)
            throw DegenerateInput(
                "could not separate coincident cross-cloud points");
    }

    /* dmin goes through the same rational-then-truncate channel as the
       filtration values, so dmin/2 is bitwise equal to the alpha value of
       the closest cross edge and the dead-zone inequality has no ulp gap */
    mpq_class d2min_q;
    bool have = false;
    for (const auto& p : x.pts)
        for (const auto& q : ypts) {
            mpq_class d2 = 0;
            for (int j = 0; j < dim; ++j) {
                const mpq_class d = mpq_class(p[j]) - mpq_class(q[j]);
                d2 += d * d;
            }
            if (!have || d2 < d2min_q) {
                d2min_q = d2;
                have = true;
            }
        }
    const double d2min = mpq_class(d2min_q / 4).get_d();

    const Filtration fx = alpha_filtration(x);
    const Filtration fy = alpha_filtration(PointCloud(ypts, dim));

    std::vector<Point> upts = x.pts;
    upts.insert(upts.end(), ypts.begin(), ypts.end());
    const Filtration fu = alpha_filtration(PointCloud(upts, dim));
    if (fu.points.size() != fx.points.size() + fy.points.size())
        throw DegenerateInput("cross-cloud points merged inside the union");

    MixupProfile out;
    out.profile = difference(sum(ecc(fx), ecc(fy)), ecc(fu));
    out.dmin = 2.0 * std::sqrt(d2min);
    out.s_stat = out.profile.max_abs();
    return out;
}

int detection_stat(const MixupProfile& profile) {
    return profile.profile.max_abs();
}

VarianceStats variance_stats(const PointCloud& cloud) {
    if (merge_duplicates(cloud.pts, cloud.dim).pts.size() < 2)
        throw TooFewPoints("variance needs two distinct points");

    /* the multiset is deliberate: windows over periodic orbits collapse to
       a few atoms, but their spatial variance still weighs every sample */
    VarianceStats out;
    out.n = cloud.pts.size();
    double centroid[3] = {};
    for (const auto& p : cloud.pts)
        for (int j = 0; j < cloud.dim; ++j) centroid[j] += p[j];
    for (int j = 0; j < cloud.dim; ++j)
        centroid[j] /= static_cast<double>(out.n);

    for (const auto& p : cloud.pts) {
        double d2 = 0;
        for (int j = 0; j < cloud.dim; ++j) {
            const double d = p[j] - centroid[j];
            d2 += d * d;
        }
        out.variance += d2;
    }
    out.variance /= static_cast<double>(out.n);

    for (std::size_t i = 0; i < cloud.pts.size(); ++i)
        for (std::size_t j = i + 1; j < cloud.pts.size(); ++j)
            out.diameter = std::max(
                out.diameter, dist2(cloud.pts[i], cloud.pts[j], cloud.dim));
    out.diameter = std::sqrt(out.diameter);

    /* diam^2 <= 2(|p-c|^2 + |q-c|^2) <= 2 sum |p_i-c|^2 = 2nV, tight for
       two antipodal points plus a cluster at the centroid */
    out.support_bound =
        std::sqrt(2.0 * static_cast<double>(out.n) * out.variance);
    if (out.diameter > out.support_bound * (1.0 + 1e-12))
        throw Error("variance-support bound violated");
    return out;
}

}  // namespace ecp
