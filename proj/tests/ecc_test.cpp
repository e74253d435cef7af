#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "ecp/ecc/euler.hpp"
#include "ecp/ecc/mixup.hpp"
#include "ecp/ecc/step_function.hpp"
#include "ecp/errors.hpp"
#include "ecp/geometry/alpha.hpp"
#include "ecp/rng.hpp"
#include "support/oracles.hpp"

using namespace ecp;
namespace ts = ecp::testsupport;

namespace {

Point p2(double x, double y) { return Point{x, y, 0.0}; }

std::vector<Point> disk_sample(unsigned long long seed, int n, double radius,
                               double cx = 0, double cy = 0) {
    SplitMix64 g(seed);
    std::vector<Point> out;
    while (static_cast<int>(out.size()) < n) {
        const double x = g.uniform(-1.0, 1.0), y = g.uniform(-1.0, 1.0);
        if (x * x + y * y <= 1.0)
            out.push_back(p2(cx + radius * x, cy + radius * y));
    }
    return out;
}

}  // namespace

TEST_CASE("step function evaluation and canonical form") {
    StepFunction f;
    f.breaks = {1.0, 2.0, 3.0};
    f.vals = {5, 5, 2, 1};
    f = canonicalized(std::move(f));
    CHECK(f.breaks == std::vector<double>{2.0, 3.0});
    CHECK(f.at(0.0) == 5);
    CHECK(f.at(1.999) == 5);
    CHECK(f.at(2.0) == 2);
    CHECK(f.at(2.5) == 2);
    CHECK(f.at(3.0) == 1);
    CHECK(f.at(100.0) == 1);
    CHECK(f.terminal() == 1);
    CHECK(f.max_abs() == 5);
}

TEST_CASE("step function sum and exact cancellation") {
    StepFunction a;
    a.breaks = {0.5, 1.25};
    a.vals = {2, 1, 0};
    StepFunction b;
    b.breaks = {0.5, 2.0};
    b.vals = {-2, -1, 3};

    const StepFunction s = sum(a, b);
    CHECK(s.at(0.0) == 0);
    CHECK(s.at(0.5) == 0);
    CHECK(s.at(1.25) == -1);
    CHECK(s.at(2.0) == 3);

    // a - a must collapse to the zero function with no breakpoints at all
    const StepFunction z = difference(a, a);
    CHECK(z.breaks.empty());
    CHECK(z.at(0.7) == 0);
}

TEST_CASE("detection stat reads the profile maximum") {
    MixupProfile pr;
    pr.profile.breaks = {1, 2, 3, 4, 5};
    pr.profile.vals = {0, 15, 10, 5, 2, 1};
    CHECK(detection_stat(pr) == 15);
    pr.profile.breaks = {1, 2, 3};
    pr.profile.vals = {0, 3, 2, 1};
    CHECK(detection_stat(pr) == 3);
    pr.profile.breaks.clear();
    pr.profile.vals = {0};
    CHECK(detection_stat(pr) == 0);
}

TEST_CASE("ecc of two points and an equilateral triangle") {
    const StepFunction two =
        ecc(alpha_filtration(PointCloud({p2(0, 0), p2(2, 0)}, 2)));
    CHECK(two.at(0.0) == 2);
    CHECK(two.at(0.999) == 2);
    CHECK(two.at(1.0) == 1);

    const double h = std::sqrt(3.0) / 2.0;
    const StepFunction tri =
        ecc(alpha_filtration(PointCloud({p2(0, 0), p2(1, 0), p2(0.5, h)}, 2)));
    CHECK(tri.at(0.0) == 3);
    CHECK(tri.at(0.49) == 3);
    CHECK(tri.at(0.5) == 0);  // three edges close a cycle
    CHECK(tri.at(0.56) == 0);
    CHECK(tri.at(1.0 / std::sqrt(3.0) + 1e-12) == 1);
}

TEST_CASE("ecc endpoints on random clouds") {
    for (unsigned long long seed = 1; seed <= 8; ++seed) {
        const int dim = (seed % 2) ? 2 : 3;
        const auto pts = ts::random_cloud(seed + 40, 11, dim);
        const Filtration f = alpha_filtration(PointCloud(pts, dim));
        const StepFunction chi = ecc(f);
        CHECK(chi.at(0.0) == 11);
        CHECK(chi.terminal() == 1);
    }
}

TEST_CASE("mixup of two singleton clouds") {
    const MixupProfile pr =
        mixup_ecp(PointCloud({p2(0, 0)}, 2), PointCloud({p2(2, 0)}, 2));
    CHECK(pr.dmin == 2.0);
    CHECK(pr.profile.at(0.0) == 0);
    CHECK(pr.profile.at(0.999) == 0);
    CHECK(pr.profile.at(1.0) == 1);
    CHECK(pr.s_stat == 1);
}

TEST_CASE("dead zone is exact on random cloud pairs") {
    for (unsigned long long seed = 1; seed <= 10; ++seed) {
        const int dim = (seed % 2) ? 2 : 3;
        const auto xs = ts::random_cloud(seed, 12, dim);
        const auto ys = ts::random_cloud(seed + 1000, 12, dim);
        const MixupProfile pr =
            mixup_ecp(PointCloud(xs, dim), PointCloud(ys, dim));
        REQUIRE(pr.dmin > 0);
        // zero on [0, dmin/2): the first breakpoint may not come earlier
        CHECK(pr.profile.at(0.0) == 0);
        if (!pr.profile.breaks.empty())
            CHECK(pr.profile.breaks.front() >= pr.dmin / 2);
    }
}

TEST_CASE("coincident cross-cloud points get separated deterministically") {
    const auto xs = ts::random_cloud(5, 8, 2);
    PointCloud x(xs, 2), y(xs, 2);  // y is an exact copy
    const MixupProfile a = mixup_ecp(x, y);
    const MixupProfile b = mixup_ecp(x, y);
    CHECK(a.dmin > 0);
    CHECK(a.dmin < 1e-7);
    CHECK(a.profile.breaks == b.profile.breaks);
    CHECK(a.profile.vals == b.profile.vals);
    CHECK(a.s_stat == b.s_stat);
}

TEST_CASE("same-attractor limit: delta chi settles at 1") {
    const auto xs = disk_sample(11, 30, 1.0);
    const auto ys = disk_sample(12, 30, 1.0);
    const MixupProfile pr = mixup_ecp(PointCloud(xs, 2), PointCloud(ys, 2));

    std::vector<Point> all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    const VarianceStats vs = variance_stats(PointCloud(all, 2));
    CHECK(pr.profile.at(vs.support_bound) == 1);
    CHECK(pr.profile.at(vs.support_bound * 2) == 1);
    CHECK(pr.profile.support_end() <= vs.support_bound);
}

TEST_CASE("variance stats analytic case") {
    const VarianceStats vs =
        variance_stats(PointCloud({p2(0, 0), p2(3, 0)}, 2));
    CHECK(vs.n == 2);
    CHECK(vs.variance == doctest::Approx(9.0 / 4.0));
    CHECK(vs.diameter == doctest::Approx(3.0));
    // sqrt(2 * 2 * 9/4) = 3: two points meet the bound with equality
    CHECK(vs.support_bound == doctest::Approx(3.0));
}

TEST_CASE("variance stats rejects degenerate clouds") {
    CHECK_THROWS_AS(
        variance_stats(PointCloud({p2(1, 1), p2(1, 1), p2(1, 1)}, 2)),
        TooFewPoints);
}

TEST_CASE("variance bound holds on random and clumped clouds") {
    for (unsigned long long seed = 1; seed <= 20; ++seed) {
        const int dim = (seed % 2) ? 2 : 3;
        const auto pts = ts::random_cloud(seed + 500, 10, dim);
        const VarianceStats vs = variance_stats(PointCloud(pts, dim));
        CHECK(vs.diameter <= vs.support_bound * (1 + 1e-12));
        // diameter cross-checked against the direct pairwise scan
        double d2 = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                d2 = std::max(d2, dist2(pts[i], pts[j], dim));
        CHECK(vs.diameter == doctest::Approx(std::sqrt(d2)));
    }
    // two far points plus a tight cluster at the middle: the shape that
    // maximizes diameter at fixed variance
    std::vector<Point> clumped = {p2(-1, 0), p2(1, 0)};
    for (int i = 0; i < 30; ++i) clumped.push_back(p2(0, 1e-6 * (i + 1)));
    const VarianceStats vs = variance_stats(PointCloud(clumped, 2));
    CHECK(vs.diameter <= vs.support_bound);
}
