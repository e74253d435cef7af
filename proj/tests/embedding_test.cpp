#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "ecp/embedding/series.hpp"
#include "ecp/embedding/takens.hpp"
#include "ecp/errors.hpp"
#include "ecp/rng.hpp"

using namespace ecp;

namespace {

TimeSeries sine_series(std::size_t n, double period) {
    std::vector<double> v(n);
    for (std::size_t t = 0; t < n; ++t)
        v[t] = std::sin(2.0 * M_PI * static_cast<double>(t) / period);
    return TimeSeries(std::move(v));
}

TimeSeries noise_series(std::size_t n, unsigned long long seed) {
    SplitMix64 g(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = g.gaussian();
    return TimeSeries(std::move(v));
}

// classic chaotic trajectory, integrated here so the check does not lean
// on the library's own generators
TimeSeries lorenz_x_series(std::size_t n, double dt) {
    double s[3] = {1.0, 1.0, 1.0};
    const auto deriv = [](const double* u, double* du) {
        du[0] = 10.0 * (u[1] - u[0]);
        du[1] = u[0] * (28.0 - u[2]) - u[1];
        du[2] = u[0] * u[1] - 8.0 / 3.0 * u[2];
    };
    const auto step = [&](double* u) {
        double k1[3], k2[3], k3[3], k4[3], tmp[3];
        deriv(u, k1);
        for (int j = 0; j < 3; ++j) tmp[j] = u[j] + 0.5 * dt * k1[j];
        deriv(tmp, k2);
        for (int j = 0; j < 3; ++j) tmp[j] = u[j] + 0.5 * dt * k2[j];
        deriv(tmp, k3);
        for (int j = 0; j < 3; ++j) tmp[j] = u[j] + dt * k3[j];
        deriv(tmp, k4);
        for (int j = 0; j < 3; ++j)
            u[j] += dt / 6.0 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    };
    for (int t = 0; t < 2000; ++t) step(s);  // settle onto the attractor
    std::vector<double> v(n);
    for (std::size_t t = 0; t < n; ++t) {
        v[t] = s[0];
        step(s);
    }
    return TimeSeries(std::move(v));
}

}  // namespace

TEST_CASE("time series validates its invariants") {
    CHECK_THROWS_AS(TimeSeries({1.0}), SeriesTooShort);
    CHECK_THROWS_AS(
        TimeSeries({1.0, std::numeric_limits<double>::quiet_NaN()}),
        DegenerateSeries);
    CHECK_THROWS_AS(TimeSeries({1.0, 2.0}, {0.0}), SizeMismatch);
    CHECK_THROWS_AS(TimeSeries({1.0, 2.0, 3.0}, {0.0, 5.0, 5.0}), OutOfRange);
    const TimeSeries ok({1.0, 2.0, 3.0}, {0.0, 1.5, 4.0});
    CHECK(ok.size() == 3);
}

TEST_CASE("takens embedding lays out delay coordinates") {
    const TimeSeries s({1, 2, 3, 4, 5, 6});
    const PointCloud c = takens_embed(s, {1, 2});
    REQUIRE(c.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(c.pts[i][0] == static_cast<double>(i + 1));
        CHECK(c.pts[i][1] == static_cast<double>(i + 2));
    }

    const TimeSeries ten({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(takens_embed(ten, {2, 3}).size() == 6);

    std::vector<double> year(365);
    for (std::size_t i = 0; i < year.size(); ++i)
        year[i] = static_cast<double>(i % 31);
    CHECK(takens_embed(TimeSeries(year), {6, 3}).size() == 353);
}

TEST_CASE("takens embedding projects back onto the series") {
    const TimeSeries s = noise_series(200, 77);
    const EmbeddingParams p{5, 3};
    const PointCloud c = takens_embed(s, p);
    REQUIRE(c.size() == 200 - 2 * 5);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int j = 0; j < p.d; ++j)
            CHECK(c.pts[i][j] ==
                  s.values[i + static_cast<std::size_t>(j) * p.tau]);
}

TEST_CASE("takens embedding rejects bad parameters") {
    const TimeSeries s({1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(takens_embed(s, {0, 2}), OutOfRange);
    CHECK_THROWS_AS(takens_embed(s, {1, 4}), DimensionUnsupported);
    CHECK_THROWS_AS(takens_embed(s, {3, 3}), SeriesTooShort);  // 6 <= 2*3
    CHECK(takens_embed(s, {2, 3}).size() == 2);
}

TEST_CASE("mutual information picks the quarter period of a sine") {
    const double period = 21.3;
    for (const std::size_t n : {std::size_t{400}, std::size_t{1600}}) {
        const DelayChoice c = select_delay_mi(sine_series(n, period), 20);
        CHECK(!c.hit_cap);
        CHECK(std::abs(c.tau - period / 4.0) <= 1.0);
    }
}

TEST_CASE("mutual information on white noise stops at the first lag") {
    const DelayChoice c = select_delay_mi(noise_series(1000, 5), 25);
    CHECK(c.tau == 1);
    CHECK(!c.hit_cap);
}

TEST_CASE("mutual information selection is affine invariant") {
    std::vector<double> base = sine_series(400, 21.3).values;
    SplitMix64 g(9);
    for (auto& v : base) v += 0.1 * g.gaussian();
    const TimeSeries plain(base);
    std::vector<double> scaled = base, flipped = base;
    for (auto& v : scaled) v = 3.5 * v + 11.0;
    for (auto& v : flipped) v = -2.0 * v + 1.0;

    const DelayChoice want = select_delay_mi(plain, 20);
    CHECK(select_delay_mi(TimeSeries(scaled), 20).tau == want.tau);
    CHECK(select_delay_mi(TimeSeries(flipped), 20).tau == want.tau);
}

TEST_CASE("delay selection rejects degenerate input") {
    CHECK_THROWS_AS(select_delay_mi(TimeSeries(std::vector<double>(100, 2.5)),
                                    10),
                    DegenerateSeries);
    CHECK_THROWS_AS(select_delay_mi(sine_series(30, 10.0), 10),
                    SeriesTooShort);
    CHECK_THROWS_AS(select_delay_mi(sine_series(100, 10.0), 0), OutOfRange);
}

TEST_CASE("false nearest neighbours unfolds a sine in the plane") {
    const DimChoice c = select_dim_fnn(sine_series(400, 21.3), 5, 3);
    CHECK(c.d == 2);
    CHECK(!c.hit_cap);
}

TEST_CASE("false nearest neighbours needs three dimensions for lorenz") {
    const TimeSeries s = lorenz_x_series(2000, 0.01);
    const DelayChoice tau = select_delay_mi(s, 50);
    CHECK(!tau.hit_cap);
    const DimChoice c = select_dim_fnn(s, tau.tau, 3);
    CHECK(c.d == 3);
    CHECK(!c.hit_cap);
}

TEST_CASE("false nearest neighbours never settles on noise") {
    const DimChoice c = select_dim_fnn(noise_series(600, 5), 1, 3);
    CHECK(c.d == 3);
    CHECK(c.hit_cap);
}

TEST_CASE("dimension selection rejects bad input") {
    CHECK_THROWS_AS(select_dim_fnn(sine_series(20, 10.0), 5, 3),
                    SeriesTooShort);
    CHECK_THROWS_AS(select_dim_fnn(sine_series(100, 10.0), 0, 3), OutOfRange);
    CHECK_THROWS_AS(
        select_dim_fnn(TimeSeries(std::vector<double>(100, 1.0)), 2, 3),
        DegenerateSeries);
}
