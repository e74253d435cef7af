#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "ecp/embedding/takens.hpp"
#include "ecp/errors.hpp"
#include "ecp/rng.hpp"
#include "ecp/signals/signals.hpp"
#include "ecp/systems/eeg.hpp"
#include "ecp/systems/logistic.hpp"
#include "ecp/systems/lorenz.hpp"
#include "ecp/systems/lyapunov.hpp"
#include "ecp/systems/sweep.hpp"

using namespace ecp;

namespace {

double slice_variance(const std::vector<double>& v, std::size_t lo,
                      std::size_t hi) {
    double mean = 0.0;
    for (std::size_t i = lo; i < hi; ++i) mean += v[i];
    mean /= static_cast<double>(hi - lo);
    double ss = 0.0;
    for (std::size_t i = lo; i < hi; ++i) ss += (v[i] - mean) * (v[i] - mean);
    return ss / static_cast<double>(hi - lo);
}

int argmin_value(const SignalTrace& trace) {
    int best = 0;
    for (std::size_t i = 1; i < trace.values.size(); ++i)
        if (trace.values[i] < trace.values[best]) best = static_cast<int>(i);
    return best;
}

}  // namespace

TEST_CASE("lorenz settles onto the subcritical fixed point") {
    LorenzParams p;
    p.rho_pre = 20.0;
    p.rho_post = 20.0;
    p.switch_time = 40.0;
    p.duration = 80.0;
    p.burn_in = 0.0;
    const LorenzRun run = gen_lorenz(p);

    const std::size_t steps = static_cast<std::size_t>(p.duration / p.dt);
    REQUIRE(run.trajectory.pts.size() == steps + 1);
    REQUIRE(run.x.values.size() == steps + 1);
    CHECK(run.x.timestamps[0] == doctest::Approx(0.0));
    CHECK(run.x.timestamps[100] == doctest::Approx(1.0));
    CHECK(run.x.values[500] == run.trajectory.pts[500][0]);

    // C- = (-sqrt(beta(rho-1)), -sqrt(beta(rho-1)), rho-1), stable at rho 20
    const double c = std::sqrt(19.0 * 8.0 / 3.0);
    const Point& last = run.trajectory.pts.back();
    CHECK(std::abs(last[0] + c) < 1e-3);
    CHECK(std::abs(last[1] + c) < 1e-3);
    CHECK(std::abs(last[2] - 19.0) < 1e-3);
}

TEST_CASE("lorenz trajectory stays bounded through the switch") {
    const LorenzRun run = gen_lorenz(LorenzParams{});
    double biggest = 0.0;
    for (const Point& pt : run.trajectory.pts)
        for (const double coord : pt)
            biggest = std::max(biggest, std::abs(coord));
    CHECK(biggest < 100.0);
}

TEST_CASE("lorenz rejects unusable configuration") {
    LorenzParams p;
    p.dt = 0.0;
    CHECK_THROWS_AS(gen_lorenz(p), OutOfRange);
    p = LorenzParams{};
    p.duration = -1.0;
    CHECK_THROWS_AS(gen_lorenz(p), OutOfRange);
    p = LorenzParams{};
    p.switch_time = 0.0;
    CHECK_THROWS_AS(gen_lorenz(p), OutOfRange);
    p = LorenzParams{};
    p.switch_time = p.duration + 1.0;
    CHECK_THROWS_AS(gen_lorenz(p), OutOfRange);
    p = LorenzParams{};
    p.burn_in = -0.5;
    CHECK_THROWS_AS(gen_lorenz(p), OutOfRange);
}

TEST_CASE("map-derivative exponent matches known logistic values") {
    const LyapunovEstimate full = lyapunov_logistic(4.0, 200000);
    CHECK(full.method == "map-derivative");
    CHECK(std::abs(full.lambda1 - std::log(2.0)) < 0.01);

    CHECK(lyapunov_logistic(3.9, 200000).lambda1 ==
          doctest::Approx(0.4966).epsilon(0.05));

    for (const double stable : {2.9, 3.2, 3.5})
        CHECK(lyapunov_logistic(stable, 50000).lambda1 < 0.0);
    for (const double chaotic : {3.7, 3.9, 4.0})
        CHECK(lyapunov_logistic(chaotic, 50000).lambda1 > 0.0);

    CHECK_THROWS_AS(lyapunov_logistic(4.5, 1000), OutOfRange);
    CHECK_THROWS_AS(lyapunov_logistic(3.9, 0), OutOfRange);
}

TEST_CASE("neighbour-divergence exponent brackets the lorenz value") {
    LorenzParams p;
    p.rho_pre = 28.0;
    p.rho_post = 28.0;
    p.switch_time = 75.0;
    p.duration = 150.0;
    const LorenzRun run = gen_lorenz(p);

    const LyapunovEstimate est = lyapunov_trajectory(run.trajectory, p.dt);
    CHECK(est.method == "neighbour-divergence");
    CHECK(est.lambda1 > 0.8);
    CHECK(est.lambda1 < 1.0);
}

TEST_CASE("neighbour-divergence exponent is negative on a contracting run") {
    LorenzParams p;
    p.rho_pre = 20.0;
    p.rho_post = 20.0;
    p.switch_time = 30.0;
    p.duration = 60.0;
    p.burn_in = 5.0;
    const LorenzRun run = gen_lorenz(p);
    CHECK(lyapunov_trajectory(run.trajectory, p.dt).lambda1 < 0.0);
}

TEST_CASE("neighbour-divergence needs a long enough recording") {
    PointCloud tiny;
    tiny.dim = 3;
    for (int i = 0; i < 40; ++i)
        tiny.pts.push_back({0.1 * i, 0.2 * i, 0.3 * i});
    CHECK_THROWS_AS(lyapunov_trajectory(tiny, 0.01), TooFewPoints);
}

TEST_CASE("logistic generator lands on the 3.2 two-cycle") {
    const TimeSeries orbit = gen_logistic(logistic_constant(3.2, 12), 0);
    // roots of the second-iterate fixed point equation at lambda 3.2
    const double hi = (4.2 + std::sqrt(4.2 * 0.2)) / 6.4;
    const double lo = (4.2 - std::sqrt(4.2 * 0.2)) / 6.4;
    for (std::size_t i = 0; i < orbit.values.size(); ++i) {
        const double x = orbit.values[i];
        CHECK(std::min(std::abs(x - hi), std::abs(x - lo)) < 1e-6);
        if (i >= 2)
            CHECK(orbit.values[i] == doctest::Approx(orbit.values[i - 2]));
        if (i >= 1)
            CHECK(std::abs(orbit.values[i] - orbit.values[i - 1]) > 0.1);
    }
}

TEST_CASE("logistic orbit keeps to the open unit interval at lambda 4") {
    const TimeSeries orbit = gen_logistic(logistic_constant(4.0, 2000), 0);
    for (const double x : orbit.values) {
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("logistic noise is seed-deterministic and leaves the orbit clean") {
    LogisticParams p = logistic_constant(3.7, 300);
    p.noise_sigma = 0.1;
    const TimeSeries a = gen_logistic(p, 5);
    const TimeSeries b = gen_logistic(p, 5);
    const TimeSeries c = gen_logistic(p, 6);
    CHECK(a.values == b.values);
    CHECK(a.values != c.values);

    // noise perturbs the record only; the same seed with sigma 0 recovers
    // the clean orbit underneath
    p.noise_sigma = 0.0;
    const TimeSeries clean = gen_logistic(p, 5);
    double drift = 0.0;
    for (std::size_t i = 0; i < clean.values.size(); ++i)
        drift = std::max(drift, std::abs(a.values[i] - clean.values[i]));
    CHECK(drift < 0.6);   // a few sigma, not orbit divergence
    CHECK(drift > 0.0);
}

TEST_CASE("logistic step schedule switches at the recorded index") {
    const TimeSeries stepped =
        gen_logistic(logistic_step(3.2, 3.8, 100, 200), 0);
    const TimeSeries flat = gen_logistic(logistic_constant(3.2, 200), 0);
    for (std::size_t i = 0; i <= 100; ++i)
        CHECK(stepped.values[i] == flat.values[i]);
    bool diverged = false;
    for (std::size_t i = 101; i < 200; ++i)
        if (stepped.values[i] != flat.values[i]) diverged = true;
    CHECK(diverged);
}

TEST_CASE("logistic sweep stays bounded across the whole ramp") {
    const TimeSeries orbit = gen_logistic(logistic_sweep(2.8, 4.0, 500), 0);
    REQUIRE(orbit.values.size() == 500);
    for (const double x : orbit.values) {
        CHECK(x > 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("logistic generator rejects unusable parameters") {
    CHECK_THROWS_AS(gen_logistic(logistic_constant(0.0, 100), 0), OutOfRange);
    CHECK_THROWS_AS(gen_logistic(logistic_constant(4.2, 100), 0), OutOfRange);
    CHECK_THROWS_AS(gen_logistic(logistic_constant(3.5, 1), 0), OutOfRange);
    LogisticParams p = logistic_constant(3.5, 100);
    p.x0 = 1.0;
    CHECK_THROWS_AS(gen_logistic(p, 0), OutOfRange);
    p = logistic_constant(3.5, 100);
    p.burn_in = -1;
    CHECK_THROWS_AS(gen_logistic(p, 0), OutOfRange);
    p = logistic_constant(3.5, 100);
    p.noise_sigma = -0.1;
    CHECK_THROWS_AS(gen_logistic(p, 0), OutOfRange);
    CHECK_THROWS_AS(gen_logistic(logistic_step(3.2, 3.8, 300, 200), 0),
                    OutOfRange);
}

TEST_CASE("eeg seizure span carries the power") {
    const EegParams p;
    const TimeSeries eeg = gen_eeg(p, 0);
    const std::size_t fs = static_cast<std::size_t>(p.sample_rate);
    REQUIRE(eeg.values.size() == 120 * fs);
    CHECK(eeg.timestamps[fs] == doctest::Approx(1.0));

    const double background = (slice_variance(eeg.values, 0, 60 * fs) +
                               slice_variance(eeg.values, 80 * fs, 120 * fs)) /
                              2.0;
    const double ictal = slice_variance(eeg.values, 60 * fs, 80 * fs);
    CHECK(ictal >= 5.0 * background);

    CHECK(gen_eeg(p, 0).values == eeg.values);
    CHECK(gen_eeg(p, 1).values != eeg.values);
}

TEST_CASE("zero-length seizure leaves plain background") {
    EegParams p;
    p.seizure_start_s = 60.0;
    p.seizure_end_s = 60.0;
    const TimeSeries eeg = gen_eeg(p, 0);
    const std::size_t fs = static_cast<std::size_t>(p.sample_rate);
    const double head = slice_variance(eeg.values, 0, 60 * fs);
    const double tail = slice_variance(eeg.values, 60 * fs, 120 * fs);
    CHECK(tail < 2.0 * head);
    CHECK(head < 2.0 * tail);
}

TEST_CASE("eeg rejects unusable spans") {
    EegParams p;
    p.sample_rate = 0.0;
    CHECK_THROWS_AS(gen_eeg(p, 0), OutOfRange);
    p = EegParams{};
    p.duration_s = 0.0;
    CHECK_THROWS_AS(gen_eeg(p, 0), OutOfRange);
    p = EegParams{};
    p.seizure_start_s = -1.0;
    CHECK_THROWS_AS(gen_eeg(p, 0), OutOfRange);
    p = EegParams{};
    p.seizure_end_s = p.seizure_start_s - 5.0;
    CHECK_THROWS_AS(gen_eeg(p, 0), OutOfRange);
    p = EegParams{};
    p.seizure_end_s = p.duration_s + 1.0;
    CHECK_THROWS_AS(gen_eeg(p, 0), OutOfRange);
}

TEST_CASE("lorenz transition shows an s-trough at the switch") {
    SplitMix64 g(3);
    LorenzParams p;
    p.initial_state = {g.uniform(-12.0, 12.0), g.uniform(-15.0, 15.0),
                       g.uniform(5.0, 35.0)};
    const LorenzRun run = gen_lorenz(p);

    const SignalTrace trace = signal_S(run.trajectory, 200, 25, 20);
    const double t_star = trace.times[argmin_value(trace)] * p.dt;
    CHECK(t_star >= 49.0);
    CHECK(t_star <= 51.0);
}

TEST_CASE("eeg s-trace bottoms out inside the seizure") {
    const EegParams p;
    const TimeSeries eeg = gen_eeg(p, 0);
    // quarter period of the 3 Hz spike-wave at 256 Hz is ~21 samples
    const PointCloud emb = takens_embed(eeg, EmbeddingParams{21, 2});
    const SignalTrace trace = signal_S(emb, 256, 128, 20);
    const int t_star = trace.times[argmin_value(trace)];
    CHECK(t_star >= 60 * 256);
    CHECK(t_star <= 80 * 256);
}

TEST_CASE("noise sweep rows line up with the sigmas") {
    NoiseSweepConfig cfg;
    cfg.seed = 7;
    const auto rows = noise_sweep({0.0, 0.1}, 3, cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].sigma == 0.0);
    CHECK(rows[1].sigma == 0.1);

    // sigma 0 ignores the trial seed, so the trials coincide exactly
    CHECK(rows[0].s_sd == 0.0);
    CHECK(rows[0].g_sd == 0.0);
    CHECK(rows[1].s_mean > rows[0].s_mean);
    CHECK(rows[0].g_mean > 0.0);

    CHECK_THROWS_AS(noise_sweep({}, 3, cfg), OutOfRange);
    CHECK_THROWS_AS(noise_sweep({0.1}, 0, cfg), OutOfRange);
    cfg.g_w = 1;
    CHECK_THROWS_AS(noise_sweep({0.1}, 3, cfg), OutOfRange);
}

TEST_CASE("sweep table tracks the grid") {
    SweepConfig cfg;
    cfg.lyap_iters = 20000;

    const auto single = sweep_logistic({3.5}, cfg);
    REQUIRE(single.size() == 1);
    CHECK(single[0].lambda == 3.5);
    CHECK(single[0].s >= 1);

    const auto two = sweep_logistic({2.9, 3.7}, cfg);
    REQUIRE(two.size() == 2);
    CHECK(two[0].lambda1 < 0.0);
    CHECK(two[1].lambda1 > 0.0);

    CHECK_THROWS_AS(sweep_logistic({}, cfg), OutOfRange);
}
