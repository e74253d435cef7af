#include "ecp/systems/lorenz.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

struct State {
    double x, y, z;
};

State deriv(const State& s, double sigma, double beta, double rho) {
    return {sigma * (s.y - s.x), s.x * (rho - s.z) - s.y,
            s.x * s.y - beta * s.z};
}

State rk4_step(const State& s, double dt, double sigma, double beta,
               double rho) {
    const State k1 = deriv(s, sigma, beta, rho);
    const State s2{s.x + 0.5 * dt * k1.x, s.y + 0.5 * dt * k1.y,
                   s.z + 0.5 * dt * k1.z};
    const State k2 = deriv(s2, sigma, beta, rho);
    const State s3{s.x + 0.5 * dt * k2.x, s.y + 0.5 * dt * k2.y,
                   s.z + 0.5 * dt * k2.z};
    const State k3 = deriv(s3, sigma, beta, rho);
    const State s4{s.x + dt * k3.x, s.y + dt * k3.y, s.z + dt * k3.z};
    const State k4 = deriv(s4, sigma, beta, rho);
    return {s.x + dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
            s.y + dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
            s.z + dt / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z)};
}

}  // namespace

LorenzRun gen_lorenz(const LorenzParams& p) {
    if (p.dt <= 0.0)
        throw OutOfRange("dt must be positive, got " + std::to_string(p.dt));
    if (p.duration <= 0.0)
        throw OutOfRange("duration must be positive, got " +
                         std::to_string(p.duration));
    if (p.switch_time <= 0.0 || p.switch_time >= p.duration)
        throw OutOfRange("switch time must fall inside the run, got " +
                         std::to_string(p.switch_time));
    if (p.burn_in < 0.0)
        throw OutOfRange("burn-in cannot be negative");

    State s{p.initial_state[0], p.initial_state[1], p.initial_state[2]};
    const long burn_steps = std::lround(p.burn_in / p.dt);
    for (long k = 0; k < burn_steps; ++k)
        s = rk4_step(s, p.dt, p.sigma, p.beta, p.rho_pre);

    const long steps = std::lround(p.duration / p.dt);
    std::vector<Point> traj;
    std::vector<double> xs, ts;
    traj.reserve(static_cast<std::size_t>(steps + 1));
    for (long k = 0; k <= steps; ++k) {
        traj.push_back(Point{s.x, s.y, s.z});
        xs.push_back(s.x);
        ts.push_back(static_cast<double>(k) * p.dt);
        const double rho =
            static_cast<double>(k) * p.dt < p.switch_time ? p.rho_pre
                                                          : p.rho_post;
        s = rk4_step(s, p.dt, p.sigma, p.beta, rho);
    }

    LorenzRun run;
    run.trajectory = PointCloud(std::move(traj), 3);
    run.x = TimeSeries(std::move(xs), std::move(ts));
    return run;
}

}  // namespace ecp
