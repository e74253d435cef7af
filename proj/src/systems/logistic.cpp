#include "ecp/systems/logistic.hpp"

#include <string>
#include <vector>

#include "ecp/errors.hpp"
#include "ecp/rng.hpp"

namespace ecp {

LogisticParams logistic_constant(double lambda, int n) {
    LogisticParams p;
    p.schedule = LogisticParams::Schedule::kConstant;
    p.lambda1 = p.lambda2 = lambda;
    p.n = n;
    return p;
}

LogisticParams logistic_step(double from, double to, int t0, int n) {
    LogisticParams p;
    p.schedule = LogisticParams::Schedule::kStep;
    p.lambda1 = from;
    p.lambda2 = to;
    p.t0 = t0;
    p.n = n;
    return p;
}

LogisticParams logistic_sweep(double from, double to, int n) {
    LogisticParams p;
    p.schedule = LogisticParams::Schedule::kSweep;
    p.lambda1 = from;
    p.lambda2 = to;
    p.n = n;
    return p;
}

namespace {

void check_lambda(double lambda) {
    if (lambda <= 0.0 || lambda > 4.0)
        throw OutOfRange("lambda must lie in (0, 4], got " +
                         std::to_string(lambda));
}

}  // namespace

TimeSeries gen_logistic(const LogisticParams& p, std::uint64_t seed) {
    check_lambda(p.lambda1);
    check_lambda(p.lambda2);
    if (p.x0 <= 0.0 || p.x0 >= 1.0)
        throw OutOfRange("x0 must lie inside (0, 1), got " +
                         std::to_string(p.x0));
    if (p.n < 2)
        throw OutOfRange("need at least two recorded samples, got " +
                         std::to_string(p.n));
    if (p.burn_in < 0) throw OutOfRange("burn-in cannot be negative");
    if (p.noise_sigma < 0.0)
        throw OutOfRange("noise sigma cannot be negative");
    if (p.schedule == LogisticParams::Schedule::kStep &&
        (p.t0 < 0 || p.t0 > p.n))
        throw OutOfRange("step index outside the recorded range, got " +
                         std::to_string(p.t0));

    const auto lambda_at = [&p](int i) {
        switch (p.schedule) {
            case LogisticParams::Schedule::kConstant:
                return p.lambda1;
            case LogisticParams::Schedule::kStep:
                return i < p.t0 ? p.lambda1 : p.lambda2;
            case LogisticParams::Schedule::kSweep:
            default:
                return p.lambda1 +
                       (p.lambda2 - p.lambda1) * i / (p.n - 1);
        }
    };

    double x = p.x0;
    const double l0 = lambda_at(0);
    for (int k = 0; k < p.burn_in; ++k) x = l0 * x * (1.0 - x);

    SplitMix64 rng(seed);
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(p.n));
    for (int i = 0; i < p.n; ++i) {
        const double obs =
            p.noise_sigma > 0.0 ? x + p.noise_sigma * rng.gaussian() : x;
        v.push_back(obs);
        x = lambda_at(i) * x * (1.0 - x);
    }
    return TimeSeries(std::move(v));
}

}  // namespace ecp
