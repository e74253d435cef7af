#include "ecp/ecc/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ecp/errors.hpp"

namespace ecp {

int StepFunction::at(double r) const {
    // first interval whose start exceeds r, then step back
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), r);
    return vals[static_cast<std::size_t>(it - breaks.begin())];
}

int StepFunction::max_abs() const {
    int m = 0;
    for (int v : vals) m = std::max(m, std::abs(v));
    return m;
}

StepFunction canonicalized(StepFunction f) {
    if (f.vals.size() != f.breaks.size() + 1)
        throw SizeMismatch("step function needs one value per interval");
    StepFunction out;
    out.vals[0] = f.vals[0];
    for (std::size_t i = 0; i < f.breaks.size(); ++i) {
        if (!out.breaks.empty() && f.breaks[i] <= out.breaks.back())
            throw OutOfRange("step function breakpoints must increase");
        if (f.vals[i + 1] == out.vals.back()) continue;
        out.breaks.push_back(f.breaks[i]);
        out.vals.push_back(f.vals[i + 1]);
    }
    return out;
}

namespace {

StepFunction combine(const StepFunction& a, const StepFunction& b, int sb) {
    StepFunction out;
    out.vals[0] = a.vals[0] + sb * b.vals[0];
    std::size_t ia = 0, ib = 0;
    while (ia < a.breaks.size() || ib < b.breaks.size()) {
        double r;
        if (ib == b.breaks.size() ||
            (ia < a.breaks.size() && a.breaks[ia] <= b.breaks[ib]))
            r = a.breaks[ia];
        else
            r = b.breaks[ib];
        while (ia < a.breaks.size() && a.breaks[ia] == r) ++ia;
        while (ib < b.breaks.size() && b.breaks[ib] == r) ++ib;
        out.breaks.push_back(r);
        out.vals.push_back(a.vals[ia] + sb * b.vals[ib]);
    }
    return canonicalized(std::move(out));
}

}  // namespace

StepFunction sum(const StepFunction& a, const StepFunction& b) {
    return combine(a, b, 1);
}

StepFunction difference(const StepFunction& a, const StepFunction& b) {
    return combine(a, b, -1);
}

void step_csv(const StepFunction& f, std::ostream& os) {
    os << "r,value\n";
    char buf[40];
    os << "0," << f.vals[0] << '\n';
    for (std::size_t i = 0; i < f.breaks.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", f.breaks[i]);
        os << buf << ',' << f.vals[i + 1] << '\n';
    }
}

}  // namespace ecp
