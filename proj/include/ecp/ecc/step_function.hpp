#pragma once

#include <iosfwd>
#include <vector>

namespace ecp {

/* Integer-valued, right-continuous step function on [0, inf).  vals[0] holds
   on [0, breaks[0]), vals[i+1] on [breaks[i], breaks[i+1]).  Canonical form:
   breaks strictly increasing and every breakpoint changes the value.
   Arithmetic merges breakpoint lists by exact double comparison; curves built
   from bitwise-identical filtration values therefore cancel exactly. */
struct StepFunction {
    std::vector<double> breaks;
    std::vector<int> vals{0};

    int at(double r) const;
    int terminal() const { return vals.back(); }
    int max_abs() const;
    double support_end() const { return breaks.empty() ? 0.0 : breaks.back(); }
};

// drops breakpoints that do not change the value
StepFunction canonicalized(StepFunction f);

StepFunction sum(const StepFunction& a, const StepFunction& b);
StepFunction difference(const StepFunction& a, const StepFunction& b);

// rows of "breakpoint,value", starting with the value at 0
void step_csv(const StepFunction& f, std::ostream& os);

}  // namespace ecp
