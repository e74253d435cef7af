#include "ecp/ecc/euler.hpp"

#include <cmath>

namespace ecp {

StepFunction ecc(const Filtration& filt) {
    StepFunction out;
    int chi = 0;
    std::size_t i = 0;
    // entries are sorted by value; group equal values into one jump
    while (i < filt.entries.size() && filt.entries[i].value == 0.0) {
        chi += (filt.entries[i].simplex.dim() % 2 == 0) ? 1 : -1;
        ++i;
    }
    out.vals[0] = chi;
    while (i < filt.entries.size()) {
        const double v = filt.entries[i].value;
        if (std::isinf(v)) break;  // flat simplices never enter
        while (i < filt.entries.size() && filt.entries[i].value == v) {
            chi += (filt.entries[i].simplex.dim() % 2 == 0) ? 1 : -1;
            ++i;
        }
        out.breaks.push_back(v);
        out.vals.push_back(chi);
    }
    return canonicalized(std::move(out));
}

}  // namespace ecp
