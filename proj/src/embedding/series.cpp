#include "ecp/embedding/series.hpp"

#include <cmath>
#include <string>

#include "ecp/errors.hpp"

namespace ecp {

TimeSeries::TimeSeries(std::vector<double> v, std::vector<double> t)
    : values(std::move(v)), timestamps(std::move(t)) {
    if (values.size() < 2)
        throw SeriesTooShort("a series needs at least 2 samples, got " +
                             std::to_string(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i]))
            throw DegenerateSeries("sample " + std::to_string(i) +
                                   " is not finite");
    if (timestamps.empty()) return;
    if (timestamps.size() != values.size())
        throw SizeMismatch(std::to_string(timestamps.size()) +
                           " timestamps against " +
                           std::to_string(values.size()) + " values");
    for (std::size_t i = 0; i + 1 < timestamps.size(); ++i)
        if (!(timestamps[i] < timestamps[i + 1]))
            throw OutOfRange("timestamps must rise strictly, violated at " +
                             std::to_string(i + 1));
}

}  // namespace ecp
