#pragma once

#include <cstddef>
#include <vector>

namespace ecp {

/* Scalar observations in sample order.  Timestamps are optional labels
   (days, seconds); when present they must rise strictly and pair one to
   one with the values. */
struct TimeSeries {
    std::vector<double> values;
    std::vector<double> timestamps;  // empty when unlabelled

    TimeSeries() = default;
    explicit TimeSeries(std::vector<double> v, std::vector<double> t = {});

    std::size_t size() const { return values.size(); }
};

}  // namespace ecp
