#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ecp/embedding/series.hpp"

namespace ecp {

/* One scalar index series per year, day-of-year labelled, with optional
   per-year ground-truth onset days.  years climb; truth, once attached,
   aligns index for index with years. */
struct YearSeries {
    int year = 0;
    TimeSeries series;  // timestamps hold the day of year
};

struct OnsetDataset {
    std::vector<YearSeries> years;
    std::vector<double> truth;  // onset day of year; empty until attached

    bool has_truth() const { return !truth.empty(); }
};

/* Dispatch on the header row: "t,value" loads a TimeSeries,
   "year,doy,value" an OnsetDataset.  Truth files ("year,onset_doy") only
   make sense against a dataset, so they go through attach_truth. */
std::variant<TimeSeries, OnsetDataset> ingest_csv(const std::string& path);

TimeSeries read_series_csv(const std::string& path);
OnsetDataset read_onset_csv(const std::string& path);
void attach_truth(OnsetDataset& data, const std::string& path);

}  // namespace ecp
