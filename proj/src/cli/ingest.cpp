#include "ecp/cli/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

std::string normalized(std::string s) {
    // strip a UTF-8 BOM, whitespace, and case so headers compare plainly
    if (s.rfind("\xEF\xBB\xBF", 0) == 0) s.erase(0, 3);
    std::string out;
    for (const char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(
                std::tolower(static_cast<unsigned char>(c))));
    return out;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double numeric_cell(const std::string& cell, std::size_t lineno) {
    try {
        std::size_t used = 0;
        const std::string t = normalized(cell);
        const double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, "non-numeric cell '" + cell + "'");
    }
}

struct CsvFile {
    std::string header;           // normalized
    std::vector<std::string> rows;  // raw data lines
    std::vector<std::size_t> linenos;
};

CsvFile slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    CsvFile file;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = line;
        const std::size_t hash = stripped.find('#');
        if (hash != std::string::npos) stripped.erase(hash);
        bool blank = true;
        for (const char c : stripped)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        if (file.header.empty()) {
            file.header = normalized(stripped);
            continue;
        }
        file.rows.push_back(stripped);
        file.linenos.push_back(lineno);
    }
    if (file.header.empty())
        throw SchemaError("'" + path + "' has no header row");
    return file;
}

std::vector<double> row_numbers(const CsvFile& file, std::size_t i,
                                std::size_t want) {
    const auto cells = split_row(file.rows[i]);
    if (cells.size() != want)
        throw ParseError(file.linenos[i],
                         "expected " + std::to_string(want) +
                             " columns, got " + std::to_string(cells.size()));
    std::vector<double> out;
    out.reserve(want);
    for (const auto& c : cells) out.push_back(numeric_cell(c, file.linenos[i]));
    return out;
}

int year_cell(double v, std::size_t lineno) {
    const int y = static_cast<int>(v);
    if (static_cast<double>(y) != v)
        throw ParseError(lineno, "year must be an integer");
    return y;
}

constexpr std::size_t kMinDaysPerYear = 180;

}  // namespace

TimeSeries read_series_csv(const std::string& path) {
    const CsvFile file = slurp(path);
    if (file.header != "t,value")
        throw SchemaError("'" + path + "' header is not t,value");
    std::vector<double> t, v;
    for (std::size_t i = 0; i < file.rows.size(); ++i) {
        const auto nums = row_numbers(file, i, 2);
        t.push_back(nums[0]);
        v.push_back(nums[1]);
    }
    return TimeSeries(std::move(v), std::move(t));
}

OnsetDataset read_onset_csv(const std::string& path) {
    const CsvFile file = slurp(path);
    if (file.header != "year,doy,value")
        throw SchemaError("'" + path + "' header is not year,doy,value");

    // rows grouped by year in file order; doy must climb within each year
    std::map<int, std::pair<std::vector<double>, std::vector<double>>> by_year;
    for (std::size_t i = 0; i < file.rows.size(); ++i) {
        const auto nums = row_numbers(file, i, 3);
        const int year = year_cell(nums[0], file.linenos[i]);
        auto& [doys, vals] = by_year[year];
        if (!doys.empty() && nums[1] <= doys.back())
            throw ParseError(file.linenos[i],
                             "day of year must climb within year " +
                                 std::to_string(year));
        doys.push_back(nums[1]);
        vals.push_back(nums[2]);
    }
    if (by_year.empty()) throw SchemaError("'" + path + "' has no data rows");

    OnsetDataset data;
    for (auto& [year, cols] : by_year) {
        if (cols.first.size() < kMinDaysPerYear)
            throw SchemaError("year " + std::to_string(year) + " has only " +
                              std::to_string(cols.first.size()) +
                              " days, need " +
                              std::to_string(kMinDaysPerYear));
        YearSeries ys;
        ys.year = year;
        ys.series = TimeSeries(std::move(cols.second), std::move(cols.first));
        data.years.push_back(std::move(ys));
    }
    return data;
}

void attach_truth(OnsetDataset& data, const std::string& path) {
    const CsvFile file = slurp(path);
    if (file.header != "year,onset_doy")
        throw SchemaError("'" + path + "' header is not year,onset_doy");

    std::map<int, double> truth;
    for (std::size_t i = 0; i < file.rows.size(); ++i) {
        const auto nums = row_numbers(file, i, 2);
        const int year = year_cell(nums[0], file.linenos[i]);
        if (!truth.emplace(year, nums[1]).second)
            throw ParseError(file.linenos[i],
                             "duplicate truth row for year " +
                                 std::to_string(year));
    }

    data.truth.clear();
    for (const YearSeries& ys : data.years) {
        const auto it = truth.find(ys.year);
        if (it == truth.end())
            throw SchemaError("no ground-truth onset for year " +
                              std::to_string(ys.year));
        data.truth.push_back(it->second);
        truth.erase(it);
    }
    if (!truth.empty())
        throw SchemaError("ground truth covers year " +
                          std::to_string(truth.begin()->first) +
                          " that the dataset lacks");
}

std::variant<TimeSeries, OnsetDataset> ingest_csv(const std::string& path) {
    const CsvFile file = slurp(path);
    if (file.header == "t,value") return read_series_csv(path);
    if (file.header == "year,doy,value") return read_onset_csv(path);
    if (file.header == "year,onset_doy")
        throw SchemaError(
            "'" + path +
            "' is a ground-truth file; pass it alongside a year,doy,value "
            "dataset instead");
    throw SchemaError("'" + path + "' header '" + file.header +
                      "' matches no schema; expected t,value or "
                      "year,doy,value or year,onset_doy");
}

}  // namespace ecp
