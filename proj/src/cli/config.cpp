#include "ecp/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "ecp/errors.hpp"

namespace ecp {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

int to_int(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const int out = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw UsageError("config key '" + key + "' needs an integer, got '" +
                         v + "'");
    }
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double out = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw UsageError("config key '" + key + "' needs a number, got '" +
                         v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw UsageError("config key '" + key + "' needs true or false, got '" +
                     v + "'");
}

// tau and d accept "auto" as 0
int dim_value(const std::string& key, const std::string& v) {
    if (v == "auto") return 0;
    const int out = to_int(key, v);
    if (out < 1)
        throw UsageError("config key '" + key + "' needs a positive value");
    return out;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "input") cfg.input = value;
    else if (key == "truth") cfg.truth = value;
    else if (key == "synth") cfg.synth = value;
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(
                 std::stoull(value));
    else if (key == "delays") cfg.delays = parse_delay_list(value);
    else if (key == "signals") cfg.signals = value;
    else if (key == "embedding.tau") cfg.tau = dim_value(key, value);
    else if (key == "embedding.d") cfg.d = dim_value(key, value);
    else if (key == "embedding.tau_max") cfg.tau_max = to_int(key, value);
    else if (key == "embedding.d_max") cfg.d_max = to_int(key, value);
    else if (key == "window.w") cfg.w = to_int(key, value);
    else if (key == "window.w_raw") cfg.w_raw = to_int(key, value);
    else if (key == "window.stride") cfg.stride = to_int(key, value);
    else if (key == "window.subsample") cfg.subsample = to_int(key, value);
    else if (key == "search.start") cfg.search_start = to_int(key, value);
    else if (key == "search.end") cfg.search_end = to_int(key, value);
    else if (key == "perm.b") cfg.perm_b = to_int(key, value);
    else if (key == "perm.alpha") cfg.alpha = to_double(key, value);
    else if (key == "output.dir") cfg.out = value;
    else if (key == "rm.absolute") cfg.rm_absolute = to_bool(key, value);
    else if (key == "s.peak") cfg.s_peak = to_bool(key, value);
    else if (key == "cusum.k") cfg.cusum_k = to_double(key, value);
    else if (key == "cusum.h") cfg.cusum_h = to_double(key, value);
    else throw UsageError("unknown config key '" + key + "'");
}

}  // namespace

std::vector<int> parse_delay_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (item.empty()) continue;
        out.push_back(to_int("delays", item));
    }
    if (out.empty()) throw UsageError("delay list is empty");
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] < 1)
            throw UsageError("delays must be positive, got " +
                             std::to_string(out[i]));
        if (i > 0 && out[i] <= out[i - 1])
            throw UsageError("delays must climb strictly");
    }
    return out;
}

void load_config(std::istream& in, RunConfig& cfg) {
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw UsageError("config line " + std::to_string(lineno) +
                                 ": unterminated section header");
            section = trimmed(line.substr(1, line.size() - 2));
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(lineno) +
                             ": expected key = value");
        std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (key.empty())
            throw UsageError("config line " + std::to_string(lineno) +
                             ": empty key");
        if (!section.empty()) key = section + "." + key;
        apply(cfg, key, value);
    }
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    load_config(in, cfg);
}

}  // namespace ecp
