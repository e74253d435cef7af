#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ecp {

/* Everything a run needs, with working defaults for all but the input.
   tau or d of 0 means "auto": pick by mutual information / false nearest
   neighbours before embedding.  search bounds of -1 mean the full grid
   the traces share.  For onset datasets the search bounds are in day of
   year, otherwise they are sample indices. */
struct RunConfig {
    std::string input;       // CSV path; empty when synth is used
    std::string truth;       // ground-truth onset CSV (bench)
    std::string synth;       // "", "lorenz", "logistic", "eeg"

    int tau = 6;             // 0 = auto
    int d = 3;               // 0 = auto
    int tau_max = 30;        // auto-selection caps
    int d_max = 5;

    int w = 20;              // embedded window size
    int w_raw = 0;           // raw window for F/RM; 0 = w * tau
    int stride = 1;
    int subsample = 20;      // points per window fed to the mixup; 0 = all

    std::vector<int> delays{3, 5, 6, 8, 12};  // multi-tau channel set

    int search_start = -1;
    int search_end = -1;

    std::string signals = "all";  // comma subset of S,G,F,RM to write out

    int perm_b = 100;
    double alpha = 0.05;
    std::uint64_t seed = 0;

    std::string out = ".";

    bool rm_absolute = false;  // peak |RM| instead of the signed maximum
    bool s_peak = false;       // exploratory: peak S instead of its trough

    double cusum_k = 0.5;
    double cusum_h = 5.0;
};

/* Flat key = value lines with optional [section] headers; a header turns
   the following keys into section.key.  '#' starts a comment.  Unknown
   keys and unreadable values are UsageError, so a typo cannot silently
   fall back to a default. */
void load_config(std::istream& in, RunConfig& cfg);
void load_config_file(const std::string& path, RunConfig& cfg);

// "3,5,6" -> {3, 5, 6}; distinct positive integers in climbing order
std::vector<int> parse_delay_list(const std::string& text);

}  // namespace ecp
