#pragma once

#include <iosfwd>
#include <vector>

#include "ecp/embedding/series.hpp"
#include "ecp/geometry/point_cloud.hpp"
#include "ecp/signals/higuchi.hpp"

namespace ecp {

enum class SignalKind { S, G, F, RM, CUSUM };

/* One detection signal sampled over candidate transition indices.  times
   climb strictly; values stay finite (S carries small integers). */
struct SignalTrace {
    SignalKind kind = SignalKind::S;
    std::vector<int> times;
    std::vector<double> values;
};

void trace_csv(const SignalTrace& trace, std::ostream& out);

/* Adjacent windows around candidate index t: X covers t-2w..t-w, Y covers
   t..t+w, both ends inclusive, so each holds w+1 points and the ranges
   never touch. */
struct WindowPair {
    int t = 0;
    int w = 0;
    PointCloud X, Y;
};

WindowPair window_pair(const PointCloud& embedded, int t, int w);

// uniform-stride thinning to n points, both endpoints kept; n = 0 or
// n >= size returns the cloud untouched
PointCloud thin_uniform(const PointCloud& cloud, int n);

// S(t), the largest |dchi| between the windows at t.  subsample > 0 thins
// each window to that many points by uniform stride, endpoints kept.
SignalTrace signal_S(const PointCloud& embedded, int w, int stride = 1,
                     int subsample = 0);

// G(t) = |Var(Y_t) - Var(X_t)| of the embedded windows
SignalTrace signal_G(const PointCloud& embedded, int w, int stride = 1);

// F(t) = |higuchi(post) - higuchi(pre)| on raw windows of w_raw+1 samples
SignalTrace signal_F(const TimeSeries& series, int w_raw, int stride,
                     const HiguchiParams& params);

// RM(t) = mean(post) - mean(pre), signed so upward onsets peak positive
SignalTrace signal_RM(const TimeSeries& series, int w_raw, int stride = 1);

struct SearchWindow {
    int start = 0;
    int end = 0;  // inclusive
};

struct DetectionReport {
    int t_S = 0;
    int t_G = 0;
    int t_F = 0;
    int t_RM = 0;
    int t_star = 0;
    SearchWindow search_window;
};

/* S votes with its trough, the others with their peaks; the combined
   onset is the rounded mean of the four.  Extremum ties go to the
   earliest index. */
DetectionReport combined_onset(const SignalTrace& s, const SignalTrace& g,
                               const SignalTrace& f, const SignalTrace& rm,
                               const SearchWindow& window);

struct CusumResult {
    int t = 0;
    bool exceeded = false;  // false means the argmax fallback fired
    SignalTrace trace;      // statistic over the whole series
};

// one-sided CUSUM on standardized values with drift k: the onset is the
// first in-window index where the statistic reaches h
CusumResult cusum_baseline(const TimeSeries& series,
                           const SearchWindow& window, double k, double h);

}  // namespace ecp
