#include "ecp/signals/signals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "ecp/ecc/mixup.hpp"
#include "ecp/errors.hpp"

namespace ecp {

void trace_csv(const SignalTrace& trace, std::ostream& out) {
    out << "t,value\n";
    char buf[40];
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", trace.values[i]);
        out << trace.times[i] << ',' << buf << '\n';
    }
}

WindowPair window_pair(const PointCloud& embedded, int t, int w) {
    if (w < 1)
        throw OutOfRange("window size must be positive, got " +
                         std::to_string(w));
    const int n = static_cast<int>(embedded.size());
    if (t - 2 * w < 0 || t + w >= n)
        throw OutOfRange("windows at t=" + std::to_string(t) +
                         " with w=" + std::to_string(w) + " overrun 0.." +
                         std::to_string(n - 1));
    WindowPair wp;
    wp.t = t;
    wp.w = w;
    const auto base = embedded.pts.begin();
    wp.X = PointCloud({base + (t - 2 * w), base + (t - w + 1)}, embedded.dim);
    wp.Y = PointCloud({base + t, base + (t + w + 1)}, embedded.dim);
    return wp;
}

PointCloud thin_uniform(const PointCloud& cloud, int n) {
    const int m = static_cast<int>(cloud.size());
    if (n <= 0 || n >= m) return cloud;
    if (n == 1)
        throw OutOfRange("cannot thin to a single point and keep both ends");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int i = static_cast<int>(
            std::lround(static_cast<double>(k) * (m - 1) / (n - 1)));
        pts.push_back(cloud.pts[i]);
    }
    return PointCloud(std::move(pts), cloud.dim);
}

namespace {

void check_window_grid(int n, int w, int stride, const char* what) {
    if (w < 1)
        throw OutOfRange("window size must be positive, got " +
                         std::to_string(w));
    if (stride < 1)
        throw OutOfRange("stride must be positive, got " +
                         std::to_string(stride));
    if (n < 3 * w + 1)
        throw TooFewPoints(std::string(what) + " with w=" +
                           std::to_string(w) + " needs at least " +
                           std::to_string(3 * w + 1) + " samples, got " +
                           std::to_string(n));
}

}  // namespace

SignalTrace signal_S(const PointCloud& embedded, int w, int stride,
                     int subsample) {
    check_window_grid(static_cast<int>(embedded.size()), w, stride,
                      "signal S");
    if (subsample != 0 && subsample < 2)
        throw OutOfRange("subsample needs at least 2 points, got " +
                         std::to_string(subsample));
    SignalTrace tr;
    tr.kind = SignalKind::S;
    const int n = static_cast<int>(embedded.size());
    for (int t = 2 * w; t + w < n; t += stride) {
        const WindowPair wp = window_pair(embedded, t, w);
        const MixupProfile pr = mixup_ecp(thin_uniform(wp.X, subsample),
                                          thin_uniform(wp.Y, subsample));
        tr.times.push_back(t);
        tr.values.push_back(static_cast<double>(pr.s_stat));
    }
    return tr;
}

SignalTrace signal_G(const PointCloud& embedded, int w, int stride) {
    check_window_grid(static_cast<int>(embedded.size()), w, stride,
                      "signal G");
    SignalTrace tr;
    tr.kind = SignalKind::G;
    const int n = static_cast<int>(embedded.size());
    for (int t = 2 * w; t + w < n; t += stride) {
        const WindowPair wp = window_pair(embedded, t, w);
        tr.times.push_back(t);
        tr.values.push_back(std::abs(variance_stats(wp.Y).variance -
                                     variance_stats(wp.X).variance));
    }
    return tr;
}

SignalTrace signal_F(const TimeSeries& series, int w_raw, int stride,
                     const HiguchiParams& params) {
    check_window_grid(static_cast<int>(series.size()), w_raw, stride,
                      "signal F");
    SignalTrace tr;
    tr.kind = SignalKind::F;
    const int n = static_cast<int>(series.size());
    const auto& x = series.values;
    for (int t = 2 * w_raw; t + w_raw < n; t += stride) {
        const TimeSeries pre(
            {x.begin() + (t - 2 * w_raw), x.begin() + (t - w_raw + 1)});
        const TimeSeries post({x.begin() + t, x.begin() + (t + w_raw + 1)});
        tr.times.push_back(t);
        tr.values.push_back(
            std::abs(higuchi_fd(post, params) - higuchi_fd(pre, params)));
    }
    return tr;
}

SignalTrace signal_RM(const TimeSeries& series, int w_raw, int stride) {
    check_window_grid(static_cast<int>(series.size()), w_raw, stride,
                      "signal RM");
    SignalTrace tr;
    tr.kind = SignalKind::RM;
    const int n = static_cast<int>(series.size());
    const auto& x = series.values;
    const auto mean_of = [&](int lo, int hi) {  // inclusive
        double s = 0;
        for (int i = lo; i <= hi; ++i) s += x[i];
        return s / (hi - lo + 1);
    };
    for (int t = 2 * w_raw; t + w_raw < n; t += stride) {
        tr.times.push_back(t);
        tr.values.push_back(mean_of(t, t + w_raw) -
                            mean_of(t - 2 * w_raw, t - w_raw));
    }
    return tr;
}

namespace {

int extremum_in(const SignalTrace& tr, const SearchWindow& win,
                bool want_max, const char* what) {
    int best_t = -1;
    double best_v = 0;
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        if (tr.times[i] < win.start || tr.times[i] > win.end) continue;
        const double v = tr.values[i];
        if (best_t == -1 || (want_max ? v > best_v : v < best_v)) {
            best_t = tr.times[i];
            best_v = v;
        }
    }
    if (best_t == -1)
        throw EmptySearchWindow(std::string(what) + " has no samples in " +
                                std::to_string(win.start) + ".." +
                                std::to_string(win.end));
    return best_t;
}

}  // namespace

DetectionReport combined_onset(const SignalTrace& s, const SignalTrace& g,
                               const SignalTrace& f, const SignalTrace& rm,
                               const SearchWindow& window) {
    if (window.start > window.end)
        throw EmptySearchWindow("search window " +
                                std::to_string(window.start) + ".." +
                                std::to_string(window.end) + " is empty");
    DetectionReport rep;
    rep.search_window = window;
    rep.t_S = extremum_in(s, window, false, "S trace");
    rep.t_G = extremum_in(g, window, true, "G trace");
    rep.t_F = extremum_in(f, window, true, "F trace");
    rep.t_RM = extremum_in(rm, window, true, "RM trace");
    rep.t_star = static_cast<int>(
        std::lround((rep.t_S + rep.t_G + rep.t_F + rep.t_RM) / 4.0));
    return rep;
}

CusumResult cusum_baseline(const TimeSeries& series,
                           const SearchWindow& window, double k, double h) {
    const int n = static_cast<int>(series.size());
    if (window.start > window.end || window.start < 0 || window.end >= n)
        throw EmptySearchWindow("search window " +
                                std::to_string(window.start) + ".." +
                                std::to_string(window.end) +
                                " does not fit the series");
    double mean = 0;
    for (const double v : series.values) mean += v;
    mean /= n;
    double var = 0;
    for (const double v : series.values) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / n);
    if (sd == 0.0)
        throw DegenerateSeries("constant series has no scale for CUSUM");

    CusumResult res;
    res.trace.kind = SignalKind::CUSUM;
    double c = 0.0;
    int best_t = -1;
    double best_c = 0.0;
    for (int t = 0; t < n; ++t) {
        const double z = (series.values[t] - mean) / sd;
        c = std::max(0.0, c + z - k);
        res.trace.times.push_back(t);
        res.trace.values.push_back(c);
        if (t < window.start || t > window.end) continue;
        if (!res.exceeded && c >= h) {
            res.t = t;
            res.exceeded = true;
        }
        if (best_t == -1 || c > best_c) {
            best_t = t;
            best_c = c;
        }
    }
    if (!res.exceeded) res.t = best_t;
    return res;
}

}  // namespace ecp
