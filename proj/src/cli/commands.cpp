#include "ecp/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ecp/cli/ingest.hpp"
#include "ecp/ecc/euler.hpp"
#include "ecp/ecc/mixup.hpp"
#include "ecp/embedding/takens.hpp"
#include "ecp/errors.hpp"
#include "ecp/geometry/alpha.hpp"
#include "ecp/inference/inference.hpp"
#include "ecp/oracle/cech.hpp"
#include "ecp/oracle/grid2d.hpp"
#include "ecp/rng.hpp"
#include "ecp/signals/signals.hpp"
#include "ecp/systems/eeg.hpp"
#include "ecp/systems/logistic.hpp"
#include "ecp/systems/lorenz.hpp"
#include "ecp/systems/sweep.hpp"

namespace ecp {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

fs::path out_path(const RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out);
    return fs::path(cfg.out) / name;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SchemaError("cannot write '" + path.string() + "'");
    f << text;
}

void write_json(const fs::path& path, const json& j) {
    write_text(path, j.dump(2) + "\n");
}

json report_json(const DetectionReport& rep) {
    return json{{"search_window",
                 {{"start", rep.search_window.start},
                  {"end", rep.search_window.end}}},
                {"t_S", rep.t_S},
                {"t_G", rep.t_G},
                {"t_F", rep.t_F},
                {"t_RM", rep.t_RM},
                {"t_star", rep.t_star}};
}

/* The synth generators behind both `synth` and `detect --synth`.  The
   detect-facing variants are frozen so experiment configs stay one line;
   custom generator settings go through `synth` and back in as CSV. */

LorenzRun seeded_lorenz(std::uint64_t seed) {
    SplitMix64 g(seed);
    LorenzParams p;
    p.initial_state = {g.uniform(-12.0, 12.0), g.uniform(-15.0, 15.0),
                       g.uniform(5.0, 35.0)};
    return gen_lorenz(p);
}

TimeSeries frozen_logistic(std::uint64_t seed) {
    return gen_logistic(logistic_step(3.2, 3.8, 450, 700), seed);
}

struct Prepared {
    TimeSeries series;
    PointCloud embedded;
    int tau = 1;
    int d = 2;
    double dt = 1.0;     // index to time-unit scale, for printing only
    bool native = false; // embedded is a generator-native trajectory
};

void resolve_embedding(const TimeSeries& series, const RunConfig& cfg,
                       int& tau, int& d) {
    tau = cfg.tau;
    d = cfg.d;
    if (tau == 0) tau = select_delay_mi(series, cfg.tau_max).tau;
    if (d == 0) d = select_dim_fnn(series, tau, cfg.d_max).d;
}

Prepared prepare_series(TimeSeries series, const RunConfig& cfg) {
    Prepared prep;
    resolve_embedding(series, cfg, prep.tau, prep.d);
    prep.embedded =
        takens_embed(series, EmbeddingParams{prep.tau, prep.d});
    prep.series = std::move(series);
    return prep;
}

Prepared prepare_input(const RunConfig& cfg) {
    if (!cfg.synth.empty()) {
        if (cfg.synth == "lorenz") {
            LorenzRun run = seeded_lorenz(cfg.seed);
            Prepared prep;
            prep.series = std::move(run.x);
            prep.embedded = std::move(run.trajectory);
            prep.tau = 1;
            prep.d = 3;
            prep.dt = LorenzParams{}.dt;
            prep.native = true;
            return prep;
        }
        if (cfg.synth == "logistic") {
            RunConfig local = cfg;
            if (local.tau == 0) local.tau = 1;
            if (local.d == 0) local.d = 2;
            return prepare_series(frozen_logistic(cfg.seed), local);
        }
        if (cfg.synth == "eeg")
            return prepare_series(gen_eeg(EegParams{}, cfg.seed), cfg);
        throw UsageError("unknown synth kind '" + cfg.synth +
                         "'; expected lorenz, logistic, or eeg");
    }
    if (cfg.input.empty())
        throw UsageError("no input: give an input CSV or a synth kind");
    auto loaded = ingest_csv(cfg.input);
    if (std::holds_alternative<OnsetDataset>(loaded))
        throw UsageError("'" + cfg.input +
                         "' is a year-keyed onset dataset; this command "
                         "needs a single t,value series");
    return prepare_series(std::get<TimeSeries>(std::move(loaded)), cfg);
}

int raw_window_for(const RunConfig& cfg, int tau) {
    return cfg.w_raw > 0 ? cfg.w_raw : cfg.w * tau;
}

struct TraceBundle {
    SignalTrace s, g, f, rm;
};

TraceBundle make_traces(const Prepared& prep, const RunConfig& cfg) {
    TraceBundle tr;
    tr.s = signal_S(prep.embedded, cfg.w, cfg.stride, cfg.subsample);
    tr.g = signal_G(prep.embedded, cfg.w, cfg.stride);
    const int w_raw = raw_window_for(cfg, prep.tau);
    tr.f = signal_F(prep.series, w_raw, cfg.stride,
                    HiguchiParams{higuchi_default_pmax(w_raw + 1)});
    tr.rm = signal_RM(prep.series, w_raw, cfg.stride);
    return tr;
}

// start/end of -1 fall back to the range every trace covers
SearchWindow resolve_window(const TraceBundle& tr, int start, int end) {
    SearchWindow win;
    win.start = std::max(std::max(tr.s.times.front(), tr.g.times.front()),
                         std::max(tr.f.times.front(), tr.rm.times.front()));
    win.end = std::min(std::min(tr.s.times.back(), tr.g.times.back()),
                       std::min(tr.f.times.back(), tr.rm.times.back()));
    if (start >= 0) win.start = start;
    if (end >= 0) win.end = end;
    if (win.start > win.end)
        throw EmptySearchWindow("search window [" +
                                std::to_string(win.start) + ", " +
                                std::to_string(win.end) + "] is empty");
    return win;
}

// combined_onset with the configured peak conventions applied
DetectionReport combine(const TraceBundle& tr, const RunConfig& cfg,
                        const SearchWindow& win) {
    SignalTrace s = tr.s;
    if (cfg.s_peak)
        for (double& v : s.values) v = -v;  // its argmin is the S peak
    SignalTrace rm = tr.rm;
    if (cfg.rm_absolute)
        for (double& v : rm.values) v = std::abs(v);
    return combined_onset(s, tr.g, tr.f, rm, win);
}

bool signal_enabled(const RunConfig& cfg, const char* name) {
    if (cfg.signals == "all") return true;
    std::string item;
    std::stringstream ss(cfg.signals);
    while (std::getline(ss, item, ','))
        if (item == name) return true;
    return false;
}

void write_traces(const TraceBundle& tr, const RunConfig& cfg) {
    const auto dump = [&cfg](const SignalTrace& trace, const char* name) {
        if (!signal_enabled(cfg, name)) return;
        std::ofstream f(out_path(cfg, std::string("trace_") + name + ".csv"),
                        std::ios::binary);
        trace_csv(trace, f);
    };
    dump(tr.s, "S");
    dump(tr.g, "G");
    dump(tr.f, "F");
    dump(tr.rm, "RM");
}

// first trace index at doy >= start, last at doy <= end
SearchWindow doy_window(const TimeSeries& series, int start_doy,
                        int end_doy) {
    const auto& doy = series.timestamps;
    const auto lo = std::lower_bound(doy.begin(), doy.end(),
                                     static_cast<double>(start_doy));
    const auto hi = std::upper_bound(doy.begin(), doy.end(),
                                     static_cast<double>(end_doy));
    if (lo >= hi)
        throw EmptySearchWindow("no samples between day " +
                                std::to_string(start_doy) + " and " +
                                std::to_string(end_doy));
    return SearchWindow{static_cast<int>(lo - doy.begin()),
                        static_cast<int>(hi - doy.begin()) - 1};
}

void require_doy_bounds(const RunConfig& cfg) {
    if (cfg.search_start < 0 || cfg.search_end < 0)
        throw EmptySearchWindow(
            "onset data needs a day-of-year search window; set "
            "search.start and search.end (e.g. 121 and 244)");
}

double doy_at(const TimeSeries& series, int index) {
    return series.timestamps[static_cast<std::size_t>(index)];
}

// argmin/argmax inside the window, ties to the earliest index
int extremum_in(const SignalTrace& tr, const SearchWindow& win,
                bool minimum) {
    bool found = false;
    int best_t = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        if (tr.times[i] < win.start || tr.times[i] > win.end) continue;
        const double v = minimum ? tr.values[i] : -tr.values[i];
        if (!found || v < best) {
            found = true;
            best = v;
            best_t = tr.times[i];
        }
    }
    if (!found)
        throw EmptySearchWindow("trace has no samples inside [" +
                                std::to_string(win.start) + ", " +
                                std::to_string(win.end) + "]");
    return best_t;
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const double n = static_cast<double>(a.size());
    double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double saa = 0, sbb = 0, sab = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
        sab += (a[i] - ma) * (b[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0)
        throw DegenerateInput("correlation of a constant column");
    return sab / std::sqrt(saa * sbb);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void cmd_detect(const RunConfig& cfg, std::ostream& out) {
    // year-keyed input runs the detector once per year
    if (!cfg.input.empty() && cfg.synth.empty()) {
        auto loaded = ingest_csv(cfg.input);
        if (std::holds_alternative<OnsetDataset>(loaded)) {
            const OnsetDataset data = std::get<OnsetDataset>(std::move(loaded));
            require_doy_bounds(cfg);
            json reports = json::array();
            std::string csv = "year,onset_doy,t_star\n";
            out << "year  onset_doy\n";
            for (const YearSeries& ys : data.years) {
                const Prepared prep = prepare_series(ys.series, cfg);
                const TraceBundle tr = make_traces(prep, cfg);
                const SearchWindow win = doy_window(
                    ys.series, cfg.search_start, cfg.search_end);
                const DetectionReport rep = combine(tr, cfg, win);
                const double doy = doy_at(ys.series, rep.t_star);
                reports.push_back(
                    {{"year", ys.year}, {"report", report_json(rep)}});
                csv += std::to_string(ys.year) + "," + fmt(doy) + "," +
                       std::to_string(rep.t_star) + "\n";
                out << ys.year << "  " << doy << "\n";
            }
            write_json(out_path(cfg, "report.json"), reports);
            write_text(out_path(cfg, "onsets.csv"), csv);
            out << "wrote " << out_path(cfg, "report.json").string() << "\n";
            return;
        }
    }

    const Prepared prep = prepare_input(cfg);
    const TraceBundle tr = make_traces(prep, cfg);
    const SearchWindow win =
        resolve_window(tr, cfg.search_start, cfg.search_end);
    const DetectionReport rep = combine(tr, cfg, win);

    write_traces(tr, cfg);
    write_json(out_path(cfg, "report.json"), report_json(rep));

    out << "embedding: tau=" << prep.tau << " d=" << prep.d
        << (prep.native ? " (native trajectory)" : "") << "\n";
    out << "onsets: t_S=" << rep.t_S << " t_G=" << rep.t_G
        << " t_F=" << rep.t_F << " t_RM=" << rep.t_RM << "\n";
    out << "combined t* = " << rep.t_star;
    if (prep.dt != 1.0) out << "  (t = " << rep.t_star * prep.dt << ")";
    out << "\n";
    out << "wrote " << out_path(cfg, "report.json").string() << "\n";
}

void cmd_bench(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input.empty()) throw UsageError("bench needs an input dataset");
    if (cfg.truth.empty())
        throw UsageError("bench needs a ground-truth file (truth = ...)");
    auto loaded = ingest_csv(cfg.input);
    if (!std::holds_alternative<OnsetDataset>(loaded))
        throw UsageError("bench needs a year,doy,value dataset");
    OnsetDataset data = std::get<OnsetDataset>(std::move(loaded));
    attach_truth(data, cfg.truth);
    if (data.years.size() < 2)
        throw OutOfRange("leave-one-out needs at least two years, got " +
                         std::to_string(data.years.size()));
    require_doy_bounds(cfg);

    const std::vector<std::string> methods{"rm", "cusum", "s_only",
                                           "combined", "combined_multi_tau"};
    std::vector<double> mae(methods.size(), 0.0);
    double mae_loo = 0.0;
    double truth_sum = 0.0;
    for (const double t : data.truth) truth_sum += t;

    json years = json::array();
    out << "year  truth     rm  cusum s_only  comb  multi\n";
    for (std::size_t yi = 0; yi < data.years.size(); ++yi) {
        const YearSeries& ys = data.years[yi];
        const Prepared prep = prepare_series(ys.series, cfg);
        const TraceBundle tr = make_traces(prep, cfg);
        const SearchWindow win =
            doy_window(ys.series, cfg.search_start, cfg.search_end);

        // the multi-delay channel replaces S inside the combined vote
        MultiDelayParams mp;
        mp.taus = cfg.delays;
        mp.d = prep.d;
        mp.w = cfg.w;
        mp.n = cfg.subsample;
        SignalTrace s_star;
        s_star.kind = SignalKind::S;
        for (int t = win.start; t <= win.end; t += cfg.stride) {
            s_star.times.push_back(t);
            s_star.values.push_back(static_cast<double>(
                multi_delay_stat(prep.series, t, mp).s_star));
        }

        SignalTrace rm_tr = tr.rm;
        if (cfg.rm_absolute)
            for (double& v : rm_tr.values) v = std::abs(v);

        const double detected[] = {
            doy_at(ys.series, extremum_in(rm_tr, win, false)),
            doy_at(ys.series,
                   cusum_baseline(ys.series, win, cfg.cusum_k, cfg.cusum_h)
                       .t),
            doy_at(ys.series, extremum_in(tr.s, win, true)),
            doy_at(ys.series, combine(tr, cfg, win).t_star),
            doy_at(ys.series,
                   combined_onset(s_star, tr.g, tr.f, rm_tr, win).t_star),
        };

        json row{{"year", ys.year}, {"truth", data.truth[yi]}};
        char line[128];
        std::snprintf(line, sizeof line, "%4d  %5.1f  ", ys.year,
                      data.truth[yi]);
        out << line;
        for (std::size_t m = 0; m < methods.size(); ++m) {
            mae[m] += std::abs(detected[m] - data.truth[yi]);
            row[methods[m]] = detected[m];
            std::snprintf(line, sizeof line, "%5.0f ", detected[m]);
            out << line;
        }
        out << "\n";

        const double loo_pred =
            (truth_sum - data.truth[yi]) /
            static_cast<double>(data.years.size() - 1);
        mae_loo += std::abs(loo_pred - data.truth[yi]);
        row["loo_mean"] = loo_pred;
        years.push_back(row);
    }

    const double n_years = static_cast<double>(data.years.size());
    json mae_json;
    out << "\nmean absolute error (days)\n";
    for (std::size_t m = 0; m < methods.size(); ++m) {
        mae[m] /= n_years;
        mae_json[methods[m]] = mae[m];
        out << "  " << methods[m] << ": " << mae[m] << "\n";
    }
    mae_loo /= n_years;
    mae_json["loo_mean"] = mae_loo;
    out << "  loo_mean: " << mae_loo << "\n";

    write_json(out_path(cfg, "bench.json"),
               json{{"mae", mae_json}, {"years", years}});
    out << "wrote " << out_path(cfg, "bench.json").string() << "\n";
}

void cmd_permtest(const RunConfig& cfg, int t, const std::string& dump_null,
                  std::ostream& out) {
    const Prepared prep = prepare_input(cfg);
    const WindowPair wp = window_pair(prep.embedded, t, cfg.w);
    const PermutationResult res =
        perm_test(thin_uniform(wp.X, cfg.subsample),
                  thin_uniform(wp.Y, cfg.subsample), cfg.perm_b, cfg.seed);

    const bool reject = res.p_value < cfg.alpha;
    write_json(out_path(cfg, "permtest.json"),
               json{{"b", res.B},
                    {"null_mean", res.null_mean},
                    {"null_sd", res.null_sd},
                    {"p_value", res.p_value},
                    {"reject", reject},
                    {"s_obs", res.s_obs},
                    {"t", t}});
    if (!dump_null.empty()) {
        std::ofstream f(dump_null, std::ios::binary);
        if (!f) throw SchemaError("cannot write '" + dump_null + "'");
        null_samples_csv(res, f);
    }

    out << "S_obs = " << res.s_obs << "\n";
    out << "null  = " << res.null_mean << " +- " << res.null_sd << "  (B="
        << res.B << ")\n";
    out << "p     = " << res.p_value
        << (reject ? "  -> transition at alpha " : "  -> no call at alpha ")
        << cfg.alpha << "\n";
}

void cmd_sweep(const RunConfig& cfg, double lo, double hi, double step,
               std::ostream& out) {
    if (step <= 0.0) throw UsageError("sweep step must be positive");
    if (hi < lo) throw UsageError("sweep range is reversed");
    std::vector<double> grid;
    for (double l = lo; l <= hi + 1e-9; l += step) grid.push_back(l);

    SweepConfig scfg;
    scfg.subsample = cfg.subsample;
    scfg.seed = cfg.seed;
    const auto rows = sweep_logistic(grid, scfg);

    std::string csv = "lambda,s,lambda1\n";
    std::vector<double> s_col, l1_col;
    for (const auto& r : rows) {
        csv += fmt(r.lambda) + "," + std::to_string(r.s) + "," +
               fmt(r.lambda1) + "\n";
        s_col.push_back(static_cast<double>(r.s));
        l1_col.push_back(r.lambda1);
    }
    write_text(out_path(cfg, "sweep.csv"), csv);

    out << rows.size() << " grid points, lambda " << lo << " .. " << hi
        << "\n";
    if (rows.size() >= 3)
        out << "corr(S, lambda1) = " << pearson(s_col, l1_col) << "\n";
    out << "wrote " << out_path(cfg, "sweep.csv").string() << "\n";
}

void cmd_noise_sweep(const RunConfig& cfg, const std::vector<double>& sigmas,
                     int trials, std::ostream& out) {
    NoiseSweepConfig ncfg;  // frozen experiment protocol; only the seed moves
    ncfg.seed = cfg.seed;
    const auto rows = noise_sweep(sigmas, trials, ncfg);

    std::string csv = "sigma,s_mean,s_sd,g_mean,g_sd\n";
    out << "sigma   S mean    sd     G mean     sd\n";
    for (const auto& r : rows) {
        csv += fmt(r.sigma) + "," + fmt(r.s_mean) + "," + fmt(r.s_sd) + "," +
               fmt(r.g_mean) + "," + fmt(r.g_sd) + "\n";
        char line[128];
        std::snprintf(line, sizeof line, "%5.2f  %7.2f %5.2f   %.4f  %.4f\n",
                      r.sigma, r.s_mean, r.s_sd, r.g_mean, r.g_sd);
        out << line;
    }
    write_text(out_path(cfg, "noise_sweep.csv"), csv);
    out << "wrote " << out_path(cfg, "noise_sweep.csv").string() << "\n";
}

void cmd_synth(const RunConfig& cfg, const SynthOptions& opt,
               std::ostream& out) {
    TimeSeries series;
    if (cfg.synth == "lorenz") {
        series = seeded_lorenz(cfg.seed).x;
    } else if (cfg.synth == "logistic") {
        LogisticParams p =
            opt.step_at >= 0
                ? logistic_step(opt.lambda, opt.lambda_to, opt.step_at, opt.n)
                : logistic_constant(opt.lambda, opt.n);
        p.noise_sigma = opt.noise_sigma;
        series = gen_logistic(p, cfg.seed);
    } else if (cfg.synth == "eeg") {
        series = gen_eeg(EegParams{}, cfg.seed);
    } else {
        throw UsageError("unknown synth kind '" + cfg.synth +
                         "'; expected lorenz, logistic, or eeg");
    }

    std::string csv = "t,value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double t = series.timestamps.empty()
                             ? static_cast<double>(i)
                             : series.timestamps[i];
        csv += fmt(t) + "," + fmt(series.values[i]) + "\n";
    }
    const fs::path path = out_path(cfg, cfg.synth + ".csv");
    write_text(path, csv);
    out << series.size() << " samples\n";
    out << "wrote " << path.string() << "\n";
}

bool cmd_verify(std::uint64_t seed, int clouds, std::ostream& out) {
    if (clouds < 2) throw UsageError("verify needs at least 2 clouds");

    // union route: alpha-complex curve against the nerve oracle
    int union_checked = 0, union_bad = 0;
    for (int c = 0; c < clouds; ++c) {
        SplitMix64 g = SplitMix64::stream(seed, static_cast<std::uint64_t>(c));
        const int dim = (c % 2) ? 3 : 2;
        const int n = 2 + static_cast<int>(g.below(9));
        PointCloud cloud;
        cloud.dim = dim;
        for (int i = 0; i < n; ++i)
            cloud.pts.push_back({g.uniform(), g.uniform(),
                                 dim == 3 ? g.uniform() : 0.0});

        const StepFunction curve = ecc(alpha_filtration(cloud));
        const double top = std::max(curve.support_end() * 1.1, 1e-3);
        for (int k = 1; k <= 20; ++k) {
            const double r = top * k / 20.0;
            ++union_checked;
            if (curve.at(r) != cech_chi_oracle(cloud, r)) {
                ++union_bad;
                out << "cloud " << c << " (dim " << dim << ", n " << n
                    << ") disagrees at r = " << r << "\n";
            }
        }
    }

    // intersection route: the three-term profile against the raster
    int cross_checked = 0, cross_bad = 0;
    const int pairs = std::max(2, clouds / 5);
    for (int c = 0; c < pairs; ++c) {
        SplitMix64 g = SplitMix64::stream(seed + 1, static_cast<std::uint64_t>(c));
        const auto draw = [&g](int n) {
            PointCloud cloud;
            cloud.dim = 2;
            for (int i = 0; i < n; ++i)
                cloud.pts.push_back({g.uniform(), g.uniform(), 0.0});
            return cloud;
        };
        const PointCloud x = draw(2 + static_cast<int>(g.below(7)));
        const PointCloud y = draw(2 + static_cast<int>(g.below(7)));
        const MixupProfile pr = mixup_ecp(x, y);

        /* The intersection changes shape at every alpha value of x, y, or
           their union and at every cross half-distance; cancelling events
           never show in the profile, so the probe radii must come from the
           full critical set, midway between neighbours and well clear of
           both ends (a thin lens below the raster cell size reads as
           empty at any resolution the doubling loop will accept). */
        std::vector<double> crit;
        PointCloud both = x;
        both.pts.insert(both.pts.end(), y.pts.begin(), y.pts.end());
        const PointCloud* sources[] = {&x, &y, &both};
        for (const PointCloud* cl : sources)
            for (const auto& entry : alpha_filtration(*cl).entries)
                crit.push_back(entry.value);
        for (const auto& p : x.pts)
            for (const auto& q : y.pts)
                crit.push_back(0.5 * std::sqrt(dist2(p, q, 2)));
        std::sort(crit.begin(), crit.end());

        int probed = 0;
        for (std::size_t i = 0; i + 1 < crit.size() && probed < 5; ++i) {
            const double r = 0.5 * (crit[i] + crit[i + 1]);
            const double gap = 0.5 * (crit[i + 1] - crit[i]);
            if (r <= 0.01) continue;
            const GridSpec grid = grid_spec_for(x, &y, r, 128);
            const double cell =
                std::max(grid.hi[0] - grid.lo[0], grid.hi[1] - grid.lo[1]) /
                grid.resolution;
            if (gap < 1.5 * cell) continue;
            try {
                const int raster = grid_chi_intersect(x, y, r, grid);
                ++cross_checked;
                ++probed;
                if (pr.profile.at(r) != raster) {
                    ++cross_bad;
                    out << "pair " << c << " disagrees at r = " << r << "\n";
                }
            } catch (const NoConvergence&) {
                // raster cannot settle next to a transition; skip the probe
            }
        }
    }

    out << "union chi: " << (union_checked - union_bad) << "/"
        << union_checked << " radii agree\n";
    out << "intersection chi: " << (cross_checked - cross_bad) << "/"
        << cross_checked << " radii agree\n";
    const bool ok = union_bad == 0 && cross_bad == 0 && cross_checked > 0;
    out << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
    return ok;
}

void cmd_embed_select(const RunConfig& cfg, std::ostream& out) {
    RunConfig local = cfg;
    local.tau = 1;  // stop prepare_input from auto-selecting already
    local.d = 2;
    const Prepared prep = prepare_input(local);

    const DelayChoice tau = select_delay_mi(prep.series, cfg.tau_max);
    const DimChoice d = select_dim_fnn(prep.series, tau.tau, cfg.d_max);

    write_json(out_path(cfg, "embed.json"),
               json{{"d", d.d},
                    {"d_hit_cap", d.hit_cap},
                    {"tau", tau.tau},
                    {"tau_hit_cap", tau.hit_cap}});
    out << "tau = " << tau.tau << (tau.hit_cap ? "  (hit the cap)" : "")
        << "\n";
    out << "d = " << d.d << (d.hit_cap ? "  (hit the cap)" : "") << "\n";
    out << "wrote " << out_path(cfg, "embed.json").string() << "\n";
}

}  // namespace ecp
