#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ecp/cli/commands.hpp"
#include "ecp/cli/config.hpp"
#include "ecp/errors.hpp"

namespace {

/* Every data-facing subcommand takes the same knobs: a config file first,
   then flags on top.  Values are staged here and folded into a RunConfig
   only for flags the user actually passed, so the file cannot clobber the
   command line. */
struct CommonFlags {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::string input, truth, synth, tau, d, delays, signals, out;
    int w = 0, w_raw = 0, stride = 0, subsample = 0;
    int tau_max = 0, d_max = 0;
    int search_start = 0, search_end = 0;
    int perm_b = 0;
    double alpha = 0, cusum_k = 0, cusum_h = 0;
    std::uint64_t seed = 0;
    bool rm_absolute = false, s_peak = false;
};

int parse_dim(const std::string& flag, const std::string& v) {
    if (v == "auto") return 0;
    try {
        std::size_t used = 0;
        const int out = std::stoi(v, &used);
        if (used != v.size() || out < 1) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ecp::UsageError(flag + " needs a positive integer or 'auto'");
    }
}

void add_common(CLI::App* cmd, CommonFlags& f) {
    f.cmd = cmd;
    cmd->add_option("--config", f.config_path,
                    "key = value file applied before other flags");
    cmd->add_option("--input", f.input, "CSV input (t,value or year,doy,value)");
    cmd->add_option("--truth", f.truth, "ground-truth onset CSV (year,onset_doy)");
    cmd->add_option("--synth", f.synth, "generate input: lorenz|logistic|eeg");
    cmd->add_option("--tau", f.tau, "embedding delay, or 'auto'");
    cmd->add_option("--d", f.d, "embedding dimension, or 'auto'");
    cmd->add_option("--tau-max", f.tau_max, "cap for auto delay selection");
    cmd->add_option("--d-max", f.d_max, "cap for auto dimension selection");
    cmd->add_option("--w", f.w, "window size in embedded points");
    cmd->add_option("--w-raw", f.w_raw, "raw window for F/RM (default w*tau)");
    cmd->add_option("--stride", f.stride, "candidate grid stride");
    cmd->add_option("--subsample", f.subsample, "points kept per window (0 = all)");
    cmd->add_option("--delays", f.delays, "multi-tau set, e.g. 3,5,6,8,12");
    cmd->add_option("--search-start", f.search_start,
                    "search window start (index, or day of year for onset data)");
    cmd->add_option("--search-end", f.search_end, "search window end");
    cmd->add_option("--signals", f.signals, "traces to write: all or subset of S,G,F,RM");
    cmd->add_option("--b", f.perm_b, "permutation count");
    cmd->add_option("--alpha", f.alpha, "test level");
    cmd->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_flag("--rm-absolute", f.rm_absolute, "peak |RM| instead of signed RM");
    cmd->add_flag("--s-peak", f.s_peak, "exploratory: peak S instead of trough");
    cmd->add_option("--cusum-k", f.cusum_k, "CUSUM reference drift");
    cmd->add_option("--cusum-h", f.cusum_h, "CUSUM threshold");
}

ecp::RunConfig build_config(const CommonFlags& f) {
    ecp::RunConfig cfg;
    if (!f.config_path.empty()) ecp::load_config_file(f.config_path, cfg);
    const auto passed = [&f](const char* name) {
        return f.cmd->count(name) > 0;
    };
    if (passed("--input")) cfg.input = f.input;
    if (passed("--truth")) cfg.truth = f.truth;
    if (passed("--synth")) cfg.synth = f.synth;
    if (passed("--tau")) cfg.tau = parse_dim("--tau", f.tau);
    if (passed("--d")) cfg.d = parse_dim("--d", f.d);
    if (passed("--tau-max")) cfg.tau_max = f.tau_max;
    if (passed("--d-max")) cfg.d_max = f.d_max;
    if (passed("--w")) cfg.w = f.w;
    if (passed("--w-raw")) cfg.w_raw = f.w_raw;
    if (passed("--stride")) cfg.stride = f.stride;
    if (passed("--subsample")) cfg.subsample = f.subsample;
    if (passed("--delays")) cfg.delays = ecp::parse_delay_list(f.delays);
    if (passed("--search-start")) cfg.search_start = f.search_start;
    if (passed("--search-end")) cfg.search_end = f.search_end;
    if (passed("--signals")) cfg.signals = f.signals;
    if (passed("--b")) cfg.perm_b = f.perm_b;
    if (passed("--alpha")) cfg.alpha = f.alpha;
    if (passed("--seed")) cfg.seed = f.seed;
    if (passed("--out")) cfg.out = f.out;
    if (f.rm_absolute) cfg.rm_absolute = true;
    if (f.s_peak) cfg.s_peak = true;
    if (passed("--cusum-k")) cfg.cusum_k = f.cusum_k;
    if (passed("--cusum-h")) cfg.cusum_h = f.cusum_h;
    return cfg;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ecp::UsageError("bad number '" + item + "' in list");
        }
    }
    if (out.empty()) throw ecp::UsageError("empty number list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regime transition detection from scalar time series"};
    app.require_subcommand(1);
    int rc = 0;

    CommonFlags detect_f;
    add_common(app.add_subcommand("detect",
                                  "run the four signals and the combined onset"),
               detect_f);
    detect_f.cmd->callback(
        [&] { ecp::cmd_detect(build_config(detect_f), std::cout); });

    CommonFlags bench_f;
    add_common(app.add_subcommand("bench",
                                  "per-year MAE table against ground truth"),
               bench_f);
    bench_f.cmd->callback(
        [&] { ecp::cmd_bench(build_config(bench_f), std::cout); });

    CommonFlags perm_f;
    int perm_t = 0;
    std::string dump_null;
    add_common(app.add_subcommand("permtest",
                                  "permutation test at a candidate index"),
               perm_f);
    perm_f.cmd->add_option("--t", perm_t, "candidate transition index")
        ->required();
    perm_f.cmd->add_option("--dump-null", dump_null,
                           "write the null samples to this CSV");
    perm_f.cmd->callback([&] {
        ecp::cmd_permtest(build_config(perm_f), perm_t, dump_null, std::cout);
    });

    CommonFlags sweep_f;
    double sweep_lo = 2.8, sweep_hi = 4.0, sweep_step = 0.05;
    add_common(app.add_subcommand("sweep",
                                  "S and lambda1 across a logistic lambda grid"),
               sweep_f);
    sweep_f.cmd->add_option("--lo", sweep_lo, "grid start")->capture_default_str();
    sweep_f.cmd->add_option("--hi", sweep_hi, "grid end")->capture_default_str();
    sweep_f.cmd->add_option("--step", sweep_step, "grid step")
        ->capture_default_str();
    sweep_f.cmd->callback([&] {
        ecp::cmd_sweep(build_config(sweep_f), sweep_lo, sweep_hi, sweep_step,
                       std::cout);
    });

    CommonFlags noise_f;
    std::string sigmas = "0,0.05,0.1,0.15,0.3,0.5";
    int trials = 20;
    add_common(app.add_subcommand("noise-sweep",
                                  "S and G degradation under observation noise"),
               noise_f);
    noise_f.cmd->add_option("--sigmas", sigmas, "noise levels, comma separated")
        ->capture_default_str();
    noise_f.cmd->add_option("--trials", trials, "trials per level")
        ->capture_default_str();
    noise_f.cmd->callback([&] {
        ecp::cmd_noise_sweep(build_config(noise_f), parse_double_list(sigmas),
                             trials, std::cout);
    });

    CommonFlags synth_f;
    std::string synth_kind;
    ecp::SynthOptions synth_opt;
    add_common(app.add_subcommand("synth", "emit a generator run as CSV"),
               synth_f);
    synth_f.cmd->add_option("kind", synth_kind, "lorenz|logistic|eeg")
        ->required();
    synth_f.cmd->add_option("--lambda", synth_opt.lambda, "logistic lambda")
        ->capture_default_str();
    synth_f.cmd->add_option("--lambda-to", synth_opt.lambda_to,
                            "logistic step target");
    synth_f.cmd->add_option("--step-at", synth_opt.step_at,
                            "logistic step index (omit for constant)");
    synth_f.cmd->add_option("--n", synth_opt.n, "logistic samples")
        ->capture_default_str();
    synth_f.cmd->add_option("--noise-sigma", synth_opt.noise_sigma,
                            "observation noise");
    synth_f.cmd->callback([&] {
        ecp::RunConfig cfg = build_config(synth_f);
        cfg.synth = synth_kind;
        ecp::cmd_synth(cfg, synth_opt, std::cout);
    });

    auto* verify_cmd =
        app.add_subcommand("verify", "cross-check the alpha route against "
                                     "the nerve and raster oracles");
    std::uint64_t verify_seed = 0;
    int verify_clouds = 40;
    verify_cmd->add_option("--seed", verify_seed, "RNG seed")
        ->capture_default_str();
    verify_cmd->add_option("--clouds", verify_clouds, "random clouds to test")
        ->capture_default_str();
    verify_cmd->callback([&] {
        if (!ecp::cmd_verify(verify_seed, verify_clouds, std::cout)) rc = 2;
    });

    CommonFlags embed_f;
    add_common(app.add_subcommand("embed-select",
                                  "pick tau and d by MI and FNN"),
               embed_f);
    embed_f.cmd->callback(
        [&] { ecp::cmd_embed_select(build_config(embed_f), std::cout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ecp::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ecp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
