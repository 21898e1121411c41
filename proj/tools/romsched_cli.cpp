// Command line front end: experiment runner, sweeps, the hard-instance
// experiment, stability and deviation estimators, and the exact oracle.
// Exit codes: 0 success, 1 validation/config error, 2 invariant violation
// during an audited run.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "romsched/harness.hpp"
#include "romsched/opt.hpp"
#include "romsched/rng.hpp"

using namespace romsched;

namespace {

struct CommonFlags {
    std::string config_path;
    std::string algo;
    std::string instance;
    std::string family;
    int m = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::string delta_log_base;
    std::string out;
    int threads = 0;
    int n = 0;
    std::uint64_t instance_seed = 0;
    double lo = 0.0, hi = 0.0, high = 0.0;
    int high_count = 0;
    double alpha = 0.0, x_min = 0.0, cap = 0.0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file; flags win");
    cmd->add_option("--algo", flags.algo,
                    "graham|lightload|lightload_rom|lightload_bpre|secretary");
    cmd->add_option("--instance", flags.instance, "instance file (one size per line)");
    cmd->add_option("--family", flags.family,
                    "uniform|bimodal|extremal_bimodal|pareto");
    cmd->add_option("--n", flags.n, "jobs for generated instances (default 2m)");
    cmd->add_option("--instance-seed", flags.instance_seed, "generator seed");
    cmd->add_option("--lo", flags.lo, "uniform lower edge / bimodal low size");
    cmd->add_option("--hi", flags.hi, "uniform upper edge");
    cmd->add_option("--high", flags.high, "bimodal high size");
    cmd->add_option("--high-count", flags.high_count, "bimodal high-job count");
    cmd->add_option("--alpha", flags.alpha, "pareto tail exponent");
    cmd->add_option("--x-min", flags.x_min, "pareto scale");
    cmd->add_option("--cap", flags.cap, "pareto truncation (0 = none)");
    cmd->add_option("--m", flags.m, "number of machines");
    cmd->add_option("--trials", flags.trials, "number of permutations");
    cmd->add_option("--seed", flags.seed, "experiment seed");
    cmd->add_option("--delta-log-base", flags.delta_log_base,
                    "natural|base2|base10");
    cmd->add_option("--out", flags.out, "output CSV path");
    cmd->add_option("--threads", flags.threads, "worker threads (trial level)");
}

ExperimentConfig build_config(const CLI::App* cmd, const CommonFlags& flags) {
    ExperimentConfig config;
    if (!flags.config_path.empty())
        config = ExperimentConfig::from_json_file(flags.config_path);
    if (cmd->count("--algo")) config.algorithm = flags.algo;
    if (cmd->count("--instance")) config.instance_file = flags.instance;
    if (cmd->count("--family")) config.family = flags.family;
    if (cmd->count("--n")) config.n = flags.n;
    if (cmd->count("--instance-seed")) config.instance_seed = flags.instance_seed;
    if (cmd->count("--lo")) config.lo = flags.lo;
    if (cmd->count("--hi")) config.hi = flags.hi;
    if (cmd->count("--high")) config.high = flags.high;
    if (cmd->count("--high-count")) config.high_count = flags.high_count;
    if (cmd->count("--alpha")) config.alpha = flags.alpha;
    if (cmd->count("--x-min")) config.x_min = flags.x_min;
    if (cmd->count("--cap")) config.cap = flags.cap;
    if (cmd->count("--m")) config.m = flags.m;
    if (cmd->count("--trials")) config.trials = flags.trials;
    if (cmd->count("--seed")) config.seed = flags.seed;
    if (cmd->count("--delta-log-base")) {
        if (flags.delta_log_base == "natural") config.delta_log_base = LogBase::Natural;
        else if (flags.delta_log_base == "base2") config.delta_log_base = LogBase::Base2;
        else if (flags.delta_log_base == "base10")
            config.delta_log_base = LogBase::Base10;
        else throw std::invalid_argument("unknown log base: " + flags.delta_log_base);
    }
    if (cmd->count("--out")) config.out = flags.out;
    if (cmd->count("--threads")) config.threads = flags.threads;
    return config;
}

void print_aggregates(const TrialReport& report) {
    std::printf("baseline=%s value=%.12g\n", report.baseline.c_str(),
                report.baseline_value);
    std::printf("trials=%zu mean=%.6f p50=%.6f p95=%.6f p99=%.6f max=%.6f "
                "failed_frac=%.6f\n",
                report.rows.size(), report.agg.mean, report.agg.p50, report.agg.p95,
                report.agg.p99, report.agg.max, report.agg.failed_frac);
    for (const auto& f : report.agg.freqs)
        std::printf("freq(ratio >= %.6f) = %.6f +- %.6f (SE)\n", f.threshold, f.freq,
                    f.se);
}

int cmd_simulate(const CLI::App* cmd, const CommonFlags& flags,
                 const std::vector<double>& thresholds, bool audit,
                 const std::string& trajectory_out) {
    ExperimentConfig config = build_config(cmd, flags);
    if (!thresholds.empty()) config.thresholds = thresholds;
    if (audit) config.audit = true;
    const TrialReport report = run_trials(config);
    print_aggregates(report);
    if (!config.out.empty()) {
        write_trials_csv(report, config.out);
        write_metadata(config, &report, config.out + ".meta.json");
        std::printf("wrote %s and %s.meta.json\n", config.out.c_str(),
                    config.out.c_str());
    }
    if (!trajectory_out.empty()) {
        auto set = std::make_shared<const JobSet>(config.materialize_instance(config.m));
        const JobSequence seq = permute(set, derive_seed(config.seed, 0));
        write_load_trajectory_csv(seq, config.m, trajectory_out);
        write_metadata(config, nullptr, trajectory_out + ".meta.json");
        std::printf("wrote %s\n", trajectory_out.c_str());
    }
    return 0;
}

int cmd_sweep(const CLI::App* cmd, const CommonFlags& flags,
              const std::vector<int>& m_list, const std::vector<double>& thresholds,
              bool with_nmd, double phi) {
    ExperimentConfig config = build_config(cmd, flags);
    if (!thresholds.empty()) config.thresholds = thresholds;
    if (with_nmd) config.with_nmd = true;
    if (phi > 0.0) config.phi = phi;
    const SweepTable table = sweep(config, m_list);
    for (const auto& row : table.rows) {
        std::printf("m=%d mean=%.6f p95=%.6f max=%.6f", row.m, row.agg.mean,
                    row.agg.p95, row.agg.max);
        if (row.nmd) std::printf(" nmd=%.6f", row.nmd->mean);
        std::printf("\n");
    }
    if (!config.out.empty()) {
        write_sweep_csv(table, config.out);
        write_metadata(config, nullptr, config.out + ".meta.json");
        std::printf("wrote %s\n", config.out.c_str());
    }
    return 0;
}

int cmd_lowerbound(const CLI::App* cmd, const CommonFlags& flags) {
    ExperimentConfig config = build_config(cmd, flags);
    const std::string algo = config.algorithm;
    const int m = config.m > 0 ? config.m : 20;
    const long long trials = config.trials > 0 ? config.trials : 20000;
    const LowerBoundReport rep = lowerbound_experiment(
        algo, m, trials, config.seed, std::max(config.threads, 1),
        config.algo_params());
    std::printf("algorithm=%s m=%d trials=%lld c=%.9f\n", rep.algorithm.c_str(),
                rep.m, rep.trials, rep.c);
    std::printf("perfect-packing p_hat=%.6f +- %.6f\n", rep.p_hat, rep.p_se);
    std::printf("freq(ratio >= %.6f) extra-negligible=%.6f (bound %.6f)\n",
                rep.threshold_extra_negligible, rep.freq_extra_negligible,
                (1.0 - rep.p_hat) / 3.0);
    std::printf("freq(ratio >= %.6f) extra-big=%.6f (bound %.6f)\n",
                rep.threshold_extra_big, rep.freq_extra_big, rep.p_hat / 3.0);
    std::printf("freq(ratio >= c) on extra-negligible (no bound): %.6f\n",
                rep.freq_literal_c_negligible);
    std::printf("opt_verified=%d pass_negligible=%d pass_big=%d pass_max=%d\n",
                rep.opt_verified ? 1 : 0, rep.pass_negligible ? 1 : 0,
                rep.pass_big ? 1 : 0, rep.pass_max ? 1 : 0);
    if (!config.out.empty()) {
        write_lowerbound_csv(rep, config.out);
        std::printf("wrote %s\n", config.out.c_str());
    }
    return rep.pass_max ? 0 : 2;
}

int cmd_stability(const CLI::App* cmd, const CommonFlags& flags) {
    ExperimentConfig config = build_config(cmd, flags);
    const JobSet set = config.materialize_instance(config.m);
    const StabilityFrequencies freq = stability_experiment(
        set, config.m, std::max<long long>(config.trials, 1), config.seed,
        config.algo_params(), std::max(config.threads, 1));
    if (!freq.applicable) {
        std::printf("not applicable: %s\n", freq.reason.c_str());
        return 0;
    }
    std::printf("trials=%lld\n", freq.trials);
    std::printf("freq_stable=%.6f\n", freq.freq_stable);
    std::printf("freq_core_stable=%.6f (accuracy/spread conditions 1-4)\n",
                freq.freq_core_stable);
    std::printf("freq_estimate_ok=%.6f\n", freq.freq_estimate_ok);
    std::printf("freq_prob_stable=%.6f\n", freq.freq_prob_stable);
    std::printf("freq_prob_implies_core=%.6f\n", freq.freq_prob_implies_core);
    if (!config.out.empty()) {
        FILE* f = std::fopen(config.out.c_str(), "wb");
        if (!f) throw std::invalid_argument("cannot write " + config.out);
        std::fprintf(f,
                     "trials,freq_stable,freq_core_stable,freq_estimate_ok,"
                     "freq_prob_stable,freq_prob_implies_core\n"
                     "%lld,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                     freq.trials, freq.freq_stable, freq.freq_core_stable,
                     freq.freq_estimate_ok, freq.freq_prob_stable,
                     freq.freq_prob_implies_core);
        std::fclose(f);
        std::printf("wrote %s\n", config.out.c_str());
    }
    return 0;
}

int cmd_nmd(const CLI::App* cmd, const CommonFlags& flags, double phi) {
    ExperimentConfig config = build_config(cmd, flags);
    if (phi > 0.0) config.phi = phi;
    const JobSet set = config.materialize_instance(config.m);
    const MonteCarloEstimate est = nmd_monte_carlo(
        set, config.m, config.phi, std::max<long long>(config.trials, 1),
        config.seed, std::max(config.threads, 1));
    std::printf("nmd(L_%.4g) = %.8f +- %.8f (SE), trials=%lld\n", config.phi,
                est.mean, est.se, est.trials);
    if (!config.out.empty()) {
        FILE* f = std::fopen(config.out.c_str(), "wb");
        if (!f) throw std::invalid_argument("cannot write " + config.out);
        std::fprintf(f, "phi,mean,se,trials\n%.17g,%.17g,%.17g,%lld\n", config.phi,
                     est.mean, est.se, est.trials);
        std::fclose(f);
    }
    return 0;
}

int cmd_oracle(const std::string& instance, int m) {
    if (instance.empty())
        throw std::invalid_argument("oracle: --instance is required");
    const JobSet set = load_instance(instance);
    const double L = avg_load(set, m);
    const double p_max = set.max_size();
    std::printf("n=%d m=%d\n", set.n(), m);
    std::printf("L=%.12g p_max=%.12g lower=%.12g\n", L, p_max, std::max(L, p_max));
    std::printf("lpt=%.12g R=%.12g", lpt_makespan(set, m), complexity_R(set, m));
    if (set.n() <= m || m >= 3) std::printf(" simple=%d\n", is_simple(set, m) ? 1 : 0);
    else std::printf(" simple=n/a\n");  // threshold undefined below three machines
    const double exact = exact_opt(set, m);  // throws above enforced limits
    std::printf("exact_opt=%.12g\n", exact);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"romsched: makespan scheduling under random arrival order"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::vector<double> thresholds;
    std::vector<int> m_list;
    bool audit = false, with_nmd = false;
    double phi = 0.0;
    std::string trajectory_out;
    std::string oracle_instance;
    int oracle_m = 1;

    auto* simulate = app.add_subcommand("simulate", "run permutation trials");
    add_common(simulate, flags);
    simulate->add_option("--threshold", thresholds, "ratio thresholds for freq columns");
    simulate->add_flag("--audit", audit, "check structural invariants every step");
    simulate->add_option("--emit-trajectory", trajectory_out,
                         "write the running load estimate of trial 0");

    auto* sweep_cmd = app.add_subcommand("sweep", "run trials across machine counts");
    add_common(sweep_cmd, flags);
    sweep_cmd->add_option("--m-list", m_list, "machine counts")->required();
    sweep_cmd->add_option("--threshold", thresholds, "ratio thresholds");
    sweep_cmd->add_flag("--with-nmd", with_nmd, "add a deviation column");
    sweep_cmd->add_option("--phi", phi, "prefix fraction for the deviation column");

    auto* lb = app.add_subcommand("lowerbound", "hard-instance experiment");
    add_common(lb, flags);

    auto* stab = app.add_subcommand("stability", "stability condition frequencies");
    add_common(stab, flags);

    auto* nmd_cmd = app.add_subcommand("nmd", "normalized mean deviation of L_phi");
    add_common(nmd_cmd, flags);
    nmd_cmd->add_option("--phi", phi, "prefix fraction (default 0.25)");

    auto* oracle = app.add_subcommand("oracle", "exact optimum for an instance file");
    oracle->add_option("--instance", oracle_instance, "instance file")->required();
    oracle->add_option("--m", oracle_m, "number of machines")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed())
            return cmd_simulate(simulate, flags, thresholds, audit, trajectory_out);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_cmd, flags, m_list, thresholds, with_nmd, phi);
        if (lb->parsed()) return cmd_lowerbound(lb, flags);
        if (stab->parsed()) return cmd_stability(stab, flags);
        if (nmd_cmd->parsed()) return cmd_nmd(nmd_cmd, flags, phi);
        if (oracle->parsed()) return cmd_oracle(oracle_instance, oracle_m);
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
