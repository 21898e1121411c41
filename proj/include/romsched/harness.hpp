#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "romsched/algorithms.hpp"
#include "romsched/core.hpp"
#include "romsched/instances.hpp"
#include "romsched/params.hpp"
#include "romsched/stats.hpp"

namespace romsched {

// One experiment: an algorithm, an instance source (file or generator
// family), and the trial/threshold bookkeeping. Loaded from JSON; CLI
// flags override individual fields afterwards.
struct ExperimentConfig {
    std::string algorithm = "graham";

    std::string instance_file;          // takes precedence when set
    std::string family;                 // uniform | bimodal | extremal_bimodal | pareto
    double lo = 0.0, hi = 1.0;          // uniform range / bimodal low value
    double high = 8.0 / 3.0;            // bimodal high value
    int high_count = 0;                 // bimodal; extremal uses floor(3m/8)
    double alpha = 2.5, x_min = 1.0, cap = 0.0;  // pareto
    std::uint64_t instance_seed = 1;
    int n = 0;                          // 0 means 2*m for generated instances

    int m = 1;
    long long trials = 1;
    std::uint64_t seed = 1;
    double guess_factor = 1.0;          // lightload: guess = factor * L
    LogBase delta_log_base = LogBase::Natural;
    std::optional<double> delta_override;
    double phi = 0.25;
    bool with_nmd = false;
    std::vector<double> thresholds;
    std::string out;
    int threads = 1;
    bool audit = false;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
    std::string canonical_json() const;  // no timestamp; key-sorted
    AlgoParams algo_params() const;
    JobSet materialize_instance(int machines) const;
    void validate() const;
};

std::uint64_t config_hash(const ExperimentConfig& config);

struct TrialRow {
    long long trial = 0;
    std::uint64_t seed = 0;
    double ratio = 0.0;
    double makespan = 0.0;
    bool failed = false;
    std::optional<int> switch_time;
};

struct FreqEstimate {
    double threshold = 0.0;
    double freq = 0.0;
    double se = 0.0;  // sqrt(p(1-p)/trials)
};

struct Aggregates {
    double mean = 0.0, p50 = 0.0, p95 = 0.0, p99 = 0.0, max = 0.0;
    double failed_frac = 0.0;
    std::vector<FreqEstimate> freqs;
};

struct TrialReport {
    std::string baseline;        // "exact_opt" or "lower_bound"
    double baseline_value = 0.0; // ratio denominator
    std::vector<TrialRow> rows;
    Aggregates agg;
};

// Aggregates are a pure function of the rows, so a report survives a CSV
// round trip.
Aggregates aggregate(const std::vector<TrialRow>& rows,
                     const std::vector<double>& thresholds);

// Deterministic given (config, seed): trial i permutes with the stream
// derived from (seed, i); parallel and serial runs produce identical rows.
TrialReport run_trials(const ExperimentConfig& config);

struct SweepRow {
    int m = 0;
    long long trials = 0;
    Aggregates agg;
    std::optional<MonteCarloEstimate> nmd;
};

struct SweepTable {
    std::vector<double> thresholds;
    std::vector<SweepRow> rows;
};

SweepTable sweep(const ExperimentConfig& config, const std::vector<int>& m_list);

// The two hard three-type job sets under the one-more-job protocol:
// measures the perfect-packing probability p_hat on the base set, then the
// bad-order frequencies on each extended set. Needs m >= 3 (below that the
// extra-big set has a different optimum and the constructions degenerate).
//
// Thresholds: a good order of the extra-negligible set whose base prefix is
// not perfectly packed guarantees ratio >= 2 - 2c/3 (either one machine got
// three typed jobs, >= c, or a big pair formed); a good order of the
// extra-big set that was perfectly packed forces ratio >= c against its
// optimum c. Both counts use a 1e-9 epsilon below the threshold since the
// bad makespan equals it in exact arithmetic. The frequency of ratio >= c
// on the extra-negligible set is reported as well, without a bound.
struct LowerBoundReport {
    std::string algorithm;
    int m = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    double c = 0.0;
    double threshold_extra_negligible = 0.0;  // 2 - 2c/3
    double threshold_extra_big = 0.0;         // c
    double p_hat = 0.0, p_se = 0.0;
    double freq_extra_negligible = 0.0, se_extra_negligible = 0.0;
    double freq_extra_big = 0.0, se_extra_big = 0.0;
    double freq_literal_c_negligible = 0.0;   // ratio >= c there; informational
    double opt_base = 1.0, opt_extra_negligible = 1.0, opt_extra_big = 0.0;
    bool opt_verified = false;  // exact oracle cross-check (m = 3, 4)
    bool pass_negligible = false, pass_big = false, pass_max = false;
};

LowerBoundReport lowerbound_experiment(const std::string& algorithm, int m,
                                       long long trials, std::uint64_t seed,
                                       int threads = 1,
                                       const AlgoParams& params = {});

// Stability condition frequencies over random orders of one set.
struct StabilityFrequencies {
    long long trials = 0;
    double freq_stable = 0.0;
    double freq_core_stable = 0.0;     // conditions 1-4
    double freq_estimate_ok = 0.0;     // |L_hat/L - 1| < delta
    double freq_prob_stable = 0.0;
    double freq_prob_implies_core = 0.0;  // prob-stable and core conditions hold
    bool applicable = true;
    std::string reason;
};

StabilityFrequencies stability_experiment(const JobSet& set, int m,
                                          long long trials, std::uint64_t seed,
                                          const AlgoParams& params = {},
                                          int threads = 1);

// Dispatch by name: graham | lightload | lightload_rom | lightload_bpre |
// secretary. `l_guess` only applies to lightload.
ScheduleOutcome run_named_algorithm(const std::string& name,
                                    const JobSequence& seq, int m,
                                    const AlgoParams& params,
                                    const RunOptions& opts, double l_guess = 0.0);

// ---- Emission ---------------------------------------------------------------

// Per-trial CSV (RFC-4180, header row); doubles printed with %.17g so rows
// survive a parse round trip bit-exactly.
void write_trials_csv(const TrialReport& report, const std::string& path);
TrialReport read_trials_csv(const std::string& path,
                            const std::vector<double>& thresholds);

void write_sweep_csv(const SweepTable& table, const std::string& path);

// Metadata sidecar <path>.meta.json: config, config hash, seed, aggregates
// and the only timestamp in any output.
void write_metadata(const ExperimentConfig& config, const TrialReport* report,
                    const std::string& path);

// Running load estimate of one arrival order: rows (t/n, prefix average
// load scaled by n/t), the quantity whose trajectory flattens out as the
// sample grows.
void write_load_trajectory_csv(const JobSequence& seq, int m,
                               const std::string& path);

void write_lowerbound_csv(const LowerBoundReport& report, const std::string& path);

}  // namespace romsched
