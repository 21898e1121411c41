#include "romsched/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "romsched/opt.hpp"
#include "romsched/parallel.hpp"
#include "romsched/rng.hpp"

namespace romsched {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

LogBase log_base_from_string(const std::string& s) {
    if (s == "natural") return LogBase::Natural;
    if (s == "base2") return LogBase::Base2;
    if (s == "base10") return LogBase::Base10;
    throw std::invalid_argument("unknown log base: " + s);
}

std::string log_base_to_string(LogBase base) {
    switch (base) {
        case LogBase::Natural: return "natural";
        case LogBase::Base2: return "base2";
        case LogBase::Base10: return "base10";
    }
    return "natural";
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    ExperimentConfig c;
    try {
        if (j.contains("algorithm")) c.algorithm = j.at("algorithm").get<std::string>();
        if (j.contains("instance_file"))
            c.instance_file = j.at("instance_file").get<std::string>();
        if (j.contains("family")) c.family = j.at("family").get<std::string>();
        if (j.contains("lo")) c.lo = j.at("lo").get<double>();
        if (j.contains("hi")) c.hi = j.at("hi").get<double>();
        if (j.contains("high")) c.high = j.at("high").get<double>();
        if (j.contains("high_count")) c.high_count = j.at("high_count").get<int>();
        if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
        if (j.contains("x_min")) c.x_min = j.at("x_min").get<double>();
        if (j.contains("cap")) c.cap = j.at("cap").get<double>();
        if (j.contains("instance_seed"))
            c.instance_seed = j.at("instance_seed").get<std::uint64_t>();
        if (j.contains("n")) c.n = j.at("n").get<int>();
        if (j.contains("m")) c.m = j.at("m").get<int>();
        if (j.contains("trials")) c.trials = j.at("trials").get<long long>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("guess_factor")) c.guess_factor = j.at("guess_factor").get<double>();
        if (j.contains("delta_log_base"))
            c.delta_log_base = log_base_from_string(j.at("delta_log_base").get<std::string>());
        if (j.contains("delta_override"))
            c.delta_override = j.at("delta_override").get<double>();
        if (j.contains("phi")) c.phi = j.at("phi").get<double>();
        if (j.contains("with_nmd")) c.with_nmd = j.at("with_nmd").get<bool>();
        if (j.contains("thresholds"))
            c.thresholds = j.at("thresholds").get<std::vector<double>>();
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("threads")) c.threads = j.at("threads").get<int>();
        if (j.contains("audit")) c.audit = j.at("audit").get<bool>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: bad field type: ") + e.what());
    }
    return c;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string ExperimentConfig::canonical_json() const {
    json j;
    j["algorithm"] = algorithm;
    j["instance_file"] = instance_file;
    j["family"] = family;
    j["lo"] = lo;
    j["hi"] = hi;
    j["high"] = high;
    j["high_count"] = high_count;
    j["alpha"] = alpha;
    j["x_min"] = x_min;
    j["cap"] = cap;
    j["instance_seed"] = instance_seed;
    j["n"] = n;
    j["m"] = m;
    j["trials"] = trials;
    j["seed"] = seed;
    j["guess_factor"] = guess_factor;
    j["delta_log_base"] = log_base_to_string(delta_log_base);
    if (delta_override) j["delta_override"] = *delta_override;
    j["phi"] = phi;
    j["with_nmd"] = with_nmd;
    j["thresholds"] = thresholds;
    j["threads"] = threads;
    j["audit"] = audit;
    return j.dump();
}

AlgoParams ExperimentConfig::algo_params() const {
    AlgoParams p;
    p.log_base = delta_log_base;
    p.delta_override = delta_override;
    return p;
}

JobSet ExperimentConfig::materialize_instance(int machines) const {
    if (!instance_file.empty()) return load_instance(instance_file);
    const int jobs = n > 0 ? n : 2 * machines;
    if (family == "uniform") {
        RandomFamily f;
        f.kind = RandomFamily::Kind::Uniform;
        f.lo = lo;
        f.hi = hi;
        return gen_random(f, jobs, instance_seed);
    }
    if (family == "bimodal") {
        RandomFamily f;
        f.kind = RandomFamily::Kind::Bimodal;
        f.lo = lo;
        f.high = high;
        f.high_count = high_count;
        return gen_random(f, jobs, instance_seed);
    }
    if (family == "extremal_bimodal") {
        return gen_random(extremal_bimodal(machines), jobs, instance_seed);
    }
    if (family == "pareto") {
        RandomFamily f;
        f.kind = RandomFamily::Kind::ParetoLike;
        f.alpha = alpha;
        f.x_min = x_min;
        f.cap = cap;
        return gen_random(f, jobs, instance_seed);
    }
    throw std::invalid_argument("config: no instance_file and unknown family '" +
                                family + "'");
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (m < 1) throw std::invalid_argument("config: m must be >= 1");
    if (threads < 1) throw std::invalid_argument("config: threads must be >= 1");
    if (!(phi > 0.0 && phi <= 1.0))
        throw std::invalid_argument("config: phi must be in (0, 1]");
    static const char* names[] = {"graham", "lightload", "lightload_rom",
                                  "lightload_bpre", "secretary"};
    if (std::find_if(std::begin(names), std::end(names), [&](const char* s) {
            return algorithm == s;
        }) == std::end(names))
        throw std::invalid_argument("config: unknown algorithm '" + algorithm + "'");
    if (!instance_file.empty()) {
        std::ifstream probe(instance_file);
        if (!probe)
            throw std::invalid_argument("config: instance file not readable: " +
                                        instance_file);
    } else if (family.empty()) {
        throw std::invalid_argument("config: need instance_file or family");
    }
}

std::uint64_t config_hash(const ExperimentConfig& config) {
    // FNV-1a over the canonical dump.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config.canonical_json()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ScheduleOutcome run_named_algorithm(const std::string& name,
                                    const JobSequence& seq, int m,
                                    const AlgoParams& params,
                                    const RunOptions& opts, double l_guess) {
    if (name == "graham") return graham(seq, m, opts);
    if (name == "lightload") return lightload(seq, m, l_guess, opts);
    if (name == "lightload_rom") return lightload_rom(seq, m, params, opts);
    if (name == "lightload_bpre") return lightload_bpre(seq, m, params, opts);
    if (name == "secretary") return secretary_schedule(seq, m, params, opts).outcome;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

Aggregates aggregate(const std::vector<TrialRow>& rows,
                     const std::vector<double>& thresholds) {
    Aggregates agg;
    if (rows.empty()) return agg;
    const auto n = static_cast<double>(rows.size());
    KahanAccum sum;
    long long failed = 0;
    std::vector<double> ratios;
    ratios.reserve(rows.size());
    for (const auto& row : rows) {
        sum.add(row.ratio);
        ratios.push_back(row.ratio);
        if (row.failed) ++failed;
    }
    agg.mean = sum.value() / n;
    std::sort(ratios.begin(), ratios.end());
    auto rank = [&](double q) {
        auto idx = static_cast<std::size_t>(std::ceil(q * n)) - 1;
        if (idx >= ratios.size()) idx = ratios.size() - 1;
        return ratios[idx];
    };
    agg.p50 = rank(0.50);
    agg.p95 = rank(0.95);
    agg.p99 = rank(0.99);
    agg.max = ratios.back();
    agg.failed_frac = static_cast<double>(failed) / n;
    for (double thr : thresholds) {
        long long count = 0;
        for (const auto& row : rows)
            if (row.ratio >= thr) ++count;
        FreqEstimate f;
        f.threshold = thr;
        f.freq = static_cast<double>(count) / n;
        f.se = std::sqrt(f.freq * (1.0 - f.freq) / n);
        agg.freqs.push_back(f);
    }
    return agg;
}

namespace {

struct Baseline {
    std::string kind;
    double value = 0.0;
};

Baseline pick_baseline(const JobSet& set, int m) {
    Baseline b;
    const double L = avg_load(set, m);
    const double p_max = set.max_size();
    if (L <= 0.0 && p_max <= 0.0)
        throw std::invalid_argument("instance has zero optimum makespan");
    if (set.n() <= m) {
        // One machine per job: the optimum is the largest size.
        b.kind = "exact_opt";
        b.value = p_max;
    } else if (set.n() <= kExactOptMaxJobs && m <= kExactOptMaxMachines) {
        b.kind = "exact_opt";
        b.value = exact_opt(set, m);
    } else {
        b.kind = "lower_bound";
        b.value = std::max(L, p_max);
    }
    return b;
}

}  // namespace

TrialReport run_trials(const ExperimentConfig& config) {
    config.validate();
    auto set = std::make_shared<const JobSet>(config.materialize_instance(config.m));
    if (set->n() < 1) throw std::invalid_argument("instance has no jobs");
    const Baseline baseline = pick_baseline(*set, config.m);
    const AlgoParams params = config.algo_params();
    const double guess = config.guess_factor * avg_load(*set, config.m);

    TrialReport report;
    report.baseline = baseline.kind;
    report.baseline_value = baseline.value;
    report.rows.assign(config.trials, TrialRow{});
    RunOptions opts;
    opts.audit = config.audit;
    parallel_for_indexed(config.trials, config.threads, [&](long long i) {
        const std::uint64_t trial_seed =
            derive_seed(config.seed, static_cast<std::uint64_t>(i));
        const JobSequence seq = permute(set, trial_seed);
        const ScheduleOutcome out =
            run_named_algorithm(config.algorithm, seq, config.m, params, opts, guess);
        TrialRow row;
        row.trial = i;
        row.seed = trial_seed;
        row.makespan = out.makespan;
        row.ratio = out.makespan / baseline.value;
        row.failed = out.failed;
        row.switch_time = out.switch_time;
        report.rows[i] = row;
    });
    report.agg = aggregate(report.rows, config.thresholds);
    return report;
}

SweepTable sweep(const ExperimentConfig& config, const std::vector<int>& m_list) {
    if (m_list.empty()) throw std::invalid_argument("sweep: empty machine list");
    config.validate();
    SweepTable table;
    table.thresholds = config.thresholds;

    std::string baseline_kind;
    for (int machines : m_list) {
        ExperimentConfig local = config;
        local.m = machines;
        auto set = local.materialize_instance(machines);
        const Baseline b = pick_baseline(set, machines);
        if (baseline_kind.empty()) baseline_kind = b.kind;
        else if (baseline_kind != b.kind)
            throw std::invalid_argument(
                "sweep: mixing exact and lower-bound baselines across m; "
                "split the sweep");
        TrialReport rep = run_trials(local);
        SweepRow row;
        row.m = machines;
        row.trials = local.trials;
        row.agg = rep.agg;
        if (config.with_nmd) {
            row.nmd = nmd_monte_carlo(set, machines, config.phi, config.trials,
                                      derive_seed(config.seed, 0xA11CEULL + machines),
                                      config.threads);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

LowerBoundReport lowerbound_experiment(const std::string& algorithm, int m,
                                       long long trials, std::uint64_t seed,
                                       int threads, const AlgoParams& params) {
    if (m < 3)
        throw std::invalid_argument(
            "lowerbound: needs m >= 3 (the extra-big optimum below that is "
            "1 + c/3, not c, and the packing arguments degenerate)");
    if (trials < 1) throw std::invalid_argument("lowerbound: trials must be >= 1");
    if (algorithm == "lightload")
        throw std::invalid_argument(
            "lowerbound: lightload needs an explicit guess and does not fit "
            "the one-more-job protocol");

    LowerBoundReport rep;
    rep.algorithm = algorithm;
    rep.m = m;
    rep.trials = trials;
    rep.seed = seed;
    rep.c = lower_bound_c();
    rep.threshold_extra_negligible = 2.0 - 2.0 * rep.c / 3.0;
    rep.threshold_extra_big = rep.c;
    rep.opt_extra_big = rep.c;

    LowerBoundSpec base_spec{m, LowerBoundSpec::Variant::Base};
    LowerBoundSpec neg_spec{m, LowerBoundSpec::Variant::ExtraNegligible};
    LowerBoundSpec big_spec{m, LowerBoundSpec::Variant::ExtraBig};
    auto base = std::make_shared<const JobSet>(gen_lower_bound(base_spec));
    auto extra_neg = std::make_shared<const JobSet>(gen_lower_bound(neg_spec));
    auto extra_big = std::make_shared<const JobSet>(gen_lower_bound(big_spec));

    if (m <= 4) {
        const double tol = 1e-9;
        rep.opt_verified =
            std::abs(exact_opt(*base, m) - 1.0) <= tol &&
            std::abs(exact_opt(*extra_neg, m) - 1.0) <= tol &&
            std::abs(exact_opt(*extra_big, m) - rep.c) <= tol;
    }

    const int declared = 3 * m + 1;
    const double eps = 1e-9;

    // Perfect-packing probability on the base set under "one more job".
    std::vector<char> perfect(trials, 0);
    RunOptions opts;
    opts.declared_n = declared;
    parallel_for_indexed(trials, threads, [&](long long i) {
        const JobSequence seq =
            permute(base, derive_seed(seed, static_cast<std::uint64_t>(i)));
        const ScheduleOutcome out =
            run_named_algorithm(algorithm, seq, m, params, opts);
        bool all_one = true;
        for (double load : out.final_loads)
            if (std::abs(load - 1.0) > eps) { all_one = false; break; }
        perfect[i] = all_one ? 1 : 0;
    });
    long long hits = 0;
    for (char c : perfect) hits += c;
    rep.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    rep.p_se = std::sqrt(rep.p_hat * (1.0 - rep.p_hat) / static_cast<double>(trials));

    auto bad_freq = [&](const std::shared_ptr<const JobSet>& set, double optimum,
                        double threshold, std::uint64_t salt, double& freq,
                        double& se, double* literal_c) {
        std::vector<char> bad(trials, 0);
        std::vector<char> at_c(trials, 0);
        RunOptions run_opts;  // declared n equals the delivered 3m+1 jobs
        parallel_for_indexed(trials, threads, [&](long long i) {
            const JobSequence seq = permute(
                set, derive_seed(seed ^ salt, static_cast<std::uint64_t>(i)));
            const ScheduleOutcome out =
                run_named_algorithm(algorithm, seq, m, params, run_opts);
            const double ratio = out.makespan / optimum;
            bad[i] = ratio >= threshold - eps ? 1 : 0;
            at_c[i] = ratio >= rep.c - eps ? 1 : 0;
        });
        long long count = 0, count_c = 0;
        for (char flag : bad) count += flag;
        for (char flag : at_c) count_c += flag;
        freq = static_cast<double>(count) / static_cast<double>(trials);
        se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(trials));
        if (literal_c)
            *literal_c = static_cast<double>(count_c) / static_cast<double>(trials);
    };
    bad_freq(extra_neg, rep.opt_extra_negligible, rep.threshold_extra_negligible,
             0x9E3779B97F4A7C15ULL, rep.freq_extra_negligible,
             rep.se_extra_negligible, &rep.freq_literal_c_negligible);
    bad_freq(extra_big, rep.opt_extra_big, rep.threshold_extra_big,
             0xC2B2AE3D27D4EB4FULL, rep.freq_extra_big, rep.se_extra_big, nullptr);

    rep.pass_negligible = rep.freq_extra_negligible >=
                          (1.0 - rep.p_hat) / 3.0 - 3.0 * rep.se_extra_negligible;
    rep.pass_big = rep.freq_extra_big >= rep.p_hat / 3.0 - 3.0 * rep.se_extra_big;
    const double worst_se = std::max(rep.se_extra_negligible, rep.se_extra_big);
    rep.pass_max = std::max(rep.freq_extra_negligible, rep.freq_extra_big) >=
                   1.0 / 6.0 - 3.0 * worst_se;
    return rep;
}

StabilityFrequencies stability_experiment(const JobSet& set, int m,
                                          long long trials, std::uint64_t seed,
                                          const AlgoParams& params, int threads) {
    if (trials < 1) throw std::invalid_argument("stability: trials must be >= 1");
    StabilityFrequencies freq;
    freq.trials = trials;
    auto shared = std::make_shared<const JobSet>(set);
    struct Flags {
        char stable, core, estimate, prob, prob_implies;
    };
    std::vector<Flags> flags(trials);
    std::atomic_bool inapplicable{false};
    std::string reason;
    parallel_for_indexed(trials, threads, [&](long long i) {
        const JobSequence seq =
            permute(shared, derive_seed(seed, static_cast<std::uint64_t>(i)));
        const StabilityReport rep = check_stable(seq, m, params);
        const ProbStabilityReport prob = check_probabilistically_stable(seq, m, params);
        if (!rep.applicable) {
            inapplicable = true;
            return;
        }
        Flags f{};
        f.stable = rep.stable;
        f.core = rep.core_stable;
        f.estimate = rep.estimate_accurate;
        f.prob = prob.all;
        f.prob_implies = !prob.all || rep.core_stable;
        flags[i] = f;
    });
    if (inapplicable) {
        freq.applicable = false;
        freq.reason = "simple set; stability not defined";
        return freq;
    }
    long long stable = 0, core = 0, estimate = 0, prob = 0, implies = 0;
    for (const auto& f : flags) {
        stable += f.stable;
        core += f.core;
        estimate += f.estimate;
        prob += f.prob;
        implies += f.prob_implies;
    }
    const auto n = static_cast<double>(trials);
    freq.freq_stable = stable / n;
    freq.freq_core_stable = core / n;
    freq.freq_estimate_ok = estimate / n;
    freq.freq_prob_stable = prob / n;
    freq.freq_prob_implies_core = implies / n;
    return freq;
}

// ---- Emission -------------------------------------------------------------------

void write_trials_csv(const TrialReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << "trial,seed,ratio,makespan,failed,switch_time\n";
    for (const auto& row : report.rows) {
        out << row.trial << ',' << row.seed << ',' << fmt_double(row.ratio) << ','
            << fmt_double(row.makespan) << ',' << (row.failed ? 1 : 0) << ',';
        if (row.switch_time) out << *row.switch_time;
        out << '\n';
    }
    if (!out) throw std::invalid_argument("write failed for " + path);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

TrialReport read_trials_csv(const std::string& path,
                            const std::vector<double>& thresholds) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    TrialReport report;
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty trials CSV: " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto fields = split_csv_line(line);
        if (fields.size() != 6)
            throw std::invalid_argument("bad trials CSV row in " + path);
        TrialRow row;
        row.trial = std::stoll(fields[0]);
        row.seed = std::stoull(fields[1]);
        row.ratio = std::stod(fields[2]);
        row.makespan = std::stod(fields[3]);
        row.failed = fields[4] == "1";
        if (!fields[5].empty()) row.switch_time = std::stoi(fields[5]);
        report.rows.push_back(row);
    }
    report.agg = aggregate(report.rows, thresholds);
    return report;
}

void write_sweep_csv(const SweepTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << "m,trials,mean,p50,p95,p99,max,failed_frac";
    for (double thr : table.thresholds)
        out << ",freq_ge_" << fmt_double(thr) << ",se_ge_" << fmt_double(thr);
    out << ",nmd,nmd_se\n";
    for (const auto& row : table.rows) {
        out << row.m << ',' << row.trials << ',' << fmt_double(row.agg.mean) << ','
            << fmt_double(row.agg.p50) << ',' << fmt_double(row.agg.p95) << ','
            << fmt_double(row.agg.p99) << ',' << fmt_double(row.agg.max) << ','
            << fmt_double(row.agg.failed_frac);
        for (const auto& f : row.agg.freqs)
            out << ',' << fmt_double(f.freq) << ',' << fmt_double(f.se);
        out << ',';
        if (row.nmd) out << fmt_double(row.nmd->mean);
        out << ',';
        if (row.nmd) out << fmt_double(row.nmd->se);
        out << '\n';
    }
    if (!out) throw std::invalid_argument("write failed for " + path);
}

void write_metadata(const ExperimentConfig& config, const TrialReport* report,
                    const std::string& path) {
    json meta;
    meta["config"] = json::parse(config.canonical_json());
    char hash_buf[32];
    std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                  static_cast<unsigned long long>(config_hash(config)));
    meta["config_hash"] = hash_buf;
    meta["seed"] = config.seed;
    meta["timestamp_utc"] = static_cast<long long>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    if (report) {
        meta["baseline"] = report->baseline;
        meta["baseline_value"] = report->baseline_value;
        json agg;
        agg["mean"] = report->agg.mean;
        agg["p50"] = report->agg.p50;
        agg["p95"] = report->agg.p95;
        agg["p99"] = report->agg.p99;
        agg["max"] = report->agg.max;
        agg["failed_frac"] = report->agg.failed_frac;
        json freqs = json::array();
        for (const auto& f : report->agg.freqs) {
            json one;
            one["threshold"] = f.threshold;
            one["freq"] = f.freq;
            one["se"] = f.se;
            freqs.push_back(one);
        }
        agg["freqs"] = freqs;
        meta["aggregates"] = agg;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << meta.dump(2) << "\n";
}

void write_load_trajectory_csv(const JobSequence& seq, int m,
                               const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << "frac,scaled_average_load\n";
    KahanAccum prefix;
    const auto n = static_cast<double>(seq.size());
    for (int t = 0; t < seq.size(); ++t) {
        prefix.add(seq.size_at(t));
        const double frac = static_cast<double>(t + 1) / n;
        const double scaled =
            prefix.value() * n /
            (static_cast<double>(t + 1) * static_cast<double>(m));
        out << fmt_double(frac) << ',' << fmt_double(scaled) << '\n';
    }
    if (!out) throw std::invalid_argument("write failed for " + path);
}

void write_lowerbound_csv(const LowerBoundReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << "algorithm,m,trials,c,threshold_extra_negligible,threshold_extra_big,"
           "p_hat,p_se,freq_extra_negligible,se_extra_negligible,freq_extra_big,"
           "se_extra_big,freq_literal_c_negligible,opt_verified,"
           "pass_negligible,pass_big,pass_max\n";
    out << csv_escape(report.algorithm) << ',' << report.m << ',' << report.trials
        << ',' << fmt_double(report.c) << ','
        << fmt_double(report.threshold_extra_negligible) << ','
        << fmt_double(report.threshold_extra_big) << ','
        << fmt_double(report.p_hat) << ',' << fmt_double(report.p_se) << ','
        << fmt_double(report.freq_extra_negligible) << ','
        << fmt_double(report.se_extra_negligible) << ','
        << fmt_double(report.freq_extra_big) << ',' << fmt_double(report.se_extra_big)
        << ',' << fmt_double(report.freq_literal_c_negligible) << ','
        << (report.opt_verified ? 1 : 0) << ','
        << (report.pass_negligible ? 1 : 0) << ',' << (report.pass_big ? 1 : 0) << ','
        << (report.pass_max ? 1 : 0) << '\n';
}

}  // namespace romsched
