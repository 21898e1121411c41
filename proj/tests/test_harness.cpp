#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "romsched/harness.hpp"
#include "romsched/opt.hpp"

using namespace romsched;

namespace {

ExperimentConfig small_config() {
    ExperimentConfig config;
    config.algorithm = "secretary";
    config.family = "uniform";
    config.lo = 0.2;
    config.hi = 1.4;
    config.n = 48;
    config.m = 12;
    config.trials = 150;
    config.seed = 99;
    config.instance_seed = 7;
    config.thresholds = {1.2, 1.6};
    return config;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool rows_equal(const std::vector<TrialRow>& a, const std::vector<TrialRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].trial != b[i].trial || a[i].seed != b[i].seed ||
            a[i].ratio != b[i].ratio || a[i].makespan != b[i].makespan ||
            a[i].failed != b[i].failed || a[i].switch_time != b[i].switch_time)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("config JSON round trip and validation") {
    const auto config = ExperimentConfig::from_json_text(
        R"({"algorithm":"lightload_rom","family":"uniform","lo":0.5,"hi":1.5,)"
        R"("n":32,"m":8,"trials":10,"seed":4,"thresholds":[1.75]})");
    CHECK(config.algorithm == "lightload_rom");
    CHECK(config.n == 32);
    CHECK(config.thresholds == std::vector<double>{1.75});
    CHECK_NOTHROW(config.validate());

    CHECK_THROWS_AS(ExperimentConfig::from_json_text("{oops"), std::invalid_argument);
    auto bad_algo = config;
    bad_algo.algorithm = "quantum";
    CHECK_THROWS_AS(bad_algo.validate(), std::invalid_argument);
    auto no_instance = config;
    no_instance.family.clear();
    CHECK_THROWS_AS(no_instance.validate(), std::invalid_argument);
    auto missing_file = config;
    missing_file.instance_file = "definitely_not_here.txt";
    CHECK_THROWS_AS(missing_file.validate(), std::invalid_argument);
}

TEST_CASE("one-job-per-machine instances score ratio exactly 1") {
    ExperimentConfig config;
    config.algorithm = "secretary";
    config.family = "uniform";
    config.lo = 0.5;
    config.hi = 1.5;
    config.n = 6;
    config.m = 10;
    config.trials = 5;
    config.seed = 3;
    const TrialReport report = run_trials(config);
    CHECK(report.baseline == "exact_opt");
    for (const auto& row : report.rows) CHECK(row.ratio == 1.0);
}

TEST_CASE("trials are deterministic and thread-count independent") {
    const auto config = small_config();
    const TrialReport once = run_trials(config);
    const TrialReport twice = run_trials(config);
    CHECK(rows_equal(once.rows, twice.rows));
    auto threaded = config;
    threaded.threads = 8;
    const TrialReport parallel = run_trials(threaded);
    CHECK(rows_equal(once.rows, parallel.rows));
    CHECK(once.agg.mean == parallel.agg.mean);
}

TEST_CASE("baseline switches to the lower bound on big instances") {
    ExperimentConfig config = small_config();
    config.algorithm = "graham";
    config.n = 64;  // beyond the exact-oracle limit
    config.trials = 20;
    const TrialReport report = run_trials(config);
    CHECK(report.baseline == "lower_bound");
    for (const auto& row : report.rows) CHECK(row.ratio >= 1.0 - 1e-12);
}

TEST_CASE("trial CSV round trip preserves rows and aggregates") {
    const auto config = small_config();
    const TrialReport report = run_trials(config);
    const std::string path = "test_trials_roundtrip.csv";
    write_trials_csv(report, path);
    const TrialReport parsed = read_trials_csv(path, config.thresholds);
    CHECK(rows_equal(report.rows, parsed.rows));
    CHECK(parsed.agg.mean == report.agg.mean);
    CHECK(parsed.agg.p95 == report.agg.p95);
    CHECK(parsed.agg.max == report.agg.max);
    REQUIRE(parsed.agg.freqs.size() == report.agg.freqs.size());
    for (std::size_t i = 0; i < parsed.agg.freqs.size(); ++i) {
        CHECK(parsed.agg.freqs[i].freq == report.agg.freqs[i].freq);
        CHECK(parsed.agg.freqs[i].se == report.agg.freqs[i].se);
    }
    std::remove(path.c_str());
}

TEST_CASE("emitted bytes are identical across runs") {
    const auto config = small_config();
    const std::string a = "test_emit_a.csv", b = "test_emit_b.csv";
    write_trials_csv(run_trials(config), a);
    write_trials_csv(run_trials(config), b);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("metadata sidecar carries config hash and aggregates") {
    const auto config = small_config();
    const TrialReport report = run_trials(config);
    const std::string path = "test_meta.json";
    write_metadata(config, &report, path);
    const std::string meta = slurp(path);
    CHECK(meta.find("config_hash") != std::string::npos);
    CHECK(meta.find("timestamp_utc") != std::string::npos);
    CHECK(meta.find("aggregates") != std::string::npos);
    std::remove(path.c_str());
    CHECK(config_hash(config) == config_hash(config));
    auto other = config;
    other.seed += 1;
    CHECK(config_hash(other) != config_hash(config));
}

TEST_CASE("sweep validates inputs and fills the deviation column") {
    ExperimentConfig config;
    config.algorithm = "lightload_rom";
    config.family = "extremal_bimodal";
    config.trials = 60;
    config.seed = 11;
    config.with_nmd = true;
    config.phi = 0.25;
    CHECK_THROWS_AS(sweep(config, {}), std::invalid_argument);
    const SweepTable table = sweep(config, {40, 160});
    REQUIRE(table.rows.size() == 2);
    REQUIRE(table.rows[0].nmd.has_value());
    REQUIRE(table.rows[1].nmd.has_value());
    // Larger fleets estimate the load better.
    CHECK(table.rows[1].nmd->mean < table.rows[0].nmd->mean);
    const std::string path = "test_sweep.csv";
    write_sweep_csv(table, path);
    const std::string body = slurp(path);
    CHECK(body.find("m,trials,mean") == 0);
    CHECK(body.find("nmd") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("sweep refuses to mix ratio baselines") {
    ExperimentConfig config;
    config.algorithm = "graham";
    config.family = "uniform";
    config.lo = 0.5;
    config.hi = 1.5;
    config.n = 30;  // one job per machine at m=40; only bounds at m=4
    config.trials = 5;
    CHECK_THROWS_AS(sweep(config, {40, 4}), std::invalid_argument);
}

TEST_CASE("load trajectory export matches a direct recomputation") {
    ExperimentConfig config = small_config();
    auto set = std::make_shared<const JobSet>(config.materialize_instance(config.m));
    const JobSequence seq = permute(set, 5);
    const std::string path = "test_traj.csv";
    write_load_trajectory_csv(seq, config.m, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "frac,scaled_average_load");
    double prefix = 0.0;
    std::string line;
    int t = 0;
    while (std::getline(in, line)) {
        ++t;
        prefix += seq.size_at(t - 1);
        const auto comma = line.find(',');
        const double frac = std::stod(line.substr(0, comma));
        const double scaled = std::stod(line.substr(comma + 1));
        CHECK(frac == doctest::Approx(static_cast<double>(t) / seq.size()));
        const double expected =
            prefix * seq.size() / (static_cast<double>(t) * config.m);
        CHECK(scaled == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(t == seq.size());
    std::remove(path.c_str());
}

TEST_CASE("hard-instance experiment at a small scale") {
    const LowerBoundReport rep = lowerbound_experiment("graham", 4, 3000, 17, 4);
    CHECK(rep.opt_verified);
    CHECK(rep.pass_max);  // max(freq1, freq2) >= 1/6 - 3 SE holds identically
    CHECK(rep.pass_negligible);
    CHECK(rep.pass_big);
    // The two bounds complement each other: (1-p)/3 + p/3 = 1/3.
    CHECK((1.0 - rep.p_hat) / 3.0 + rep.p_hat / 3.0 ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(lowerbound_experiment("lightload", 4, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("threshold frequencies carry their standard errors at scale") {
    ExperimentConfig config;
    config.algorithm = "secretary";
    config.family = "uniform";
    config.lo = 0.5;
    config.hi = 1.5;
    config.n = 2048;
    config.m = 1024;
    config.trials = 100;
    config.seed = 12;
    config.threads = 8;
    config.thresholds = {1.60};
    const TrialReport report = run_trials(config);
    CHECK(report.baseline == "lower_bound");
    REQUIRE(report.agg.freqs.size() == 1);
    const auto& f = report.agg.freqs[0];
    CHECK(f.threshold == 1.60);
    CHECK(f.se == doctest::Approx(std::sqrt(f.freq * (1.0 - f.freq) / 100.0)));
    const double delta = AlgoParams{}.delta(config.m);
    CHECK(report.agg.max <= 1.0 + 3.0 / (1.0 - delta) + 2.0 * delta);
}

TEST_CASE("stability frequencies over random orders") {
    ExperimentConfig config;
    config.family = "uniform";
    config.lo = 0.5;
    config.hi = 1.5;
    const JobSet set = [&] {
        ExperimentConfig c = config;
        c.n = 256;
        return c.materialize_instance(128);
    }();
    const StabilityFrequencies freq = stability_experiment(set, 128, 200, 21);
    CHECK(freq.applicable);
    CHECK(freq.freq_stable == 0.0);  // capacity margin is out of reach here
    CHECK(freq.freq_core_stable >= 0.0);
    CHECK(freq.freq_prob_implies_core >= freq.freq_prob_stable);
    const StabilityFrequencies simple =
        stability_experiment(JobSet({1, 2, 3}), 8, 10, 1);
    CHECK_FALSE(simple.applicable);
}
