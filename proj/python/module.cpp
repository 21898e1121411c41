#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "romsched/algorithms.hpp"
#include "romsched/harness.hpp"
#include "romsched/instances.hpp"
#include "romsched/opt.hpp"
#include "romsched/stats.hpp"

namespace py = pybind11;
using namespace romsched;

namespace {

JobSet to_set(const std::vector<double>& sizes) {
    for (double s : sizes)
        if (!(s >= 0.0) || !std::isfinite(s))
            throw std::invalid_argument("job sizes must be finite and >= 0");
    return JobSet(sizes);
}

JobSequence to_sequence(const std::vector<double>& sizes,
                        const std::vector<int>& order) {
    return sequence_from_order(std::make_shared<const JobSet>(to_set(sizes)), order);
}

py::dict outcome_dict(const ScheduleOutcome& out) {
    py::dict d;
    d["makespan"] = out.makespan;
    d["assignment"] = out.assignment;
    d["final_loads"] = out.final_loads;
    d["failed"] = out.failed;
    d["switch_time"] =
        out.switch_time ? py::cast(*out.switch_time) : py::none();
    return d;
}

AlgoParams params_from(const std::string& base, std::optional<double> override) {
    AlgoParams p;
    if (base == "natural") p.log_base = LogBase::Natural;
    else if (base == "base2") p.log_base = LogBase::Base2;
    else if (base == "base10") p.log_base = LogBase::Base10;
    else throw std::invalid_argument("unknown log base: " + base);
    p.delta_override = override;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Online makespan scheduling under random arrival order: "
                "schedulers, exact oracle and statistical validators.";

    mod.def(
        "permutation",
        [](int n, std::uint64_t seed) {
            JobSet set;
            set.sizes.assign(n, 0.0);
            return permute(set, seed).order;
        },
        py::arg("n"), py::arg("seed"),
        "Seeded uniform permutation of 0..n-1 (platform independent).");

    mod.def(
        "avg_load",
        [](const std::vector<double>& sizes, int m) { return avg_load(to_set(sizes), m); },
        py::arg("sizes"), py::arg("m"));
    mod.def(
        "complexity_R",
        [](const std::vector<double>& sizes, int m) {
            return complexity_R(to_set(sizes), m);
        },
        py::arg("sizes"), py::arg("m"));
    mod.def(
        "is_simple",
        [](const std::vector<double>& sizes, int m) { return is_simple(to_set(sizes), m); },
        py::arg("sizes"), py::arg("m"));
    mod.def(
        "exact_opt",
        [](const std::vector<double>& sizes, int m) { return exact_opt(to_set(sizes), m); },
        py::arg("sizes"), py::arg("m"),
        "Exact optimum makespan; enforced limits n <= 18, m <= 5.");
    mod.def(
        "lpt_makespan",
        [](const std::vector<double>& sizes, int m) {
            return lpt_makespan(to_set(sizes), m);
        },
        py::arg("sizes"), py::arg("m"));

    const auto run = [](const std::string& name, const std::vector<double>& sizes,
                        const std::vector<int>& order, int m, double guess,
                        const std::string& base, std::optional<double> override,
                        std::optional<int> declared_n) {
        const JobSequence seq = to_sequence(sizes, order);
        RunOptions opts;
        opts.declared_n = declared_n;
        return outcome_dict(run_named_algorithm(name, seq, m,
                                                params_from(base, override), opts,
                                                guess));
    };
    mod.def(
        "graham",
        [run](const std::vector<double>& sizes, const std::vector<int>& order, int m) {
            return run("graham", sizes, order, m, 0.0, "natural", std::nullopt,
                       std::nullopt);
        },
        py::arg("sizes"), py::arg("order"), py::arg("m"));
    mod.def(
        "lightload",
        [run](const std::vector<double>& sizes, const std::vector<int>& order, int m,
              double l_guess) {
            return run("lightload", sizes, order, m, l_guess, "natural",
                       std::nullopt, std::nullopt);
        },
        py::arg("sizes"), py::arg("order"), py::arg("m"), py::arg("l_guess"));
    mod.def(
        "lightload_rom",
        [run](const std::vector<double>& sizes, const std::vector<int>& order, int m,
              const std::string& base, std::optional<int> declared_n) {
            return run("lightload_rom", sizes, order, m, 0.0, base, std::nullopt,
                       declared_n);
        },
        py::arg("sizes"), py::arg("order"), py::arg("m"),
        py::arg("delta_log_base") = "natural", py::arg("declared_n") = py::none());
    mod.def(
        "lightload_bpre",
        [run](const std::vector<double>& sizes, const std::vector<int>& order, int m,
              const std::string& base, std::optional<int> declared_n) {
            return run("lightload_bpre", sizes, order, m, 0.0, base, std::nullopt,
                       declared_n);
        },
        py::arg("sizes"), py::arg("order"), py::arg("m"),
        py::arg("delta_log_base") = "natural", py::arg("declared_n") = py::none());
    mod.def(
        "secretary",
        [](const std::vector<double>& sizes, const std::vector<int>& order, int m,
           const std::string& base, std::optional<double> override, bool audit,
           std::optional<int> declared_n) {
            const JobSequence seq = to_sequence(sizes, order);
            RunOptions opts;
            opts.audit = audit;
            opts.declared_n = declared_n;
            const SecretaryResult res =
                secretary_schedule(seq, m, params_from(base, override), opts);
            py::dict d = outcome_dict(res.outcome);
            d["B"] = res.B;
            d["l_hat"] = res.l_hat;
            d["delta"] = res.delta;
            d["sample_len"] = res.sample_len;
            d["reserve_count"] = res.reserve_count;
            d["degenerate_b"] = res.degenerate_b;
            if (res.audit) {
                d["audit_violations"] = res.audit->violations;
                d["audit_steps"] = res.audit->steps;
            }
            return d;
        },
        py::arg("sizes"), py::arg("order"), py::arg("m"),
        py::arg("delta_log_base") = "natural", py::arg("delta_override") = py::none(),
        py::arg("audit") = false, py::arg("declared_n") = py::none());

    mod.def(
        "load_estimate",
        [](const std::vector<double>& sizes, const std::vector<int>& order, int m,
           double phi) { return load_estimate(to_sequence(sizes, order), m, phi); },
        py::arg("sizes"), py::arg("order"), py::arg("m"), py::arg("phi"));

    mod.def(
        "check_stable",
        [](const std::vector<double>& sizes, const std::vector<int>& order, int m) {
            const StabilityReport rep = check_stable(to_sequence(sizes, order), m);
            py::dict d;
            d["applicable"] = rep.applicable;
            d["reason"] = rep.reason;
            d["estimate_accurate"] = rep.estimate_accurate;
            d["counts_accurate"] = rep.counts_accurate;
            d["few_huge"] = rep.few_huge;
            d["huge_spread"] = rep.huge_spread;
            d["capacity_margin"] = rep.capacity_margin;
            d["stable"] = rep.stable;
            d["core_stable"] = rep.core_stable;
            d["B"] = rep.B;
            d["l_hat"] = rep.l_hat;
            d["delta"] = rep.delta;
            return d;
        },
        py::arg("sizes"), py::arg("order"), py::arg("m"));

    mod.def("md_binomial", &md_binomial, py::arg("K"), py::arg("p"));
    mod.def("md_hypergeom_bruteforce", &md_hypergeom_bruteforce, py::arg("n"),
            py::arg("K"), py::arg("draws"));
    mod.def(
        "nmd_monte_carlo",
        [](const std::vector<double>& sizes, int m, double phi, long long trials,
           std::uint64_t seed) {
            const MonteCarloEstimate est =
                nmd_monte_carlo(to_set(sizes), m, phi, trials, seed);
            py::dict d;
            d["mean"] = est.mean;
            d["se"] = est.se;
            d["trials"] = est.trials;
            return d;
        },
        py::arg("sizes"), py::arg("m"), py::arg("phi"), py::arg("trials"),
        py::arg("seed"));

    mod.def("lower_bound_c", &lower_bound_c);
    mod.def(
        "gen_lower_bound",
        [](int m, const std::string& variant) {
            LowerBoundSpec spec;
            spec.m = m;
            if (variant == "base") spec.variant = LowerBoundSpec::Variant::Base;
            else if (variant == "extra_negligible")
                spec.variant = LowerBoundSpec::Variant::ExtraNegligible;
            else if (variant == "extra_big")
                spec.variant = LowerBoundSpec::Variant::ExtraBig;
            else throw std::invalid_argument("unknown variant: " + variant);
            return gen_lower_bound(spec).sizes;
        },
        py::arg("m"), py::arg("variant") = "base");
    mod.def(
        "gen_degenerate",
        [](int m, int n, double big) { return gen_degenerate(m, n, big).sizes; },
        py::arg("m"), py::arg("n"), py::arg("big"));
    mod.def(
        "gen_random_uniform",
        [](int n, double lo, double hi, std::uint64_t seed) {
            RandomFamily f;
            f.kind = RandomFamily::Kind::Uniform;
            f.lo = lo;
            f.hi = hi;
            return gen_random(f, n, seed).sizes;
        },
        py::arg("n"), py::arg("lo"), py::arg("hi"), py::arg("seed"));
    mod.def(
        "gen_random_bimodal",
        [](int n, double low, double high, int high_count, std::uint64_t seed) {
            RandomFamily f;
            f.kind = RandomFamily::Kind::Bimodal;
            f.lo = low;
            f.high = high;
            f.high_count = high_count;
            return gen_random(f, n, seed).sizes;
        },
        py::arg("n"), py::arg("low"), py::arg("high"), py::arg("high_count"),
        py::arg("seed"));
    mod.def(
        "gen_random_pareto",
        [](int n, double alpha, double x_min, double cap, std::uint64_t seed) {
            RandomFamily f;
            f.kind = RandomFamily::Kind::ParetoLike;
            f.alpha = alpha;
            f.x_min = x_min;
            f.cap = cap;
            return gen_random(f, n, seed).sizes;
        },
        py::arg("n"), py::arg("alpha"), py::arg("x_min"), py::arg("cap"),
        py::arg("seed"));

    mod.def(
        "lowerbound_experiment",
        [](const std::string& algorithm, int m, long long trials,
           std::uint64_t seed, int threads) {
            const LowerBoundReport rep =
                lowerbound_experiment(algorithm, m, trials, seed, threads);
            py::dict d;
            d["algorithm"] = rep.algorithm;
            d["m"] = rep.m;
            d["trials"] = rep.trials;
            d["c"] = rep.c;
            d["threshold_extra_negligible"] = rep.threshold_extra_negligible;
            d["threshold_extra_big"] = rep.threshold_extra_big;
            d["p_hat"] = rep.p_hat;
            d["p_se"] = rep.p_se;
            d["freq_extra_negligible"] = rep.freq_extra_negligible;
            d["freq_extra_big"] = rep.freq_extra_big;
            d["freq_literal_c_negligible"] = rep.freq_literal_c_negligible;
            d["opt_verified"] = rep.opt_verified;
            d["pass_negligible"] = rep.pass_negligible;
            d["pass_big"] = rep.pass_big;
            d["pass_max"] = rep.pass_max;
            return d;
        },
        py::arg("algorithm"), py::arg("m"), py::arg("trials"), py::arg("seed"),
        py::arg("threads") = 1);

    mod.def(
        "run_trials_json",
        [](const std::string& config_json) {
            const ExperimentConfig config =
                ExperimentConfig::from_json_text(config_json);
            const TrialReport rep = run_trials(config);
            py::dict d;
            d["baseline"] = rep.baseline;
            d["baseline_value"] = rep.baseline_value;
            d["mean"] = rep.agg.mean;
            d["p95"] = rep.agg.p95;
            d["max"] = rep.agg.max;
            d["failed_frac"] = rep.agg.failed_frac;
            py::list ratios;
            for (const auto& row : rep.rows) ratios.append(row.ratio);
            d["ratios"] = ratios;
            return d;
        },
        py::arg("config_json"),
        "Run a whole experiment from a JSON config string.");
}
