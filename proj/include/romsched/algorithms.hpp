#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "romsched/core.hpp"
#include "romsched/params.hpp"

namespace romsched {

// ---- Geometric size rounding -------------------------------------------

// Largest integer i with (1+delta)^i <= p, exact for representable doubles.
int rounding_exponent(double p, double delta);

// f(p) = (1+delta)^floor(log_{1+delta} p); f(0) = 0 so zero jobs stay small.
double rounded_size(double p, double delta);

enum class JobKind { Small, Medium, Big };

struct JobClassification {
    JobKind kind = JobKind::Small;
    bool huge = false;      // raw size exceeds B; independent of kind
    double rounded = 0.0;   // f(p)
    int exponent = 0;       // f(p) = (1+delta)^exponent; unused when rounded == 0
};

JobClassification classify(double p, double B, double delta);

// ---- Size-class table ----------------------------------------------------

// One rounded-size class p with weight w (1/2 medium range, 1 big range),
// sampled count n_hat, planned count c_p stored as the integer w*c_p, and
// the live counter c_prime of p-jobs scheduled so far incl. placeholders.
struct SizeClass {
    int exponent = 0;
    double rounded = 0.0;
    double w = 1.0;
    long long n_hat = 0;
    long long wc = 0;        // w(p) * c_p, integral by construction
    long long c_prime = 0;
    std::optional<long long> n_true;  // filled post hoc by analysis code

    long long c() const { return w == 1.0 ? wc : 2 * wc; }
    bool unsaturated() const { return c_prime < c(); }
    bool medium_range() const { return w == 0.5; }
};

struct ClassTable {
    double B = 0.0;
    double delta = 0.0;
    int exp_min = 0;  // classes span ((1+d)^{-1} p_small B, B]
    int exp_max = -1;
    std::vector<SizeClass> classes;  // ascending exponent

    bool contains(int exponent) const {
        return exponent >= exp_min && exponent <= exp_max;
    }
    const SizeClass& at(int exponent) const { return classes[exponent - exp_min]; }
    SizeClass& at(int exponent) { return classes[exponent - exp_min]; }
    long long weighted_target() const;  // sum of w(p) c_p over classes
};

// Estimates available once the sampling prefix has been scheduled.
struct SamplingEstimates {
    int sample_len = 0;
    double l_hat = 0.0;      // L_{delta^2}
    double sample_max = 0.0;
    double B = 0.0;          // max(sample_max, l_hat)
};

SamplingEstimates sampling_estimates(const JobSequence& seq, int m,
                                     int sample_len, double delta);

// Class table over the first sample_len arrivals for the given B. Used by
// the scheduler at its decision point and by the post-hoc stability
// checker, which recomputes it independently of any run.
ClassTable build_class_table(const JobSequence& seq, int m, int sample_len,
                             double B, double delta);

// Fill n_true for every class from the whole sequence.
void fill_true_counts(ClassTable& table, const JobSequence& seq);

// ---- Schedulers ----------------------------------------------------------

struct RunOptions {
    bool record_trace = false;
    bool audit = false;                // critical-job scheduler only
    std::optional<int> declared_n;     // run expecting more jobs than delivered
};

// Greedy: every job to a least loaded machine.
ScheduleOutcome graham(const JobSequence& seq, int m, const RunOptions& opts = {});

// Semi-online LightLoad with an explicit guess for the average load.
// A job goes to the floor(m/2)-th least loaded machine unless the least
// loaded machine is still shallow or the middle machine would overflow.
ScheduleOutcome lightload(const JobSequence& seq, int m, double l_guess,
                          const RunOptions& opts = {});

// LightLoad driven by a guess sampled from the first quarter of arrivals
// (sequence zero-padded to a multiple of four): the quarter is scheduled
// greedily, then LightLoad runs with guess L_{1/4}/(1-delta).
ScheduleOutcome lightload_rom(const JobSequence& seq, int m,
                              const AlgoParams& params = {},
                              const RunOptions& opts = {});

// Same, but the guess is max(L_{1/4}, largest size seen in the quarter)
// without the 1/(1-delta) inflation.
ScheduleOutcome lightload_bpre(const JobSequence& seq, int m,
                               const AlgoParams& params = {},
                               const RunOptions& opts = {});

struct AuditReport {
    long long steps = 0;
    std::vector<std::string> violations;
    bool shape_checks_applicable = false;  // critical-content shape regime
    bool mass_checks_applicable = false;   // delta^2 <= 1/2 regime
    int fail_points_checked = 0;    // FAIL inequality asserted (points form)
    int fail_literal_checked = 0;   // FAIL inequality asserted (sum over P)
    int fail_recorded_only = 0;     // FAIL outside the provable precondition
    bool ok() const { return violations.empty(); }
};

struct SecretaryResult {
    ScheduleOutcome outcome;
    int sample_len = 0;
    int reserve_count = 0;
    double delta = 0.0;
    double B = 0.0;
    double l_hat = 0.0;
    bool degenerate_b = false;           // B == 0: plain greedy on principals
    Strategy initial_choice = Strategy::Critical;
    ClassTable table;                    // empty when never computed
    std::vector<MachineState> machines;  // final machine snapshot
    std::optional<AuditReport> audit;
};

// The sampling / critical-job / least-loaded scheduler. With opts.audit the
// run checks its structural invariants at every step and throws
// invariant_violation on the first breach (the report lists them as well).
SecretaryResult secretary_schedule(const JobSequence& seq, int m,
                                   const AlgoParams& params = {},
                                   const RunOptions& opts = {});

}  // namespace romsched
