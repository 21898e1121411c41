#pragma once

#include <optional>

#include "romsched/core.hpp"
#include "romsched/params.hpp"

namespace romsched {

// Lower/upper bounds bracketing the optimum makespan of a job set.
struct OptBounds {
    double avg_load = 0.0;   // L
    double p_max = 0.0;
    double lower = 0.0;      // max(L, p_max)
    double lpt_upper = 0.0;
    std::optional<double> exact;
};

// L = (1/m) * sum of sizes.
double avg_load(const JobSet& set, int m);

// R(J) = min(L/p_max, 1); 1 for the all-zero set (any schedule is optimal).
double complexity_R(const JobSet& set, int m);

// Threshold below which a set counts as simple, (1-d)d^3/(2(d^2+1))*(2-c).
double simple_threshold(int m, const AlgoParams& params = {});

// True iff the set has at most m jobs or R(J) is below the threshold.
bool is_simple(const JobSet& set, int m, const AlgoParams& params = {});

// Exact optimum makespan by branch and bound (LPT seed, max(L,p_max)
// pruning, sorted-load-vector memoization). Enforced limits keep the
// search tractable; larger instances must fall back to lower bounds.
inline constexpr int kExactOptMaxJobs = 18;
inline constexpr int kExactOptMaxMachines = 5;
double exact_opt(const JobSet& set, int m);

// Longest-processing-time-first list scheduling; ties by job id.
double lpt_makespan(const JobSet& set, int m);

OptBounds opt_bounds(const JobSet& set, int m, bool with_exact);

}  // namespace romsched
