#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "romsched/algorithms.hpp"
#include "romsched/core.hpp"
#include "romsched/params.hpp"

namespace romsched {

// L_phi: phi^-1 times the average load after the first floor(phi*n)
// arrivals; the whole-sequence case phi = 1 equals the average load L.
double load_estimate(const JobSequence& seq, int m, double phi);

// Number of jobs of each rounded-size class (keyed by exponent) among the
// first floor(phi*n) arrivals. Zero-size jobs belong to no class.
std::map<int, long long> class_counts(const JobSequence& seq, double delta,
                                      double phi);

// Post-hoc stability report for one ordered sequence. Recomputes B and the
// class table from the sequence itself so it can audit any run.
//
// The five conditions come out of the accuracy/spread definition of a
// stable order; condition 5 depends only on (m, |P|) and is negative for
// every desk-scale m, so `stable` is reported faithfully alongside
// `core_stable` (conditions 1-4) for trend experiments.
struct StabilityReport {
    bool applicable = false;
    std::string reason;  // set when not applicable or degenerate

    bool estimate_accurate = false;   // (1-d)L <= L_hat <= (1+d)L
    bool counts_accurate = false;     // c_p <= n_p <= c_p + 2 m^{3/4}
    bool few_huge = false;            // at most ceil(d m) huge jobs
    bool huge_spread = false;         // big classes mostly after last huge job
    bool capacity_margin = false;     // d^3 floor((1-d-2d^2)m/|P|) >= 2|P|m^{3/4}
    bool stable = false;              // all five
    bool core_stable = false;         // conditions 1-4

    // The sampling prefix is floor(d^2 n); true when ceil would differ.
    bool prefix_convention_differs = false;

    double L = 0.0, l_hat = 0.0, B = 0.0, delta = 0.0;
    int sample_len = 0;
    int huge_count = 0;
    int class_count = 0;
    std::optional<int> last_huge_time;  // 1-based arrival position
};

StabilityReport check_stable(const JobSequence& seq, int m,
                             const AlgoParams& params = {});

// The six sampling-friendly conditions built on S, the ceil(d^{-7/3})
// largest jobs of the set. For large m they imply the stable conditions;
// at desk scale conditions 1-4 of the stability report are implied.
struct ProbStabilityReport {
    bool applicable = false;
    std::string reason;

    bool estimate_accurate = false;    // 1
    bool sample_hits_top = false;      // 2: some job of S sampled
    bool class_counts_tight = false;   // 3: |d^-2 n_{p,d^2} - n_p| <= m^{3/4}-1
    bool medium_undersampled = false;  // 4: 2 n_{p,d^2} <= n_p on medium classes
    bool top_not_last = false;         // 5: t_S <= (1-d^{8/3}) n
    bool big_classes_spread = false;   // 6
    bool all = false;

    bool prefix_convention_differs = false;

    double s_min = 0.0, delta = 0.0;
    int top_set_size = 0;
    int t_top = 0;         // 1-based arrival position of the last job of S
    int candidate_classes = 0;  // |P_hat|
};

ProbStabilityReport check_probabilistically_stable(const JobSequence& seq, int m,
                                                   const AlgoParams& params = {});

// Mean absolute deviation of Bin(K, p) by the closed form
// 2 floor(pK+1) (1-p) bin(floor(pK+1), K, p), evaluated in log space.
double md_binomial(long long K, double p);

// Mean absolute deviation of HyperGeom(n, K, draws) by direct summation of
// the PMF (log-gamma based). Enforced limit n <= 200.
double md_hypergeom_bruteforce(int n, int K, int draws);

struct MonteCarloEstimate {
    double mean = 0.0;
    double se = 0.0;       // standard error of the mean
    long long trials = 0;
    double half_width() const { return 1.96 * se; }
};

// E|L_phi - L| / L over seeded random orders; trial i draws its own stream
// from (seed, i), so results are reproducible and worker-count independent.
MonteCarloEstimate nmd_monte_carlo(const JobSet& set, int m, double phi,
                                   long long trials, std::uint64_t seed,
                                   int threads = 1);

}  // namespace romsched
