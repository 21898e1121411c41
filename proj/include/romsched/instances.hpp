#pragma once

#include <cstdint>
#include <string>

#include "romsched/core.hpp"

namespace romsched {

// Ratio constant of the hard three-type job sets, (sqrt(73)-1)/6 ~ 1.2573.
// Big and small sizes are derived from it (1 - c/3 and c/3) rather than
// hard-coded radical forms; it satisfies c^2 = 2 - c/3.
double lower_bound_c();

struct LowerBoundSpec {
    enum class Variant { Base, ExtraNegligible, ExtraBig };
    int m = 1;
    Variant variant = Variant::Base;
};

// m negligible (size 0), m big (1 - c/3) and m small (c/3) jobs; the two
// variants append one more job of the named type. Job ids are laid out as
// [negligible | big | small | extra].
JobSet gen_lower_bound(const LowerBoundSpec& spec);

// True iff the last arrival is of the appended type, i.e. the first 3m
// arrivals form a permutation of the base set. Undefined for Base.
bool is_good_order(const JobSequence& seq, const LowerBoundSpec& spec);

// One job of size `big` and n-1 of size 0; R(J) = 1/m.
JobSet gen_degenerate(int m, int n, double big);

struct RandomFamily {
    enum class Kind { Uniform, Bimodal, ParetoLike };
    Kind kind = Kind::Uniform;

    // Uniform: sizes in [lo, hi].
    double lo = 0.0, hi = 1.0;

    // Bimodal: high_count jobs of size `high`, the rest of size `lo`.
    double high = 8.0 / 3.0;
    int high_count = 0;

    // ParetoLike: x_min * U^(-1/alpha), truncated at `cap` (0 = no cap).
    double alpha = 2.5, x_min = 1.0, cap = 0.0;
};

JobSet gen_random(const RandomFamily& family, int n, std::uint64_t seed);

// The extremal heavy/zero split with floor(3m/8) jobs of size 8/3: for m
// divisible by 8 the average load is exactly 1 and R(J) = 3/8.
RandomFamily extremal_bimodal(int m);

// Plain text, one size per line, with a JSON sidecar <path>.json holding
// provenance (family, params, seed) when supplied.
void save_instance(const JobSet& set, const std::string& path,
                   const std::string& sidecar_json = "");
JobSet load_instance(const std::string& path);

}  // namespace romsched
