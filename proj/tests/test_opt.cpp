#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "romsched/instances.hpp"
#include "romsched/opt.hpp"
#include "romsched/rng.hpp"

using namespace romsched;

namespace {

// Exhaustive oracle: minimum makespan over all m^n assignments.
double brute_force_opt(const JobSet& set, int m) {
    const int n = set.n();
    double best = 0.0;
    for (double s : set.sizes) best += s;
    std::vector<int> choice(n, 0);
    for (;;) {
        std::vector<double> loads(m, 0.0);
        for (int j = 0; j < n; ++j) loads[choice[j]] += set.sizes[j];
        best = std::min(best, *std::max_element(loads.begin(), loads.end()));
        int j = 0;
        while (j < n && ++choice[j] == m) choice[j++] = 0;
        if (j == n) break;
    }
    return best;
}

JobSet random_set(Xoshiro256StarStar& rng, int n) {
    JobSet set;
    for (int i = 0; i < n; ++i)
        set.sizes.push_back(rng.below(5) == 0 ? 0.0 : rng.uniform(0.1, 3.0));
    return set;
}

}  // namespace

TEST_CASE("average load basics") {
    CHECK(avg_load(JobSet({1, 1, 1, 1}), 4) == 1.0);
    CHECK(avg_load(JobSet(std::vector<double>{}), 3) == 0.0);
    CHECK(avg_load(JobSet({2, 3, 5}), 2) == 5.0);
    CHECK_THROWS_AS(avg_load(JobSet({1}), 0), std::invalid_argument);
}

TEST_CASE("complexity measure R") {
    // One positive job among zeros gives R = 1/m.
    for (int m : {2, 5, 17}) {
        JobSet set;
        set.sizes.assign(3 * m, 0.0);
        set.sizes[0] = 7.5;
        CHECK(complexity_R(set, m) == doctest::Approx(1.0 / m).epsilon(1e-12));
    }
    // m identical jobs on m machines: L = p_max.
    CHECK(complexity_R(JobSet({2, 2, 2}), 3) == 1.0);
    // Direct formula on a lopsided set.
    JobSet lopsided({8, 1, 1, 1, 1});
    const double L = avg_load(lopsided, 4);
    CHECK(complexity_R(lopsided, 4) == doctest::Approx(std::min(L / 8.0, 1.0)));
    // All-zero sets are defined to have R = 1.
    CHECK(complexity_R(JobSet({0, 0}), 2) == 1.0);
    // Scaling all sizes leaves R unchanged.
    JobSet scaled = lopsided;
    for (double& s : scaled.sizes) s *= 4.0;  // power of two: exact
    CHECK(complexity_R(scaled, 4) == complexity_R(lopsided, 4));
}

TEST_CASE("simple sets: job count rule and threshold rule") {
    CHECK(is_simple(JobSet({1, 1, 1}), 3));       // n = m
    CHECK(is_simple(JobSet({1, 1}), 5));          // n < m
    for (int m : {3, 4, 8, 64}) {
        JobSet identical;
        identical.sizes.assign(2 * m, 1.0);       // R = 1
        CHECK(simple_threshold(m) < 1.0);
        CHECK_FALSE(is_simple(identical, m));
    }
    // A single dominant job is simple once 1/m is below the threshold.
    const int m = 10000;
    CHECK(1.0 / m < simple_threshold(m));
    JobSet degenerate = gen_degenerate(m, 2 * m, 5.0);
    CHECK(is_simple(degenerate, m));
    CHECK_FALSE(is_simple(degenerate, 100));  // threshold too small at m = 100
}

TEST_CASE("exact optimum on the hard three-type sets") {
    auto base = gen_lower_bound({2, LowerBoundSpec::Variant::Base});
    CHECK(exact_opt(base, 2) == doctest::Approx(1.0).epsilon(1e-12));
    const double c = lower_bound_c();
    auto extra_big3 = gen_lower_bound({3, LowerBoundSpec::Variant::ExtraBig});
    CHECK(exact_opt(extra_big3, 3) == doctest::Approx(c).epsilon(1e-12));
    // Two machines cannot absorb the third big job into the c-packing:
    // the best schedule pairs the bigs and stacks a big with both smalls.
    auto extra_big2 = gen_lower_bound({2, LowerBoundSpec::Variant::ExtraBig});
    CHECK(exact_opt(extra_big2, 2) ==
          doctest::Approx(1.0 + c / 3.0).epsilon(1e-12));
}

TEST_CASE("exact optimum trivia") {
    CHECK(exact_opt(JobSet({3.3}), 4) == 3.3);
    CHECK(exact_opt(JobSet(std::vector<double>{}), 2) == 0.0);
    CHECK(exact_opt(JobSet({0, 0, 0}), 2) == 0.0);
    JobSet too_big;
    too_big.sizes.assign(19, 1.0);
    CHECK_THROWS_AS(exact_opt(too_big, 2), std::invalid_argument);
    CHECK_THROWS_AS(exact_opt(JobSet({1, 1}), 6), std::invalid_argument);
}

TEST_CASE("exact optimum matches exhaustive search on small instances") {
    Xoshiro256StarStar rng(31337);
    for (int round = 0; round < 40; ++round) {
        const int n = 3 + static_cast<int>(rng.below(6));  // up to 8 jobs
        const int m = 2 + static_cast<int>(rng.below(2));
        const JobSet set = random_set(rng, n);
        CHECK(exact_opt(set, m) ==
              doctest::Approx(brute_force_opt(set, m)).epsilon(1e-12));
    }
}

TEST_CASE("exact optimum is permutation invariant") {
    Xoshiro256StarStar rng(5);
    JobSet set = random_set(rng, 10);
    const double reference = exact_opt(set, 3);
    for (int round = 0; round < 5; ++round) {
        JobSet shuffled = set;
        for (int i = static_cast<int>(shuffled.sizes.size()) - 1; i > 0; --i)
            std::swap(shuffled.sizes[i], shuffled.sizes[rng.below(i + 1)]);
        CHECK(exact_opt(shuffled, 3) == reference);
    }
}

TEST_CASE("bounds bracket the optimum; LPT within 4/3") {
    CHECK(lpt_makespan(JobSet({1, 1}), 2) == 1.0);
    Xoshiro256StarStar rng(77);
    for (int round = 0; round < 60; ++round) {
        const int n = 4 + static_cast<int>(rng.below(9));  // up to 12 jobs
        const int m = 2 + static_cast<int>(rng.below(3));
        const JobSet set = random_set(rng, n);
        const double exact = exact_opt(set, m);
        const double lpt = lpt_makespan(set, m);
        const double lower = std::max(avg_load(set, m), set.max_size());
        CHECK(lower <= exact + 1e-9);
        CHECK(exact <= lpt + 1e-9);
        CHECK(lpt <= (4.0 / 3.0) * exact + 1e-9);
    }
    // Upper bound property on the extended hard set.
    auto extra_big = gen_lower_bound({2, LowerBoundSpec::Variant::ExtraBig});
    CHECK(lpt_makespan(extra_big, 2) >= exact_opt(extra_big, 2) - 1e-12);
}

TEST_CASE("opt_bounds assembles the pieces") {
    JobSet set({2, 3, 5});
    const OptBounds b = opt_bounds(set, 2, true);
    CHECK(b.avg_load == 5.0);
    CHECK(b.p_max == 5.0);
    CHECK(b.lower == 5.0);
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact == doctest::Approx(5.0));
    CHECK(b.lpt_upper >= *b.exact - 1e-12);
}
