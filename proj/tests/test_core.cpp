#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "romsched/core.hpp"
#include "romsched/rng.hpp"

using namespace romsched;

namespace {

SimulationState state_with_loads(const std::vector<double>& loads, int reserve = 0) {
    SimulationState st = SimulationState::make(static_cast<int>(loads.size()), reserve);
    for (std::size_t i = 0; i < loads.size(); ++i)
        assign(st, Job{static_cast<int>(i), loads[i]}, static_cast<int>(i));
    return st;
}

// Sort-and-index oracle for the k-th least loaded machine.
int kth_oracle(const std::vector<double>& loads, int k) {
    std::vector<std::pair<double, int>> entries;
    for (std::size_t i = 0; i < loads.size(); ++i)
        entries.emplace_back(loads[i], static_cast<int>(i));
    std::sort(entries.begin(), entries.end());
    return entries[k - 1].second;
}

}  // namespace

TEST_CASE("k-th least loaded: minimum, tie rule, sort oracle") {
    auto st = state_with_loads({3, 1, 2});
    CHECK(kth_least_loaded(st, 1, Pool::All, LoadKey::Real) == 1);

    auto tie = state_with_loads({1, 1, 1});
    CHECK(kth_least_loaded(tie, 2, Pool::All, LoadKey::Real) == 1);

    auto st4 = state_with_loads({5, 0, 4, 0});
    CHECK(kth_least_loaded(st4, 2, Pool::All, LoadKey::Real) == 3);
    CHECK(kth_least_loaded(st4, 2, Pool::All, LoadKey::Real) ==
          kth_oracle({5, 0, 4, 0}, 2));
}

TEST_CASE("k-th least loaded agrees with the sort oracle on random loads") {
    Xoshiro256StarStar rng(2024);
    for (int round = 0; round < 50; ++round) {
        const int m = 1 + static_cast<int>(rng.below(12));
        std::vector<double> loads;
        for (int i = 0; i < m; ++i)
            loads.push_back(rng.below(4) == 0 ? 0.0 : rng.uniform(0.0, 5.0));
        auto st = state_with_loads(loads);
        for (int k = 1; k <= m; ++k)
            CHECK(kth_least_loaded(st, k, Pool::All, LoadKey::Real) ==
                  kth_oracle(loads, k));
    }
}

TEST_CASE("k-th least loaded validates pool and range") {
    auto st = state_with_loads({1, 2}, 1);
    CHECK_THROWS_AS(kth_least_loaded(st, 3, Pool::All, LoadKey::Real),
                    std::invalid_argument);
    CHECK_THROWS_AS(kth_least_loaded(st, 0, Pool::All, LoadKey::Real),
                    std::invalid_argument);
    CHECK(kth_least_loaded(st, 1, Pool::Reserve, LoadKey::Real) == 1);
    SimulationState no_reserve = SimulationState::make(2, 0);
    CHECK_THROWS_AS(kth_least_loaded(no_reserve, 1, Pool::Reserve, LoadKey::Real),
                    std::invalid_argument);
}

TEST_CASE("assign updates both loads") {
    SimulationState st = SimulationState::make(2, 0);
    assign(st, Job{0, 2.0}, 0);
    CHECK(st.machines[0].real_load() == 2.0);
    CHECK(st.machines[0].anticipated_load() == 2.0);
    assign(st, Job{1, 3.0}, 0);
    CHECK(st.machines[0].real_load() == 5.0);
}

TEST_CASE("placeholder replacement keeps anticipated = real + placeholders") {
    SimulationState st = SimulationState::make(1, 0);
    assign(st, Job{0, 4.0}, 0);
    add_placeholder(st, 0, 1.0);
    CHECK(st.machines[0].anticipated_load() == doctest::Approx(5.0));
    assign_replacing(st, Job{1, 1.05}, 0, 1.0);
    CHECK(st.machines[0].real_load() == doctest::Approx(5.05));
    CHECK(st.machines[0].anticipated_load() == doctest::Approx(5.05));
    CHECK(st.machines[0].placeholders.empty());
}

TEST_CASE("replacement without a matching placeholder is an error") {
    SimulationState st = SimulationState::make(1, 0);
    add_placeholder(st, 0, 0.5);
    CHECK_THROWS_AS(assign_replacing(st, Job{0, 1.0}, 0, 1.0), std::invalid_argument);
}

TEST_CASE("loads are conserved over many random assignments") {
    SimulationState st = SimulationState::make(5, 0);
    Xoshiro256StarStar rng(9);
    double plain_total = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double size = rng.uniform(0.0, 1.0);
        assign(st, Job{i, size}, static_cast<int>(rng.below(5)));
        plain_total += size;
    }
    KahanAccum machine_total;
    for (const auto& mach : st.machines) machine_total.add(mach.real_load());
    CHECK(machine_total.value() ==
          doctest::Approx(st.assigned_total.value()).epsilon(1e-12));
    CHECK(machine_total.value() == doctest::Approx(plain_total).epsilon(1e-9));
    for (const auto& mach : st.machines)
        CHECK(mach.anticipated_load() == doctest::Approx(mach.real_load()));
}

TEST_CASE("trace records before/after loads when enabled") {
    SimulationState st = SimulationState::make(2, 0);
    st.record_trace = true;
    st.t = 1;
    assign(st, Job{0, 1.5}, 1);
    st.t = 2;
    add_placeholder(st, 1, 0.5);
    assign_replacing(st, Job{1, 0.6}, 1, 0.5);
    REQUIRE(st.trace.size() == 2);
    CHECK(st.trace[0].machine == 1);
    CHECK(st.trace[0].real_before == 0.0);
    CHECK(st.trace[0].real_after == 1.5);
    CHECK(st.trace[1].replaced_placeholder);
    CHECK(st.trace[1].anticipated_before == doctest::Approx(2.0));
    CHECK(st.trace[1].anticipated_after == doctest::Approx(2.1));
}

TEST_CASE("sequence_from_order rejects non-permutations") {
    auto set = std::make_shared<const JobSet>(JobSet({1, 2, 3}));
    CHECK_THROWS_AS(sequence_from_order(set, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sequence_from_order(set, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sequence_from_order(set, {0, 1, 3}), std::invalid_argument);
    CHECK_NOTHROW(sequence_from_order(set, {2, 0, 1}));
}
