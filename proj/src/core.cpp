#include "romsched/core.hpp"

#include <algorithm>
#include <cmath>

#include "romsched/rng.hpp"

namespace romsched {

double JobSet::total() const {
    KahanAccum acc;
    for (double s : sizes) acc.add(s);
    return acc.value();
}

double JobSet::max_size() const {
    double p = 0.0;
    for (double s : sizes) p = std::max(p, s);
    return p;
}

JobSequence permute(std::shared_ptr<const JobSet> set, std::uint64_t seed) {
    const int n = set->n();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    Xoshiro256StarStar rng(seed);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }
    return JobSequence{std::move(set), std::move(order)};
}

JobSequence permute(const JobSet& set, std::uint64_t seed) {
    return permute(std::make_shared<const JobSet>(set), seed);
}

JobSequence sequence_from_order(std::shared_ptr<const JobSet> set,
                                std::vector<int> order) {
    const int n = set->n();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("sequence_from_order: order length != n");
    std::vector<char> seen(n, 0);
    for (int id : order) {
        if (id < 0 || id >= n || seen[id])
            throw std::invalid_argument("sequence_from_order: not a permutation");
        seen[id] = 1;
    }
    return JobSequence{std::move(set), std::move(order)};
}

SimulationState SimulationState::make(int m, int reserve_count) {
    if (m < 1) throw std::invalid_argument("SimulationState: m must be >= 1");
    if (reserve_count < 0 || reserve_count >= m)
        throw std::invalid_argument("SimulationState: bad reserve count");
    SimulationState state;
    state.machines.resize(m);
    for (int i = m - reserve_count; i < m; ++i)
        state.machines[i].role = MachineRole::Reserve;
    return state;
}

int SimulationState::reserve_count() const {
    int r = 0;
    for (const auto& mach : machines)
        if (mach.role == MachineRole::Reserve) ++r;
    return r;
}

namespace {

bool in_pool(const MachineState& mach, Pool pool) {
    switch (pool) {
        case Pool::All: return true;
        case Pool::Principal: return mach.role == MachineRole::Principal;
        case Pool::Reserve: return mach.role == MachineRole::Reserve;
    }
    return false;
}

double load_of(const MachineState& mach, LoadKey key) {
    return key == LoadKey::Real ? mach.real_load() : mach.anticipated_load();
}

}  // namespace

int kth_least_loaded(const SimulationState& state, int k, Pool pool, LoadKey key) {
    std::vector<std::pair<double, int>> entries;
    entries.reserve(state.machines.size());
    for (int i = 0; i < state.m(); ++i) {
        if (in_pool(state.machines[i], pool))
            entries.emplace_back(load_of(state.machines[i], key), i);
    }
    if (entries.empty()) throw std::invalid_argument("kth_least_loaded: empty pool");
    if (k < 1 || k > static_cast<int>(entries.size()))
        throw std::invalid_argument("kth_least_loaded: k out of range");
    if (k == 1) {
        return std::min_element(entries.begin(), entries.end())->second;
    }
    std::nth_element(entries.begin(), entries.begin() + (k - 1), entries.end());
    return entries[k - 1].second;
}

namespace {

void record(SimulationState& state, const Job& job, int machine,
            double rb, double ab, bool replaced) {
    if (!state.record_trace) return;
    const auto& mach = state.machines[machine];
    state.trace.push_back(TraceEntry{state.t, job.id, machine, rb, ab,
                                     mach.real_load(), mach.anticipated_load(),
                                     replaced});
}

}  // namespace

void assign(SimulationState& state, const Job& job, int machine) {
    if (machine < 0 || machine >= state.m())
        throw std::invalid_argument("assign: machine index out of range");
    auto& mach = state.machines[machine];
    const double rb = mach.real_load(), ab = mach.anticipated_load();
    mach.real.add(job.size);
    mach.anticipated.add(job.size);
    state.assigned_total.add(job.size);
    record(state, job, machine, rb, ab, false);
}

void assign_replacing(SimulationState& state, const Job& job, int machine,
                      double placeholder_size) {
    if (machine < 0 || machine >= state.m())
        throw std::invalid_argument("assign_replacing: machine index out of range");
    auto& mach = state.machines[machine];
    auto it = std::find(mach.placeholders.begin(), mach.placeholders.end(),
                        placeholder_size);
    if (it == mach.placeholders.end())
        throw std::invalid_argument("assign_replacing: no matching placeholder");
    const double rb = mach.real_load(), ab = mach.anticipated_load();
    mach.placeholders.erase(it);
    mach.real.add(job.size);
    mach.anticipated.add(job.size - placeholder_size);
    state.assigned_total.add(job.size);
    record(state, job, machine, rb, ab, true);
}

void add_placeholder(SimulationState& state, int machine, double rounded_size) {
    auto& mach = state.machines[machine];
    mach.placeholders.push_back(rounded_size);
    mach.anticipated.add(rounded_size);
}

double makespan_of(const SimulationState& state) {
    double ms = 0.0;
    for (const auto& mach : state.machines) ms = std::max(ms, mach.real_load());
    return ms;
}

}  // namespace romsched
