#include "romsched/opt.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <unordered_set>

namespace romsched {

double avg_load(const JobSet& set, int m) {
    if (m < 1) throw std::invalid_argument("avg_load: m must be >= 1");
    return set.total() / static_cast<double>(m);
}

double complexity_R(const JobSet& set, int m) {
    const double p_max = set.max_size();
    if (p_max <= 0.0) return 1.0;
    return std::min(avg_load(set, m) / p_max, 1.0);
}

double simple_threshold(int m, const AlgoParams& params) {
    const double d = params.delta(m);
    return (1.0 - d) * d * d * d / (2.0 * (d * d + 1.0)) * (2.0 - competitive_c());
}

bool is_simple(const JobSet& set, int m, const AlgoParams& params) {
    if (set.n() <= m) return true;
    return complexity_R(set, m) <= simple_threshold(m, params);
}

double lpt_makespan(const JobSet& set, int m) {
    if (m < 1) throw std::invalid_argument("lpt_makespan: m must be >= 1");
    std::vector<Job> jobs;
    jobs.reserve(set.sizes.size());
    for (int i = 0; i < set.n(); ++i) jobs.push_back(set.job(i));
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
        if (a.size != b.size) return a.size > b.size;
        return a.id < b.id;
    });
    std::vector<double> loads(m, 0.0);
    for (const Job& job : jobs) {
        int target = 0;
        for (int i = 1; i < m; ++i)
            if (loads[i] < loads[target]) target = i;
        loads[target] += job.size;
    }
    return *std::max_element(loads.begin(), loads.end());
}

namespace {

struct LoadVectorHash {
    std::size_t operator()(const std::array<double, kExactOptMaxMachines>& key) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (double v : key) {
            h ^= std::bit_cast<std::uint64_t>(v);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

struct BranchAndBound {
    static constexpr int kM = kExactOptMaxMachines;
    std::vector<double> jobs;  // positive sizes, descending
    int m = 0;
    double best = 0.0;
    std::array<double, kM> loads{};
    std::vector<std::unordered_set<std::array<double, kM>, LoadVectorHash>> visited;

    void run() {
        visited.assign(jobs.size() + 1, {});
        descend(0, 0.0);
    }

    void descend(std::size_t t, double cur_max) {
        if (cur_max >= best) return;
        if (t == jobs.size()) {
            best = cur_max;
            return;
        }
        const double p = jobs[t];
        if (t + 1 == jobs.size()) {
            // Only one job left: it belongs on a least loaded machine.
            const double low = *std::min_element(loads.begin(), loads.begin() + m);
            const double done = std::max(cur_max, low + p);
            if (done < best) best = done;
            return;
        }
        std::array<double, kM> key = loads;
        std::sort(key.begin(), key.begin() + m, std::greater<double>());
        if (!visited[t].insert(key).second) return;

        for (int i = 0; i < m; ++i) {
            bool mirrored = false;
            for (int j = 0; j < i; ++j)
                if (loads[j] == loads[i]) { mirrored = true; break; }
            if (mirrored) continue;
            const double old = loads[i];
            const double grown = old + p;
            if (grown >= best) continue;
            loads[i] = grown;
            descend(t + 1, std::max(cur_max, grown));
            loads[i] = old;
        }
    }
};

}  // namespace

double exact_opt(const JobSet& set, int m) {
    if (m < 1) throw std::invalid_argument("exact_opt: m must be >= 1");
    if (set.n() > kExactOptMaxJobs || m > kExactOptMaxMachines)
        throw std::invalid_argument(
            "exact_opt: instance above enforced limits (n <= 18, m <= 5); "
            "use max(L, p_max) as lower bound instead");

    BranchAndBound bb;
    for (double s : set.sizes)
        if (s > 0.0) bb.jobs.push_back(s);
    if (bb.jobs.empty()) return 0.0;
    std::sort(bb.jobs.begin(), bb.jobs.end(), std::greater<double>());
    if (static_cast<int>(bb.jobs.size()) <= m) return bb.jobs.front();

    bb.m = m;
    bb.best = lpt_makespan(set, m);
    const double lower = std::max(avg_load(set, m), bb.jobs.front());
    if (bb.best <= lower) return bb.best;
    bb.loads.fill(0.0);
    const double seed_upper = bb.best;
    bb.run();
    // The DFS only records strict improvements over the LPT seed.
    return std::min(bb.best, seed_upper);
}

OptBounds opt_bounds(const JobSet& set, int m, bool with_exact) {
    OptBounds b;
    b.avg_load = avg_load(set, m);
    b.p_max = set.max_size();
    b.lower = std::max(b.avg_load, b.p_max);
    b.lpt_upper = lpt_makespan(set, m);
    if (with_exact && set.n() <= kExactOptMaxJobs && m <= kExactOptMaxMachines)
        b.exact = exact_opt(set, m);
    return b;
}

}  // namespace romsched
