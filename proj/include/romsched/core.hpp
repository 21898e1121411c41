#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace romsched {

// Thrown when an audited run violates a structural invariant. The CLI maps
// this to exit code 2, ordinary validation errors to exit code 1.
class invariant_violation : public std::runtime_error {
public:
    explicit invariant_violation(const std::string& what)
        : std::runtime_error(what) {}
};

struct Job {
    int id = 0;
    double size = 0.0;
};

// A multiset of jobs; job ids are the indices into `sizes`.
struct JobSet {
    std::vector<double> sizes;

    JobSet() = default;
    explicit JobSet(std::vector<double> s) : sizes(std::move(s)) {}

    int n() const { return static_cast<int>(sizes.size()); }
    Job job(int id) const { return Job{id, sizes[id]}; }
    double total() const;
    double max_size() const;
};

// An arrival order over a job set: order[t] is the id of the job arriving
// at position t (0-based). The base set is shared so permuting is cheap.
struct JobSequence {
    std::shared_ptr<const JobSet> base;
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    int job_at(int t) const { return order[t]; }
    double size_at(int t) const { return base->sizes[order[t]]; }
    const JobSet& set() const { return *base; }
};

// Uniformly random arrival order via Fisher-Yates driven by xoshiro256**.
// Identical seeds give identical orders on every platform.
JobSequence permute(std::shared_ptr<const JobSet> set, std::uint64_t seed);
JobSequence permute(const JobSet& set, std::uint64_t seed);

// A fixed arrival order (0-based permutation of job ids); validated.
JobSequence sequence_from_order(std::shared_ptr<const JobSet> set,
                                std::vector<int> order);

enum class MachineRole { Principal, Reserve };
enum class Strategy { Critical, LeastLoaded };
enum class LoadKey { Real, Anticipated };
enum class Pool { All, Principal, Reserve };

// Compensated (Kahan) accumulator; keeps load conservation checks tight
// for runs with ~1e6 assignments.
struct KahanAccum {
    double sum = 0.0;
    double c = 0.0;

    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct MachineState {
    KahanAccum real;         // load of real jobs
    KahanAccum anticipated;  // real load plus outstanding placeholders
    std::vector<double> placeholders;  // reserved rounded sizes
    MachineRole role = MachineRole::Principal;
    int medium_count = 0;  // critical jobs incl. placeholders
    int big_count = 0;

    double real_load() const { return real.value(); }
    double anticipated_load() const { return anticipated.value(); }
    bool empty() const { return placeholders.empty() && real.value() == 0.0 &&
                                medium_count == 0 && big_count == 0; }
};

struct TraceEntry {
    int t;       // 1-based arrival time
    int job_id;
    int machine;
    double real_before, anticipated_before;
    double real_after, anticipated_after;
    bool replaced_placeholder;
};

struct SimulationState {
    std::vector<MachineState> machines;
    int t = 0;  // arrivals consumed so far
    Strategy strategy = Strategy::Critical;
    std::optional<int> failed_at;
    bool record_trace = false;
    std::vector<TraceEntry> trace;
    KahanAccum assigned_total;  // sum of sizes of all assigned jobs

    static SimulationState make(int m, int reserve_count);
    int m() const { return static_cast<int>(machines.size()); }
    int reserve_count() const;
};

// Index of the machine with the k-th (1-based) smallest load under `key`,
// restricted to `pool`; ties go to the smallest machine index.
int kth_least_loaded(const SimulationState& state, int k, Pool pool, LoadKey key);

// Assign a real job. Both loads grow by the job size.
void assign(SimulationState& state, const Job& job, int machine);

// Assign a real job in place of a placeholder of size `placeholder_size`
// on that machine (exact match required). The anticipated load grows only
// by the rounding slack job.size - placeholder_size.
void assign_replacing(SimulationState& state, const Job& job, int machine,
                      double placeholder_size);

// Reserve space for a future critical job of the given rounded size.
void add_placeholder(SimulationState& state, int machine, double rounded_size);

double makespan_of(const SimulationState& state);

struct ScheduleOutcome {
    double makespan = 0.0;
    std::vector<int> assignment;        // job id -> machine index
    std::vector<double> final_loads;    // real load per machine
    std::vector<TraceEntry> trace;      // empty unless tracing was on
    bool failed = false;
    std::optional<int> switch_time;     // time strategy became LeastLoaded
};

}  // namespace romsched
