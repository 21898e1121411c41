#include "romsched/algorithms.hpp"

#include <algorithm>
#include <cmath>

namespace romsched {

namespace {

double ipow1p(double delta, int i) {
    return std::pow(1.0 + delta, static_cast<double>(i));
}

}  // namespace

int rounding_exponent(double p, double delta) {
    if (p <= 0.0) throw std::invalid_argument("rounding_exponent: p must be > 0");
    int i = static_cast<int>(std::floor(std::log(p) / std::log1p(delta)));
    // log/floor can land one off at exact powers; settle it against pow.
    while (ipow1p(delta, i + 1) <= p) ++i;
    while (ipow1p(delta, i) > p) --i;
    return i;
}

double rounded_size(double p, double delta) {
    if (p <= 0.0) return 0.0;
    return ipow1p(delta, rounding_exponent(p, delta));
}

JobClassification classify(double p, double B, double delta) {
    JobClassification c;
    c.huge = p > B;
    if (p <= 0.0) return c;  // zero jobs are small
    c.exponent = rounding_exponent(p, delta);
    c.rounded = ipow1p(delta, c.exponent);
    if (c.rounded <= p_small_frac() * B) c.kind = JobKind::Small;
    else if (c.rounded > p_big_frac() * B) c.kind = JobKind::Big;
    else c.kind = JobKind::Medium;
    return c;
}

long long ClassTable::weighted_target() const {
    long long sum = 0;
    for (const auto& cls : classes) sum += cls.wc;
    return sum;
}

SamplingEstimates sampling_estimates(const JobSequence& seq, int m,
                                     int sample_len, double delta) {
    SamplingEstimates est;
    est.sample_len = sample_len;
    KahanAccum total;
    for (int t = 0; t < sample_len && t < seq.size(); ++t) {
        const double s = seq.size_at(t);
        total.add(s);
        est.sample_max = std::max(est.sample_max, s);
    }
    const double phi = delta * delta;
    est.l_hat = sample_len > 0 ? total.value() / (phi * static_cast<double>(m)) : 0.0;
    est.B = std::max(est.sample_max, est.l_hat);
    return est;
}

ClassTable build_class_table(const JobSequence& seq, int m, int sample_len,
                             double B, double delta) {
    if (B <= 0.0) throw std::invalid_argument("build_class_table: B must be > 0");
    ClassTable table;
    table.B = B;
    table.delta = delta;
    table.exp_max = rounding_exponent(B, delta);
    table.exp_min = rounding_exponent(p_small_frac() * B / (1.0 + delta), delta) + 1;
    const double big_cut = p_big_frac() * B;
    for (int e = table.exp_min; e <= table.exp_max; ++e) {
        SizeClass cls;
        cls.exponent = e;
        cls.rounded = ipow1p(delta, e);
        cls.w = cls.rounded <= big_cut ? 0.5 : 1.0;
        table.classes.push_back(cls);
    }
    for (int t = 0; t < sample_len && t < seq.size(); ++t) {
        const double p = seq.size_at(t);
        if (p <= 0.0) continue;
        const int e = rounding_exponent(p, delta);
        if (table.contains(e)) ++table.at(e).n_hat;
    }
    // w(p)c_p = max(floor((delta^-2 n_hat - m^{3/4}) w), n_hat). The floor is
    // taken once in floating point; the counter is exact integer after that.
    const double inv_phi = 1.0 / (delta * delta);
    const double m34 = std::pow(static_cast<double>(m), 0.75);
    for (auto& cls : table.classes) {
        const double planned =
            (inv_phi * static_cast<double>(cls.n_hat) - m34) * cls.w;
        cls.wc = std::max(static_cast<long long>(std::floor(planned)), cls.n_hat);
        cls.c_prime = cls.n_hat;
    }
    return table;
}

void fill_true_counts(ClassTable& table, const JobSequence& seq) {
    for (auto& cls : table.classes) cls.n_true = 0;
    for (int t = 0; t < seq.size(); ++t) {
        const double p = seq.size_at(t);
        if (p <= 0.0) continue;
        const int e = rounding_exponent(p, table.delta);
        if (table.contains(e)) ++(*table.at(e).n_true);
    }
}

// ---- Greedy and LightLoad ---------------------------------------------------

namespace {

ScheduleOutcome finish(SimulationState& st, std::vector<int> assignment) {
    ScheduleOutcome out;
    out.makespan = makespan_of(st);
    out.assignment = std::move(assignment);
    out.final_loads.reserve(st.machines.size());
    for (const auto& mach : st.machines) out.final_loads.push_back(mach.real_load());
    out.trace = std::move(st.trace);
    out.failed = st.failed_at.has_value();
    if (st.failed_at) out.switch_time = st.failed_at;
    return out;
}

// One LightLoad placement decision against the current loads.
int lightload_target(const SimulationState& st, int m, double p, double l_guess) {
    if (m == 1) return 0;
    const int low = kth_least_loaded(st, 1, Pool::All, LoadKey::Real);
    const int mid = kth_least_loaded(st, m / 2, Pool::All, LoadKey::Real);
    const double l_low = st.machines[low].real_load();
    const double l_mid = st.machines[mid].real_load();
    if (l_low <= 0.25 * l_guess || l_mid + p > 1.75 * l_guess) return low;
    return mid;
}

}  // namespace

ScheduleOutcome graham(const JobSequence& seq, int m, const RunOptions& opts) {
    if (m < 1) throw std::invalid_argument("graham: m must be >= 1");
    SimulationState st = SimulationState::make(m, 0);
    st.record_trace = opts.record_trace;
    std::vector<int> assignment(seq.size(), -1);
    for (int t = 0; t < seq.size(); ++t) {
        st.t = t + 1;
        const Job job = seq.set().job(seq.job_at(t));
        const int target = kth_least_loaded(st, 1, Pool::All, LoadKey::Real);
        assign(st, job, target);
        assignment[job.id] = target;
    }
    return finish(st, std::move(assignment));
}

ScheduleOutcome lightload(const JobSequence& seq, int m, double l_guess,
                          const RunOptions& opts) {
    if (m < 1) throw std::invalid_argument("lightload: m must be >= 1");
    if (l_guess < 0.0) throw std::invalid_argument("lightload: guess must be >= 0");
    SimulationState st = SimulationState::make(m, 0);
    st.record_trace = opts.record_trace;
    std::vector<int> assignment(seq.size(), -1);
    for (int t = 0; t < seq.size(); ++t) {
        st.t = t + 1;
        const Job job = seq.set().job(seq.job_at(t));
        const int target = lightload_target(st, m, job.size, l_guess);
        assign(st, job, target);
        assignment[job.id] = target;
    }
    return finish(st, std::move(assignment));
}

namespace {

ScheduleOutcome lightload_sampled(const JobSequence& seq, int m,
                                  const AlgoParams& params,
                                  const RunOptions& opts, bool inflate) {
    if (m < 3) throw std::invalid_argument("lightload_rom: m must be >= 3");
    const int n_decl = opts.declared_n.value_or(seq.size());
    if (n_decl < seq.size())
        throw std::invalid_argument("declared n smaller than the sequence");
    // Zero-padding the sequence to a multiple of four puts the quarter
    // boundary at ceil(n/4); the pad jobs never fall inside the quarter.
    const int quarter = (n_decl + 3) / 4;
    const double delta = params.delta(m);

    SimulationState st = SimulationState::make(m, 0);
    st.record_trace = opts.record_trace;
    std::vector<int> assignment(seq.size(), -1);
    KahanAccum prefix;
    double prefix_max = 0.0;
    double guess = 0.0;
    for (int t = 0; t < seq.size(); ++t) {
        st.t = t + 1;
        const Job job = seq.set().job(seq.job_at(t));
        int target;
        if (t < quarter) {
            target = kth_least_loaded(st, 1, Pool::All, LoadKey::Real);
            prefix.add(job.size);
            prefix_max = std::max(prefix_max, job.size);
        } else {
            if (t == quarter) {
                const double l_quarter =
                    4.0 * prefix.value() / static_cast<double>(m);
                guess = inflate ? l_quarter / (1.0 - delta)
                                : std::max(l_quarter, prefix_max);
            }
            target = lightload_target(st, m, job.size, guess);
        }
        assign(st, job, target);
        assignment[job.id] = target;
    }
    return finish(st, std::move(assignment));
}

}  // namespace

ScheduleOutcome lightload_rom(const JobSequence& seq, int m,
                              const AlgoParams& params, const RunOptions& opts) {
    return lightload_sampled(seq, m, params, opts, true);
}

ScheduleOutcome lightload_bpre(const JobSequence& seq, int m,
                               const AlgoParams& params, const RunOptions& opts) {
    return lightload_sampled(seq, m, params, opts, false);
}

// ---- The critical-job scheduler ----------------------------------------------

namespace {

class CriticalJobRun {
public:
    CriticalJobRun(const JobSequence& seq, int m, const AlgoParams& params,
                   const RunOptions& opts)
        : seq_(seq), m_(m), opts_(opts) {
        n_decl_ = opts.declared_n.value_or(seq.size());
        if (n_decl_ < seq.size())
            throw std::invalid_argument("declared n smaller than the sequence");
        if (n_decl_ > m_ && m_ < 3)
            throw std::invalid_argument(
                "critical-job scheduler needs m >= 3 when n > m");
        small_case_ = n_decl_ <= m_;
        delta_ = small_case_ ? 0.0 : params.delta(m_);
        reserve_cnt_ = small_case_ ? 0 : params.reserve_count(m_);
        sample_len_ =
            small_case_ ? 0
                        : static_cast<int>(std::floor(
                              delta_ * delta_ * static_cast<double>(n_decl_)));
        st_ = SimulationState::make(m_, reserve_cnt_);
        st_.record_trace = opts.record_trace;
        assignment_.assign(seq.size(), -1);
        sampled_machine_.assign(seq.size(), -1);
        for (int i = m_ - reserve_cnt_; i < m_; ++i) empty_reserves_.insert(i);
        if (opts_.audit) init_audit();
    }

    SecretaryResult run() {
        for (int t = 0; t < seq_.size(); ++t) {
            st_.t = t + 1;
            const Job job = seq_.set().job(seq_.job_at(t));
            step(job);
            if (opts_.audit) audit_step();
        }
        SecretaryResult res;
        res.machines = st_.machines;
        res.table = table_;
        res.outcome = finish(st_, std::move(assignment_));
        if (!res.outcome.switch_time && switched_at_)
            res.outcome.switch_time = switched_at_;
        res.sample_len = sample_len_;
        res.reserve_count = reserve_cnt_;
        res.delta = delta_;
        res.B = B_;
        res.l_hat = l_hat_;
        res.degenerate_b = degenerate_b_;
        res.initial_choice = initial_choice_;
        if (opts_.audit) {
            audit_.steps = seq_.size();
            res.audit = audit_;
        }
        return res;
    }

private:
    void step(const Job& job) {
        const int t = st_.t;
        if (small_case_) {
            place_plain(job, t - 1);  // its own empty machine
            return;
        }
        if (t <= sample_len_) {
            const int target = kth_least_loaded(st_, 1, Pool::Principal, LoadKey::Real);
            place_plain(job, target);
            sampled_machine_[job.id] = target;
            return;
        }
        if (t == sample_len_ + 1) decide();
        if (st_.strategy == Strategy::Critical) critical_step(job);
        else least_loaded_step(job);
    }

    void decide() {
        const auto est = sampling_estimates(seq_, m_, sample_len_, delta_);
        l_hat_ = est.l_hat;
        B_ = est.B;
        if (B_ <= 0.0) {
            // Nothing but zero jobs sampled (or an empty sample): against
            // B = 0 every positive job would count as huge. Fall back to
            // plain greedy on the principal machines.
            degenerate_b_ = true;
            st_.strategy = Strategy::LeastLoaded;
            switched_at_ = st_.t;
            initial_choice_ = Strategy::LeastLoaded;
            return;
        }
        table_ = build_class_table(seq_, m_, sample_len_, B_, delta_);
        // Sampled jobs can be classified only now that B is known.
        for (int id = 0; id < static_cast<int>(sampled_machine_.size()); ++id) {
            const int machine = sampled_machine_[id];
            if (machine < 0) continue;
            const auto cls = classify(seq_.set().sizes[id], B_, delta_);
            if (cls.kind == JobKind::Medium) ++st_.machines[machine].medium_count;
            else if (cls.kind == JobKind::Big) ++st_.machines[machine].big_count;
        }
        if (table_.weighted_target() > static_cast<long long>(m_)) {
            st_.strategy = Strategy::LeastLoaded;
            switched_at_ = st_.t;
            initial_choice_ = Strategy::LeastLoaded;
            return;
        }
        preparation();
    }

    // -- Preparation ------------------------------------------------------------

    SizeClass* pick_unsaturated(bool medium_only) {
        SizeClass* best = nullptr;
        for (auto& cls : table_.classes) {  // ascending size; ties fall small
            if (medium_only && !cls.medium_range()) continue;
            if (!cls.unsaturated()) continue;
            if (!best || cls.c_prime < best->c_prime) best = &cls;
        }
        return best;
    }

    void place_placeholder(int machine, SizeClass& cls) {
        add_placeholder(st_, machine, cls.rounded);
        placeholder_sites_[cls.exponent].insert(machine);
        auto& mach = st_.machines[machine];
        if (cls.medium_range()) ++mach.medium_count;
        else ++mach.big_count;
        ++cls.c_prime;
        placeholder_mass_ += cls.rounded;
    }

    int least_prepared_principal() const {
        int best = -1;
        for (int i = 0; i < m_ - reserve_cnt_; ++i) {
            const auto& mach = st_.machines[i];
            if (mach.medium_count > 0 || mach.big_count > 0) continue;
            if (best < 0 ||
                mach.anticipated_load() < st_.machines[best].anticipated_load())
                best = i;
        }
        return best;
    }

    void preparation() {
        if (opts_.audit) audit_preparation_entry();

        // Machines that sampled a lone medium job get a second medium slot.
        for (int i = 0; i < m_ - reserve_cnt_; ++i) {
            if (st_.machines[i].medium_count != 1) continue;
            SizeClass* cls = pick_unsaturated(true);
            if (!cls)
                throw invariant_violation(
                    "preparation: no unsaturated medium class for pairing");
            place_placeholder(i, *cls);
        }

        int m_empty = 0;
        for (int i = 0; i < m_ - reserve_cnt_; ++i) {
            const auto& mach = st_.machines[i];
            if (mach.medium_count == 0 && mach.big_count == 0) ++m_empty;
        }
        if (opts_.audit) audit_m_empty(m_empty);

        // Big singletons and medium pairs for the still-empty machines.
        struct RepElem {
            double total;
            bool pair;
            int e1, e2;
        };
        std::vector<RepElem> rep;
        while (static_cast<int>(rep.size()) < m_empty) {
            SizeClass* first = pick_unsaturated(false);
            if (!first) break;
            ++first->c_prime;
            if (first->medium_range()) {
                SizeClass* second = pick_unsaturated(true);
                if (!second) {
                    // The class below the small/medium cut seeds its counter
                    // with small jobs, which can leave an odd medium budget
                    // with no partner. Undo the pick and stop preparing.
                    --first->c_prime;
                    break;
                }
                ++second->c_prime;
                rep.push_back({first->rounded + second->rounded, true,
                               std::max(first->exponent, second->exponent),
                               std::min(first->exponent, second->exponent)});
            } else {
                rep.push_back({first->rounded, false, first->exponent, 0});
            }
        }
        std::sort(rep.begin(), rep.end(), [](const RepElem& a, const RepElem& b) {
            if (a.total != b.total) return a.total > b.total;
            if (a.pair != b.pair) return !a.pair;  // singletons first
            if (a.e1 != b.e1) return a.e1 > b.e1;
            return a.e2 > b.e2;
        });
        for (const auto& elem : rep) {
            const int target = least_prepared_principal();
            if (target < 0)
                throw invariant_violation("preparation: ran out of empty machines");
            place_placeholder(target, table_.at(elem.e1));
            if (elem.pair) place_placeholder(target, table_.at(elem.e2));
        }
        if (opts_.audit) audit_preparation_exit();
        prep_done_ = true;
    }

    // -- Per-job strategies -------------------------------------------------------

    void critical_step(const Job& job) {
        const auto cls = classify(job.size, B_, delta_);
        if (cls.kind == JobKind::Small) {
            place_counted(job,
                          kth_least_loaded(st_, 1, Pool::Principal, LoadKey::Anticipated));
            return;
        }
        if (table_.contains(cls.exponent)) {
            auto sites = placeholder_sites_.find(cls.exponent);
            if (sites != placeholder_sites_.end() && !sites->second.empty()) {
                replace_on(job, *sites->second.begin(), cls);
                return;
            }
        }
        if (cls.kind == JobKind::Medium && !single_medium_reserves_.empty()) {
            const int machine = *single_medium_reserves_.begin();
            single_medium_reserves_.erase(single_medium_reserves_.begin());
            place_critical(job, machine, cls);
            return;
        }
        if (!empty_reserves_.empty()) {
            const int machine = *empty_reserves_.begin();
            empty_reserves_.erase(empty_reserves_.begin());
            place_critical(job, machine, cls);
            if (cls.kind == JobKind::Medium) single_medium_reserves_.insert(machine);
            return;
        }
        // No placeholder and no reserve slot: the run fails, switches for
        // good and routes this very job through the least-loaded rule.
        st_.strategy = Strategy::LeastLoaded;
        st_.failed_at = st_.t;
        switched_at_ = st_.t;
        least_loaded_step(job);
        if (opts_.audit) audit_fail();
    }

    void least_loaded_step(const Job& job) {
        if (!degenerate_b_ && job.size > B_)
            place_counted(job, kth_least_loaded(st_, 1, Pool::Reserve, LoadKey::Real));
        else
            place_counted(job, kth_least_loaded(st_, 1, Pool::Principal, LoadKey::Real));
    }

    // -- Placement helpers ----------------------------------------------------------

    void place_plain(const Job& job, int machine) {
        assign(st_, job, machine);
        assignment_[job.id] = machine;
    }

    // Placement that also maintains the per-class scheduled counters.
    void place_counted(const Job& job, int machine) {
        assign(st_, job, machine);
        assignment_[job.id] = machine;
        note_scheduled(job);
    }

    void place_critical(const Job& job, int machine, const JobClassification& cls) {
        assign(st_, job, machine);
        assignment_[job.id] = machine;
        auto& mach = st_.machines[machine];
        if (cls.kind == JobKind::Medium) ++mach.medium_count;
        else ++mach.big_count;
        note_scheduled(job);
    }

    void replace_on(const Job& job, int machine, const JobClassification& cls) {
        assign_replacing(st_, job, machine, cls.rounded);
        assignment_[job.id] = machine;
        // One placeholder of the class turns into one real job: machine
        // medium/big counts and the class counter stay as they are.
        const auto& ph = st_.machines[machine].placeholders;
        if (std::find(ph.begin(), ph.end(), cls.rounded) == ph.end())
            placeholder_sites_[cls.exponent].erase(machine);
    }

    void note_scheduled(const Job& job) {
        if (B_ <= 0.0 || job.size <= 0.0) return;
        const int e = rounding_exponent(job.size, delta_);
        if (table_.contains(e)) ++table_.at(e).c_prime;
        else if (ipow1p(delta_, e) > B_) ++beyond_table_scheduled_;
    }

    // -- Audit ------------------------------------------------------------------------

    void init_audit() {
        if (opts_.declared_n && *opts_.declared_n != seq_.size())
            throw std::invalid_argument("audit requires declared n == delivered n");
        L_full_ = seq_.set().total() / static_cast<double>(m_);
        pmax_full_ = seq_.set().max_size();
        tol_ = 1e-9 * std::max(1.0, L_full_ + pmax_full_);
        audit_.mass_checks_applicable = delta_ * delta_ <= 0.5;
        if (reserve_cnt_ > 0) {
            const double principal_frac =
                static_cast<double>(m_) / static_cast<double>(m_ - reserve_cnt_);
            audit_.shape_checks_applicable =
                principal_frac * delta_ * delta_ < p_small_frac();
        }
    }

    void violation(const std::string& what) {
        audit_.violations.push_back("t=" + std::to_string(st_.t) + ": " + what);
        throw invariant_violation(audit_.violations.back());
    }

    void audit_step() {
        KahanAccum real_sum, anticipated_sum;
        for (const auto& mach : st_.machines) {
            double ph = 0.0;
            for (double p : mach.placeholders) ph += p;
            if (std::abs(mach.anticipated_load() - (mach.real_load() + ph)) > tol_)
                violation("anticipated load != real load + placeholders");
            real_sum.add(mach.real_load());
            anticipated_sum.add(mach.anticipated_load());
        }
        if (std::abs(real_sum.value() - st_.assigned_total.value()) > tol_)
            violation("real load sum != sum of assigned job sizes");
        const double avg_anticipated = anticipated_sum.value() / m_;
        if (avg_anticipated > L_full_ + 2.0 * pmax_full_ + tol_)
            violation("average anticipated load above L + 2 p_max");
        if (audit_.mass_checks_applicable && prep_done_ &&
            avg_anticipated > (1.0 + 1.0 / (delta_ * delta_)) * L_full_ + tol_)
            violation("average anticipated load above (1 + delta^-2) L");
        if (st_.strategy == Strategy::Critical && prep_done_ &&
            audit_.shape_checks_applicable)
            audit_shapes();
    }

    void audit_shapes() {
        int lone_medium_reserves = 0;
        for (int i = 0; i < m_; ++i) {
            const auto& mach = st_.machines[i];
            const int med = mach.medium_count, big = mach.big_count;
            if (mach.role == MachineRole::Principal) {
                const bool ok = (med == 0 && big == 0) || (med == 0 && big == 1) ||
                                (med == 2 && big == 0);
                if (!ok)
                    violation("principal machine holds neither nothing, one big "
                              "nor two medium critical jobs");
            } else {
                if (big > 1 || med > 2 || (big == 1 && med > 0))
                    violation("reserve machine overfilled with critical jobs");
                if (med == 1 && big == 0) ++lone_medium_reserves;
            }
        }
        if (lone_medium_reserves > 1)
            violation("more than one reserve machine with a lone medium job");
    }

    void audit_preparation_entry() {
        int with_critical = 0;
        for (int i = 0; i < m_ - reserve_cnt_; ++i) {
            const auto& mach = st_.machines[i];
            if (mach.medium_count > 0 || mach.big_count > 0) ++with_critical;
        }
        if (with_critical > 2.0 * delta_ * delta_ * m_ + 1e-9)
            violation("more than 2 delta^2 m machines sampled critical jobs");
    }

    void audit_m_empty(int m_empty) {
        const double floor_bound = (1.0 - delta_ - 2.0 * delta_ * delta_) * m_ - 1.0;
        if (static_cast<double>(m_empty) < floor_bound - 1e-9)
            violation("m_empty below (1 - delta - 2 delta^2) m - 1");
    }

    void audit_preparation_exit() {
        if (!audit_.mass_checks_applicable) return;
        if (placeholder_mass_ > static_cast<double>(m_) * l_hat_ + tol_)
            violation("placeholder mass above m * L_hat");
    }

    void audit_fail() {
        bool all_principal_critical = true;
        for (int i = 0; i < m_ - reserve_cnt_; ++i) {
            const auto& mach = st_.machines[i];
            if (!(mach.big_count >= 1 || mach.medium_count >= 2)) {
                all_principal_critical = false;
                break;
            }
        }
        if (!all_principal_critical || !audit_.shape_checks_applicable) {
            ++audit_.fail_recorded_only;
            return;
        }
        // Weighted count of scheduled critical jobs incl. placeholders, the
        // failing job included (it was just rerouted). Jobs rounded beyond B
        // carry weight 1: they are big but belong to no table class.
        double weighted = 0.0;
        for (const auto& cls : table_.classes)
            weighted += cls.w * static_cast<double>(cls.c_prime);
        const double points = weighted + static_cast<double>(beyond_table_scheduled_);
        ++audit_.fail_points_checked;
        if (points <= static_cast<double>(m_) + 1e-9)
            violation("FAIL-time weighted job count not above m");
        if (beyond_table_scheduled_ == 0) {
            ++audit_.fail_literal_checked;
            if (weighted <= static_cast<double>(m_) + 1e-9)
                violation("FAIL-time class-weighted count not above m");
        }
    }

    // -- Members -------------------------------------------------------------------

    const JobSequence& seq_;
    int m_;
    RunOptions opts_;
    int n_decl_ = 0;
    int sample_len_ = 0;
    int reserve_cnt_ = 0;
    double delta_ = 0.0;
    bool small_case_ = false;

    SimulationState st_;
    std::vector<int> assignment_;
    std::vector<int> sampled_machine_;  // job id -> machine, sampling phase only
    double B_ = 0.0, l_hat_ = 0.0;
    bool degenerate_b_ = false;
    ClassTable table_;
    std::map<int, std::set<int>> placeholder_sites_;
    std::set<int> empty_reserves_, single_medium_reserves_;
    long long beyond_table_scheduled_ = 0;
    double placeholder_mass_ = 0.0;
    bool prep_done_ = false;
    std::optional<int> switched_at_;
    Strategy initial_choice_ = Strategy::Critical;

    AuditReport audit_;
    double L_full_ = 0.0, pmax_full_ = 0.0, tol_ = 1e-9;
};

}  // namespace

SecretaryResult secretary_schedule(const JobSequence& seq, int m,
                                   const AlgoParams& params,
                                   const RunOptions& opts) {
    CriticalJobRun run(seq, m, params, opts);
    return run.run();
}

}  // namespace romsched
