#include "romsched/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "romsched/opt.hpp"
#include "romsched/parallel.hpp"
#include "romsched/rng.hpp"

namespace romsched {

double load_estimate(const JobSequence& seq, int m, double phi) {
    if (!(phi > 0.0 && phi <= 1.0))
        throw std::invalid_argument("load_estimate: phi must be in (0, 1]");
    if (m < 1) throw std::invalid_argument("load_estimate: m must be >= 1");
    const int k = static_cast<int>(std::floor(phi * seq.size()));
    if (k == 0) return 0.0;
    KahanAccum sum;
    for (int t = 0; t < k; ++t) sum.add(seq.size_at(t));
    return sum.value() / (phi * static_cast<double>(m));
}

std::map<int, long long> class_counts(const JobSequence& seq, double delta,
                                      double phi) {
    if (!(phi > 0.0 && phi <= 1.0))
        throw std::invalid_argument("class_counts: phi must be in (0, 1]");
    const int k = static_cast<int>(std::floor(phi * seq.size()));
    std::map<int, long long> counts;
    for (int t = 0; t < k; ++t) {
        const double p = seq.size_at(t);
        if (p <= 0.0) continue;
        ++counts[rounding_exponent(p, delta)];
    }
    return counts;
}

namespace {

bool applicability_gate(const JobSequence& seq, int m, const AlgoParams& params,
                        std::string& reason) {
    const JobSet& set = seq.set();
    if (set.n() <= m) {
        reason = "simple set (at most m jobs)";
        return false;
    }
    if (is_simple(set, m, params)) {
        reason = "simple set (R below threshold)";
        return false;
    }
    return true;
}

}  // namespace

StabilityReport check_stable(const JobSequence& seq, int m,
                             const AlgoParams& params) {
    StabilityReport rep;
    if (!applicability_gate(seq, m, params, rep.reason)) return rep;
    rep.applicable = true;
    rep.delta = params.delta(m);

    const double d = rep.delta;
    const int n = seq.size();
    const double phi = d * d;
    rep.sample_len = static_cast<int>(std::floor(phi * n));
    rep.prefix_convention_differs =
        static_cast<int>(std::ceil(phi * n)) != rep.sample_len;
    rep.L = avg_load(seq.set(), m);

    const auto est = sampling_estimates(seq, m, rep.sample_len, d);
    rep.l_hat = est.l_hat;
    rep.B = est.B;

    rep.estimate_accurate =
        (1.0 - d) * rep.L <= rep.l_hat && rep.l_hat <= (1.0 + d) * rep.L;

    if (rep.B <= 0.0) {
        rep.reason = "degenerate sample (B = 0)";
        rep.counts_accurate = true;  // no classes exist
        int huge = 0;
        for (int t = 0; t < n; ++t)
            if (seq.size_at(t) > rep.B) ++huge;
        rep.huge_count = huge;
        rep.few_huge = huge <= static_cast<int>(std::ceil(d * m));
        rep.huge_spread = huge == 0;
        rep.capacity_margin = true;
        rep.core_stable = rep.estimate_accurate && rep.counts_accurate &&
                          rep.few_huge && rep.huge_spread;
        rep.stable = rep.core_stable && rep.capacity_margin;
        return rep;
    }

    ClassTable table = build_class_table(seq, m, rep.sample_len, rep.B, d);
    fill_true_counts(table, seq);
    rep.class_count = static_cast<int>(table.classes.size());
    const double m34 = std::pow(static_cast<double>(m), 0.75);

    rep.counts_accurate = true;
    for (const auto& cls : table.classes) {
        const auto n_p = *cls.n_true;
        if (!(cls.c() <= n_p &&
              static_cast<double>(n_p) <= static_cast<double>(cls.c()) + 2.0 * m34)) {
            rep.counts_accurate = false;
            break;
        }
    }

    int huge = 0, last_huge = 0;
    for (int t = 0; t < n; ++t) {
        if (seq.size_at(t) > rep.B) {
            ++huge;
            last_huge = t + 1;
        }
    }
    rep.huge_count = huge;
    if (huge > 0) rep.last_huge_time = last_huge;
    rep.few_huge = huge <= static_cast<int>(std::ceil(d * m));

    const auto large_cutoff = static_cast<long long>(
        std::floor((1.0 - d - 2.0 * d * d) * m / rep.class_count));
    rep.huge_spread = true;
    if (huge > 0) {
        std::map<int, long long> prefix;
        for (int t = 0; t < last_huge; ++t) {
            const double p = seq.size_at(t);
            if (p <= 0.0) continue;
            ++prefix[rounding_exponent(p, d)];
        }
        for (const auto& cls : table.classes) {
            if (*cls.n_true <= large_cutoff) continue;
            const auto it = prefix.find(cls.exponent);
            const long long seen = it == prefix.end() ? 0 : it->second;
            if (static_cast<double>(seen) >
                (1.0 - d * d * d) * static_cast<double>(*cls.n_true)) {
                rep.huge_spread = false;
                break;
            }
        }
    }

    rep.capacity_margin =
        d * d * d * static_cast<double>(large_cutoff) >=
        2.0 * static_cast<double>(rep.class_count) * m34;

    rep.core_stable = rep.estimate_accurate && rep.counts_accurate &&
                      rep.few_huge && rep.huge_spread;
    rep.stable = rep.core_stable && rep.capacity_margin;
    return rep;
}

ProbStabilityReport check_probabilistically_stable(const JobSequence& seq, int m,
                                                   const AlgoParams& params) {
    ProbStabilityReport rep;
    if (!applicability_gate(seq, m, params, rep.reason)) return rep;
    rep.applicable = true;
    rep.delta = params.delta(m);

    const double d = rep.delta;
    const int n = seq.size();
    const double phi = d * d;
    const int sample_len = static_cast<int>(std::floor(phi * n));
    rep.prefix_convention_differs =
        static_cast<int>(std::ceil(phi * n)) != sample_len;

    // S: the ceil(d^{-7/3}) largest jobs; ties resolved by job id.
    auto top_count =
        static_cast<long long>(std::ceil(std::pow(d, -7.0 / 3.0)));
    if (top_count > n) top_count = n;
    rep.top_set_size = static_cast<int>(top_count);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    const auto& sizes = seq.set().sizes;
    std::nth_element(ids.begin(), ids.begin() + (top_count - 1), ids.end(),
                     [&](int a, int b) {
                         if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
                         return a < b;
                     });
    std::vector<char> in_top(n, 0);
    rep.s_min = sizes[ids[0]];
    for (long long i = 0; i < top_count; ++i) {
        in_top[ids[i]] = 1;
        rep.s_min = std::min(rep.s_min, sizes[ids[i]]);
    }

    const double L = avg_load(seq.set(), m);
    const auto est = sampling_estimates(seq, m, sample_len, d);
    rep.estimate_accurate =
        (1.0 - d) * L <= est.l_hat && est.l_hat <= (1.0 + d) * L;

    rep.sample_hits_top = false;
    for (int t = 0; t < sample_len; ++t)
        if (in_top[seq.job_at(t)]) { rep.sample_hits_top = true; break; }

    rep.t_top = 0;
    for (int t = 0; t < n; ++t)
        if (in_top[seq.job_at(t)]) rep.t_top = t + 1;
    rep.top_not_last =
        static_cast<double>(rep.t_top) <=
        (1.0 - std::pow(d, 8.0 / 3.0)) * static_cast<double>(n);

    // Candidate classes P_hat: rounded sizes above p_small*max(s_min,(1-d)L).
    const double cut = p_small_frac() * std::max(rep.s_min, (1.0 - d) * L);
    std::map<int, long long> totals;   // n_p per exponent (all jobs)
    std::map<int, long long> sampled;  // n_{p, d^2}
    for (int t = 0; t < n; ++t) {
        const double p = seq.size_at(t);
        if (p <= 0.0) continue;
        const int e = rounding_exponent(p, d);
        ++totals[e];
        if (t < sample_len) ++sampled[e];
    }
    std::vector<int> candidates;
    for (const auto& [e, cnt] : totals) {
        (void)cnt;
        if (std::pow(1.0 + d, static_cast<double>(e)) > cut) candidates.push_back(e);
    }
    rep.candidate_classes = static_cast<int>(candidates.size());

    const double m34 = std::pow(static_cast<double>(m), 0.75);
    const double inv_phi = 1.0 / phi;
    rep.class_counts_tight = true;
    for (int e : candidates) {
        const auto it = sampled.find(e);
        const double n_hat = it == sampled.end() ? 0.0 : static_cast<double>(it->second);
        if (std::abs(inv_phi * n_hat - static_cast<double>(totals[e])) > m34 - 1.0) {
            rep.class_counts_tight = false;
            break;
        }
    }

    // Conditions 4 and 6 refer to the order-dependent class table.
    rep.medium_undersampled = true;
    rep.big_classes_spread = true;
    if (est.B > 0.0) {
        ClassTable table = build_class_table(seq, m, sample_len, est.B, d);
        for (const auto& cls : table.classes) {
            if (!cls.medium_range()) continue;
            const auto it = totals.find(cls.exponent);
            const long long n_p = it == totals.end() ? 0 : it->second;
            if (2 * cls.n_hat > n_p) {
                rep.medium_undersampled = false;
                break;
            }
        }
        const auto large_cutoff = static_cast<long long>(std::floor(
            (1.0 - d - 2.0 * d * d) * m /
            static_cast<double>(table.classes.size())));
        const int late_prefix = static_cast<int>(
            std::floor((1.0 - std::pow(d, 8.0 / 3.0)) * static_cast<double>(n)));
        std::map<int, long long> late_counts;
        for (int t = 0; t < late_prefix; ++t) {
            const double p = seq.size_at(t);
            if (p <= 0.0) continue;
            ++late_counts[rounding_exponent(p, d)];
        }
        for (int e : candidates) {
            if (totals[e] <= large_cutoff) continue;
            const auto it = late_counts.find(e);
            const long long seen = it == late_counts.end() ? 0 : it->second;
            if (static_cast<double>(seen) >
                (1.0 - d * d * d) * static_cast<double>(totals[e])) {
                rep.big_classes_spread = false;
                break;
            }
        }
    }

    rep.all = rep.estimate_accurate && rep.sample_hits_top &&
              rep.class_counts_tight && rep.medium_undersampled &&
              rep.top_not_last && rep.big_classes_spread;
    return rep;
}

namespace {

double log_choose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double md_binomial(long long K, double p) {
    if (K < 1) throw std::invalid_argument("md_binomial: K must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("md_binomial: p must be in (0, 1)");
    const auto k = static_cast<long long>(
                       std::floor(p * static_cast<double>(K))) + 1;
    const double log_pmf = log_choose(static_cast<double>(K), static_cast<double>(k)) +
                           static_cast<double>(k) * std::log(p) +
                           static_cast<double>(K - k) * std::log1p(-p);
    return 2.0 * static_cast<double>(k) * (1.0 - p) * std::exp(log_pmf);
}

double md_hypergeom_bruteforce(int n, int K, int draws) {
    if (n < 1 || n > 200)
        throw std::invalid_argument("md_hypergeom_bruteforce: need 1 <= n <= 200");
    if (K < 0 || K > n || draws < 0 || draws > n)
        throw std::invalid_argument("md_hypergeom_bruteforce: need 0 <= K, draws <= n");
    const double mean =
        static_cast<double>(draws) * static_cast<double>(K) / static_cast<double>(n);
    const double log_denom = log_choose(n, draws);
    const int lo = std::max(0, draws - (n - K));
    const int hi = std::min(K, draws);
    double md = 0.0;
    for (int x = lo; x <= hi; ++x) {
        const double log_pmf =
            log_choose(K, x) + log_choose(n - K, draws - x) - log_denom;
        md += std::exp(log_pmf) * std::abs(static_cast<double>(x) - mean);
    }
    return md;
}

MonteCarloEstimate nmd_monte_carlo(const JobSet& set, int m, double phi,
                                   long long trials, std::uint64_t seed,
                                   int threads) {
    if (trials < 1) throw std::invalid_argument("nmd_monte_carlo: trials must be >= 1");
    const double L = avg_load(set, m);
    if (L <= 0.0) throw std::invalid_argument("nmd_monte_carlo: average load is zero");
    auto shared = std::make_shared<const JobSet>(set);
    std::vector<double> values(trials, 0.0);
    parallel_for_indexed(trials, threads, [&](long long i) {
        const JobSequence seq =
            permute(shared, derive_seed(seed, static_cast<std::uint64_t>(i)));
        values[i] = std::abs(load_estimate(seq, m, phi) - L) / L;
    });
    KahanAccum sum;
    for (double v : values) sum.add(v);
    MonteCarloEstimate est;
    est.trials = trials;
    est.mean = sum.value() / static_cast<double>(trials);
    KahanAccum sq;
    for (double v : values) sq.add((v - est.mean) * (v - est.mean));
    if (trials > 1)
        est.se = std::sqrt(sq.value() / (static_cast<double>(trials - 1) *
                                         static_cast<double>(trials)));
    return est;
}

}  // namespace romsched
