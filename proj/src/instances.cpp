#include "romsched/instances.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "romsched/rng.hpp"

namespace romsched {

double lower_bound_c() { return (std::sqrt(73.0) - 1.0) / 6.0; }

namespace {

double big_size() { return 1.0 - lower_bound_c() / 3.0; }
double small_size() { return lower_bound_c() / 3.0; }

}  // namespace

JobSet gen_lower_bound(const LowerBoundSpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("gen_lower_bound: m must be >= 1");
    JobSet set;
    set.sizes.reserve(3 * spec.m + 1);
    for (int i = 0; i < spec.m; ++i) set.sizes.push_back(0.0);
    for (int i = 0; i < spec.m; ++i) set.sizes.push_back(big_size());
    for (int i = 0; i < spec.m; ++i) set.sizes.push_back(small_size());
    switch (spec.variant) {
        case LowerBoundSpec::Variant::Base: break;
        case LowerBoundSpec::Variant::ExtraNegligible: set.sizes.push_back(0.0); break;
        case LowerBoundSpec::Variant::ExtraBig: set.sizes.push_back(big_size()); break;
    }
    return set;
}

bool is_good_order(const JobSequence& seq, const LowerBoundSpec& spec) {
    if (spec.variant == LowerBoundSpec::Variant::Base)
        throw std::invalid_argument("is_good_order: undefined for the base variant");
    if (seq.size() != 3 * spec.m + 1)
        throw std::invalid_argument("is_good_order: sequence does not match spec");
    const double last = seq.size_at(seq.size() - 1);
    return spec.variant == LowerBoundSpec::Variant::ExtraNegligible
               ? last == 0.0
               : last == big_size();
}

JobSet gen_degenerate(int m, int n, double big) {
    if (m < 1 || n <= m)
        throw std::invalid_argument("gen_degenerate: need n > m >= 1");
    if (big < 0.0) throw std::invalid_argument("gen_degenerate: big must be >= 0");
    JobSet set;
    set.sizes.assign(n, 0.0);
    set.sizes[0] = big;
    return set;
}

JobSet gen_random(const RandomFamily& family, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
    Xoshiro256StarStar rng(seed);
    JobSet set;
    set.sizes.reserve(n);
    switch (family.kind) {
        case RandomFamily::Kind::Uniform: {
            if (!(family.lo >= 0.0 && family.hi >= family.lo))
                throw std::invalid_argument("gen_random: need 0 <= lo <= hi");
            for (int i = 0; i < n; ++i)
                set.sizes.push_back(rng.uniform(family.lo, family.hi));
            break;
        }
        case RandomFamily::Kind::Bimodal: {
            if (family.high_count < 0 || family.high_count > n)
                throw std::invalid_argument("gen_random: bad high_count");
            if (family.high < 0.0 || family.lo < 0.0)
                throw std::invalid_argument("gen_random: sizes must be >= 0");
            for (int i = 0; i < n; ++i)
                set.sizes.push_back(i < family.high_count ? family.high : family.lo);
            break;
        }
        case RandomFamily::Kind::ParetoLike: {
            if (!(family.alpha > 0.0 && family.x_min > 0.0))
                throw std::invalid_argument("gen_random: need alpha, x_min > 0");
            for (int i = 0; i < n; ++i) {
                const double u = 1.0 - rng.uniform01();  // in (0, 1]
                double x = family.x_min * std::pow(u, -1.0 / family.alpha);
                if (family.cap > 0.0) x = std::min(x, family.cap);
                set.sizes.push_back(x);
            }
            break;
        }
    }
    return set;
}

RandomFamily extremal_bimodal(int m) {
    RandomFamily family;
    family.kind = RandomFamily::Kind::Bimodal;
    family.lo = 0.0;
    family.high = 8.0 / 3.0;
    family.high_count = (3 * m) / 8;
    return family;
}

void save_instance(const JobSet& set, const std::string& path,
                   const std::string& sidecar_json) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_instance: cannot write " + path);
    char buf[64];
    for (double s : set.sizes) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", s);
        out << buf;
    }
    if (!out) throw std::runtime_error("save_instance: write failed for " + path);
    if (!sidecar_json.empty()) {
        std::ofstream side(path + ".json");
        if (!side) throw std::runtime_error("save_instance: cannot write sidecar");
        side << sidecar_json << "\n";
    }
}

JobSet load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_instance: cannot open " + path);
    JobSet set;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(line, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("load_instance: bad size at line " +
                                        std::to_string(lineno));
        }
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        if (pos != line.size() || v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("load_instance: bad size at line " +
                                        std::to_string(lineno));
        set.sizes.push_back(v);
    }
    return set;
}

}  // namespace romsched
