#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace romsched {

enum class LogBase { Natural, Base2, Base10 };

// Target ratio constants of the critical-job scheduler.
inline double competitive_c() { return (1.0 + std::sqrt(13.0)) / 3.0; }
inline double p_small_frac() { return competitive_c() - 1.0; }   // ~0.535
inline double p_big_frac() { return competitive_c() / 2.0; }     // ~0.768

struct AlgoParams {
    LogBase log_base = LogBase::Natural;
    std::optional<double> delta_override;

    // Error margin delta(m) = 1/log(m). Natural log by default; any base
    // keeps 0 < delta < 1 only for large enough m, natural log from m >= 3.
    double delta(int m) const {
        if (delta_override) {
            if (!(*delta_override > 0.0 && *delta_override < 1.0))
                throw std::invalid_argument("delta override must be in (0, 1)");
            return *delta_override;
        }
        if (m < 2) throw std::invalid_argument("delta(m): m must be >= 2");
        double lg;
        switch (log_base) {
            case LogBase::Natural: lg = std::log(static_cast<double>(m)); break;
            case LogBase::Base2: lg = std::log2(static_cast<double>(m)); break;
            case LogBase::Base10: lg = std::log10(static_cast<double>(m)); break;
            default: lg = std::log(static_cast<double>(m));
        }
        const double d = 1.0 / lg;
        if (!(d > 0.0 && d < 1.0))
            throw std::invalid_argument(
                "delta(m) is not in (0, 1) for this machine count and log base");
        return d;
    }

    // ceil(delta*m) machines are held in reserve, capped so that at least
    // one principal machine remains (the cap binds only at m = 3).
    int reserve_count(int m) const {
        double d = delta(m);
        auto r = static_cast<int>(std::ceil(d * static_cast<double>(m)));
        if (r < 1) r = 1;
        if (r > m - 1) r = m - 1;
        return r;
    }
};

}  // namespace romsched
