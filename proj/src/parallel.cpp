#include "romsched/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace romsched {

void parallel_for_indexed(long long count, int threads,
                          const std::function<void(long long)>& fn) {
    if (count <= 0) return;
    if (threads < 1) threads = 1;
    if (threads == 1 || count == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    const long long chunk = 8;
    auto worker = [&] {
        for (;;) {
            const long long start = next.fetch_add(chunk);
            if (start >= count) return;
            const long long end = std::min(start + chunk, count);
            for (long long i = start; i < end; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    const auto n_workers = std::min<long long>(threads, count);
    pool.reserve(n_workers);
    for (long long w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace romsched
