#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace cnr {

// Runs fn(i) for i in [0, count) on `workers` threads (0 = hardware).
inline void parallel_for(size_t count, int workers, const std::function<void(size_t)>& fn) {
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    int nt = std::min<int>(workers, static_cast<int>(count));
    threads.reserve(nt);
    for (int t = 0; t < nt; ++t) threads.emplace_back(run);
    for (auto& t : threads) t.join();
}

}  // namespace cnr
