#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fullrank {

/// Effective worker count: `jobs` ≥ 1, or hardware concurrency when jobs ≤ 0.
inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(worker, workers) on `workers` threads and rethrows the first
/// exception. With one worker the body runs inline.
template <typename Body>
void run_workers(int workers, Body&& body) {
    workers = std::max(1, workers);
    if (workers == 1) {
        body(0, 1);
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    body(w, workers);
                } catch (...) {
                    std::lock_guard lock(guard);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace fullrank
