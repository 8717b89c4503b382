#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace shiftlr {

// SHIFTLR_JOBS when set to a positive integer, else the hardware thread count.
int default_jobs();

// Applies fn to 0..n-1 on up to `jobs` threads; results keep index order.
// The first exception thrown by any task is rethrown after all threads join.
template <class R>
std::vector<R> parallel_map(std::size_t n, int jobs, const std::function<R(std::size_t)>& fn) {
    std::vector<R> out(n);
    const std::size_t workers = std::min<std::size_t>(n, jobs < 1 ? 1 : static_cast<std::size_t>(jobs));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace shiftlr
