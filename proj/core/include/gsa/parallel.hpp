// Copyright (c) 2026 gsa-toolkit developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gsa {

// Runs body(i) for i in [0, count) on up to `workers` threads.
//
// Work is handed out through a shared atomic counter, so the mapping of
// iteration index to thread is nondeterministic -- callers must write results
// into pre-allocated, index-addressed slots rather than appending to shared
// state. The first exception thrown by any iteration is captured and
// rethrown on the calling thread after all workers join.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    unsigned nthreads = workers;
    if (static_cast<std::size_t>(nthreads) > count)
        nthreads = static_cast<unsigned>(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::atomic<bool> failed{false};

    auto run = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) break;
            try {
                body(i);
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gsa
