// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hetnet {

/// Worker count from HETNET_THREADS; unset or 0 means hardware concurrency.
inline unsigned thread_count()
{
    unsigned n = 0;
    if (char const* env = std::getenv("HETNET_THREADS")) {
        try {
            n = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            n = 0;
        }
    }
    if (n == 0) n = std::thread::hardware_concurrency();
    return std::max(1u, n);
}

/// Calls fn(i) for i in [0, n) on up to thread_count() workers. Work items
/// must write only to their own slot; the first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn)
{
    unsigned const workers =
        static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace hetnet
