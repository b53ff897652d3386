// Copyright 2026 The gmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GMAGIC_PARALLEL_HPP_
#define GMAGIC_PARALLEL_HPP_

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gmagic {

/// Worker count from the GMAGIC_WORKERS environment variable, else the
/// hardware concurrency (at least 1).
inline int default_workers() {
    if (const char *env = std::getenv("GMAGIC_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, n) across up to `workers` threads. Tasks must
/// write only to their own output slots; reductions stay deterministic by
/// folding the slots in index order afterwards.
template <typename Fn>
void parallel_for(int n, int workers, Fn &&fn) {
    if (n <= 0) return;
    if (workers > n) workers = n;
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread &t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace gmagic

#endif  // GMAGIC_PARALLEL_HPP_
