/**************************************************************************
 * parallel.hpp
 *
 * Copyright 2026 The mdscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/error.hpp"

namespace mds {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 32;

/// Global cap override from the MDS_BUDGET environment variable.
inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("MDS_BUDGET"); env != nullptr && *env != '\0') {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            fail(ErrorKind::InvalidArgument, std::string("MDS_BUDGET is not an integer: ") + env);
        }
    }
    return kDefaultBudget;
}

struct ExecPolicy {
    unsigned workers = 1;
    std::uint64_t budget = default_budget();
};

inline void check_budget(const BigInt& estimate, const ExecPolicy& policy, const std::string& what) {
    if (estimate > BigInt(policy.budget)) {
        fail(ErrorKind::BudgetExceeded,
             what + " needs " + estimate.str() + " steps, budget is " + std::to_string(policy.budget));
    }
}

/// Evaluates chunk_fn(0..chunks-1) on a pool of workers and folds the
/// per-chunk results in chunk order, so the total never depends on the
/// worker count or on scheduling.
template <class T, class ChunkFn, class Combine>
T parallel_reduce(std::size_t chunks, unsigned workers, T init, ChunkFn chunk_fn, Combine combine) {
    std::vector<T> partial(chunks, init);
    if (workers <= 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) partial[c] = chunk_fn(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto body = [&] {
            for (;;) {
                const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
                if (c >= chunks) return;
                try {
                    partial[c] = chunk_fn(c);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next.store(chunks);
                    return;
                }
            }
        };
        const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, chunks));
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(body);
        pool.clear();
        if (error) std::rethrow_exception(error);
    }
    T acc = init;
    for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
    return acc;
}

/// Splits [0, total) into roughly `chunks` contiguous ranges.
struct RangeSplit {
    std::uint64_t total;
    std::uint64_t chunks;

    RangeSplit(std::uint64_t total_, std::uint64_t wanted)
        : total(total_), chunks(total_ == 0 ? 0 : std::min<std::uint64_t>(std::max<std::uint64_t>(wanted, 1), total_)) {}

    std::uint64_t begin(std::uint64_t c) const { return total * c / chunks; }
    std::uint64_t end(std::uint64_t c) const { return total * (c + 1) / chunks; }
};

inline std::uint64_t chunks_for(unsigned workers) { return 64ull * std::max(1u, workers); }

}  // namespace mds
