// Copyright 2026 The asg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Deterministic bucketed evaluation.
//
// Work is split into buckets whose boundaries never depend on the worker
// count. Each bucket is computed independently and the caller reduces the
// results in ascending bucket order, so the output is bit-identical for any
// number of workers.

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace asg {

template <class T, class Fn>
std::vector<T> map_buckets(std::size_t bucket_count, unsigned workers, Fn&& compute) {
    std::vector<T> results(bucket_count);
    if (bucket_count == 0) return results;
    unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(bucket_count)));
    if (threads == 1) {
        for (std::size_t i = 0; i < bucket_count; ++i) results[i] = compute(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= bucket_count) return;
            try {
                results[i] = compute(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(bucket_count);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

/// Exact, order-independent sum of finite doubles.
///
/// Every double is an integer multiple of 2^-1074, so the running total is
/// kept as a big integer in those units. Merging accumulators is exact.
class ExactFloatSum {
   public:
    void add(double x);
    ExactFloatSum& operator+=(const ExactFloatSum& other) {
        units_ += other.units_;
        return *this;
    }
    /// Truncated towards zero; identical for identical contents.
    double value() const;
    mpq_class exact() const;

   private:
    mpz_class units_ = 0;
};

}  // namespace asg
