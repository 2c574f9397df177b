/*
   Copyright 2026 The lehmer-ff Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace lehmer_ff {

/// Runs fn(0), ..., fn(shards - 1) on up to `workers` threads and returns the
/// results in shard order, so the merged output never depends on scheduling.
/// The first exception (in shard order) is rethrown after all workers stop.
template <class Result, class Fn>
std::vector<Result> run_sharded(std::size_t shards, unsigned workers, Fn&& fn)
{
    std::vector<std::optional<Result>> slots(shards);
    std::vector<std::exception_ptr> errors(shards);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < shards;) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), shards);
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<Result> out;
    out.reserve(shards);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

}  // namespace lehmer_ff
