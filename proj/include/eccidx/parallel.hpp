/*
Copyright 2026 The eccidx Authors

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
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace eccidx {

/// Worker count from ECCIDX_THREADS, else the hardware concurrency.
inline std::size_t default_parallelism() {
    if (const char* env = std::getenv("ECCIDX_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Splits [0, total) into contiguous chunks and maps each with fn(begin, end)
/// on up to `workers` threads. Results come back in chunk order, so merging
/// them is independent of the worker count. The first exception thrown by
/// any chunk is rethrown.
template <typename Result>
std::vector<Result> map_chunks(std::size_t total, std::size_t workers,
                               const std::function<Result(std::size_t, std::size_t)>& fn) {
    workers = std::max<std::size_t>(1, workers);
    const std::size_t chunks = std::max<std::size_t>(1, std::min(total, workers * 4));
    std::vector<Result> results(chunks);
    std::vector<std::exception_ptr> errors(chunks);
    auto bounds = [&](std::size_t c) { return std::pair{total * c / chunks, total * (c + 1) / chunks}; };
    auto run = [&](std::size_t c) {
        try {
            auto [b, e] = bounds(c);
            results[c] = fn(b, e);
        } catch (...) {
            errors[c] = std::current_exception();
        }
    };
    if (workers == 1) {
        for (std::size_t c = 0; c < chunks; ++c) run(c);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < std::min(workers, chunks); ++w)
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers) run(c);
            });
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace eccidx
