// Copyright 2026 The qcap Authors
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

#ifndef QCAP_PARALLEL_H
#define QCAP_PARALLEL_H

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace qcap {

/// Evaluates fn(0..n-1) on up to `threads` workers. Results are stored by index,
/// so the output does not depend on scheduling.
template <typename Fn>
auto parallel_map(size_t n, size_t threads, Fn fn) -> std::vector<decltype(fn(size_t{}))> {
    using T = decltype(fn(size_t{}));
    std::vector<std::optional<T>> slots(n);
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; i++) {
            slots[i].emplace(fn(i));
        }
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> workers;
        for (size_t t = 0; t < std::min(threads, n); t++) {
            workers.emplace_back([&] {
                for (size_t i = next++; i < n; i = next++) {
                    try {
                        slots[i].emplace(fn(i));
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        for (auto &w : workers) {
            w.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    std::vector<T> out;
    out.reserve(n);
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

}  // namespace qcap

#endif
