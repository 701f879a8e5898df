/*
   Copyright 2026 The frobtest Authors

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

#ifndef FROBTEST_PARALLEL_HPP
#define FROBTEST_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace frobtest {

/// Applies fn to every item with up to `workers` concurrent tasks and returns results
/// in input order. workers = 0 picks the hardware concurrency.
template <class T, class Fn>
auto ordered_map(const std::vector<T>& items, Fn fn, unsigned workers = 0) {
    using R = decltype(fn(items.front()));
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<R> out;
    out.reserve(items.size());
    if (workers == 1 || items.size() < 2) {
        for (const auto& it : items) out.push_back(fn(it));
        return out;
    }
    for (std::size_t start = 0; start < items.size(); start += workers) {
        std::vector<std::future<R>> batch;
        for (std::size_t k = start; k < std::min(items.size(), start + workers); ++k)
            batch.push_back(std::async(std::launch::async, [&, k] { return fn(items[k]); }));
        for (auto& f : batch) out.push_back(f.get());
    }
    return out;
}

}  // namespace frobtest

#endif
