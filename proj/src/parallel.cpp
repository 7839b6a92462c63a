// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace cubedeg::detail {

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t begin, std::size_t end)>& body)
{
    if (count == 0) return;
    const std::size_t chunks = std::min<std::size_t>(std::max(workers, 1u), count);
    if (chunks == 1) {
        body(0, count);
        return;
    }

    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks - 1);
    const auto run = [&](std::size_t c) {
        const std::size_t begin = count * c / chunks;
        const std::size_t end = count * (c + 1) / chunks;
        try {
            body(begin, end);
        } catch (...) {
            errors[c] = std::current_exception();
        }
    };
    for (std::size_t c = 1; c < chunks; ++c) threads.emplace_back(run, c);
    run(0);
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

} // namespace cubedeg::detail
