// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_SRC_PARALLEL_HPP
#define CUBEDEG_SRC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cubedeg::detail {

// Runs body(begin, end) over contiguous chunks of [0, count) on up to
// `workers` threads. If several chunks throw, the exception of the lowest
// chunk is rethrown, so failures are reported independently of scheduling.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t begin, std::size_t end)>& body);

} // namespace cubedeg::detail

#endif
