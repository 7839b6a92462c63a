// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_FAMILIES_HPP
#define CUBEDEG_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace cubedeg {

// Built-in benchmark systems that scale with the dimension n.
//   Identity: f(x) = x.
//   Saddle:   f1 = x1^2 - x2^2 - ... - xn^2, fi = 2 x1 xi (i >= 2);
//             a single root at 0 of degree 2 for even n and 0 for odd n.
//   CubeRoot: componentwise cbrt of Saddle. Not Lipschitz at the root, but
//             every enclosure has the same sign as for Saddle.
enum class Family { Identity, Saddle, CubeRoot };

const char* to_string(Family f) noexcept;
std::optional<Family> family_from_name(std::string_view name) noexcept;

std::string family_expression(Family f, std::size_t n);

} // namespace cubedeg

#endif
