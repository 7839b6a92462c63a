// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_GEOMETRY_HPP
#define CUBEDEG_GEOMETRY_HPP

#include "cubedeg/interval.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cubedeg {

// Axis-aligned box in R^n. Degenerate coordinates are kept in place, so a
// k-box in R^n always has n coordinates of which k are non-degenerate.
class NBox {
public:
    NBox() = default;
    explicit NBox(std::vector<Interval> coords) : coords_(std::move(coords)) {}

    std::size_t ambient_dim() const noexcept { return coords_.size(); }
    // Number of non-degenerate coordinates.
    std::size_t dimension() const noexcept;
    double diameter() const noexcept;

    std::span<const Interval> coords() const noexcept { return coords_; }
    const Interval& operator[](std::size_t axis) const { return coords_[axis]; }
    Interval& operator[](std::size_t axis) { return coords_[axis]; }

    // Non-degenerate axes in increasing order.
    std::vector<std::size_t> free_axes() const;

    bool is_subset_of(const NBox& other) const noexcept;

    // Exact (bitwise endpoint) equality.
    friend bool operator==(const NBox&, const NBox&) = default;

private:
    std::vector<Interval> coords_;
};

std::ostream& operator<<(std::ostream& os, const NBox& box);

// Canonical order: lexicographic on (lo, hi) per coordinate.
bool canonical_less(const NBox& a, const NBox& b) noexcept;

struct OrientedBox {
    NBox box;
    int orientation = 1;  // +1 or -1

    OrientedBox opposite() const { return {box, -orientation}; }

    friend bool operator==(const OrientedBox&, const OrientedBox&) = default;
};

// The 2d oriented faces F_1^-, F_1^+, ..., F_d^-, F_d^+ of a d-box, indexed
// over its free axes j_1 < ... < j_d. F_i^+ carries orientation (-1)^(i+1) o
// and F_i^- carries (-1)^i o. Throws NoFaces for a 0-box.
std::vector<OrientedBox> faces(const OrientedBox& b);

// Halves along `axis` at the floating midpoint. Throws CannotSplit when the
// axis is degenerate or too thin to hold a representable midpoint.
std::pair<OrientedBox, OrientedBox> bisect(const OrientedBox& b, std::size_t axis);

// Widest free axis, ties broken towards the lowest index; nullopt for a 0-box.
std::optional<std::size_t> widest_axis(const NBox& b) noexcept;

// Dimension of a ∩ b, or nullopt when they are disjoint.
std::optional<std::size_t> intersection_dim(const NBox& a, const NBox& b) noexcept;

// Partitions `face` into same-orientation pieces so that every piece is either
// a subset of some element of `others` or meets each of them in dimension
// below dim(face). Cuts are placed at every endpoint of an element of `others`
// that overlaps `face` in full dimension, giving a grid that does not depend
// on the order of `others`.
std::vector<OrientedBox> split_against(const OrientedBox& face, std::span<const NBox* const> others);
std::vector<OrientedBox> split_against(const OrientedBox& face, std::span<const NBox> others);

} // namespace cubedeg

#endif
