// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/geometry.hpp"

#include "cubedeg/error.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace cubedeg {

std::size_t NBox::dimension() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(coords_.begin(), coords_.end(), [](const Interval& c) { return !c.is_degenerate(); }));
}

double NBox::diameter() const noexcept
{
    double d = 0.0;
    for (const Interval& c : coords_) d = std::max(d, c.width());
    return d;
}

std::vector<std::size_t> NBox::free_axes() const
{
    std::vector<std::size_t> axes;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!coords_[i].is_degenerate()) axes.push_back(i);
    }
    return axes;
}

bool NBox::is_subset_of(const NBox& other) const noexcept
{
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!other.coords_[i].contains(coords_[i])) return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const NBox& box)
{
    for (std::size_t i = 0; i < box.ambient_dim(); ++i) {
        if (i != 0) os << 'x';
        os << box[i];
    }
    return os;
}

bool canonical_less(const NBox& a, const NBox& b) noexcept
{
    const auto ca = a.coords();
    const auto cb = b.coords();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].lo != cb[i].lo) return ca[i].lo < cb[i].lo;
        if (ca[i].hi != cb[i].hi) return ca[i].hi < cb[i].hi;
    }
    return false;
}

std::vector<OrientedBox> faces(const OrientedBox& b)
{
    const auto axes = b.box.free_axes();
    if (axes.empty()) throw Error(ErrorCode::NoFaces, "a 0-dimensional box has no faces");
    std::vector<OrientedBox> out;
    out.reserve(2 * axes.size());
    for (std::size_t k = 0; k < axes.size(); ++k) {
        const std::size_t axis = axes[k];
        // i = k + 1 is the 1-based position among free axes.
        const int plus_sign = (k % 2 == 0) ? 1 : -1;  // (-1)^(i+1)
        const Interval& c = b.box[axis];
        NBox lower = b.box;
        lower[axis] = Interval(c.lo);
        NBox upper = b.box;
        upper[axis] = Interval(c.hi);
        out.push_back({std::move(lower), -plus_sign * b.orientation});
        out.push_back({std::move(upper), plus_sign * b.orientation});
    }
    return out;
}

std::pair<OrientedBox, OrientedBox> bisect(const OrientedBox& b, std::size_t axis)
{
    const Interval& c = b.box[axis];
    const double mid = std::midpoint(c.lo, c.hi);
    if (!(c.lo < mid && mid < c.hi)) {
        throw Error(ErrorCode::CannotSplit, "axis " + std::to_string(axis + 1) + " cannot be bisected further");
    }
    OrientedBox left = b;
    OrientedBox right = b;
    left.box[axis].hi = mid;
    right.box[axis].lo = mid;
    return {std::move(left), std::move(right)};
}

std::optional<std::size_t> widest_axis(const NBox& b) noexcept
{
    std::optional<std::size_t> best;
    double best_width = 0.0;
    for (std::size_t i = 0; i < b.ambient_dim(); ++i) {
        const double w = b[i].hi - b[i].lo;
        if (w > best_width) {
            best_width = w;
            best = i;
        }
    }
    return best;
}

std::optional<std::size_t> intersection_dim(const NBox& a, const NBox& b) noexcept
{
    std::size_t dim = 0;
    for (std::size_t i = 0; i < a.ambient_dim(); ++i) {
        const double lo = std::max(a[i].lo, b[i].lo);
        const double hi = std::min(a[i].hi, b[i].hi);
        if (lo > hi) return std::nullopt;
        if (lo < hi) ++dim;
    }
    return dim;
}

std::vector<OrientedBox> split_against(const OrientedBox& face, std::span<const NBox* const> others)
{
    const auto axes = face.box.free_axes();
    const std::size_t dim = axes.size();

    // Per free axis: sorted, deduplicated breakpoints including the face's own ends.
    std::vector<std::vector<double>> grid(dim);
    for (std::size_t k = 0; k < dim; ++k) grid[k] = {face.box[axes[k]].lo, face.box[axes[k]].hi};

    bool any_cut = false;
    for (const NBox* other : others) {
        if (intersection_dim(face.box, *other) != dim) continue;
        for (std::size_t k = 0; k < dim; ++k) {
            const Interval& f = face.box[axes[k]];
            const Interval& o = (*other)[axes[k]];
            for (double v : {o.lo, o.hi}) {
                if (f.lo < v && v < f.hi) {
                    grid[k].push_back(v);
                    any_cut = true;
                }
            }
        }
    }
    if (!any_cut) return {face};

    std::size_t total = 1;
    for (auto& g : grid) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        total *= g.size() - 1;
    }

    std::vector<OrientedBox> pieces;
    pieces.reserve(total);
    std::vector<std::size_t> cell(dim, 0);
    for (std::size_t count = 0; count < total; ++count) {
        OrientedBox piece = face;
        for (std::size_t k = 0; k < dim; ++k) piece.box[axes[k]] = Interval(grid[k][cell[k]], grid[k][cell[k] + 1]);
        pieces.push_back(std::move(piece));
        // Odometer increment, last axis fastest.
        for (std::size_t k = dim; k-- > 0;) {
            if (++cell[k] + 1 < grid[k].size()) break;
            cell[k] = 0;
        }
    }
    return pieces;
}

std::vector<OrientedBox> split_against(const OrientedBox& face, std::span<const NBox> others)
{
    std::vector<const NBox*> ptrs;
    ptrs.reserve(others.size());
    for (const NBox& o : others) ptrs.push_back(&o);
    return split_against(face, std::span<const NBox* const>(ptrs));
}

} // namespace cubedeg
