// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_DEGREE_HPP
#define CUBEDEG_DEGREE_HPP

#include "cubedeg/expr.hpp"
#include "cubedeg/geometry.hpp"
#include "cubedeg/signlist.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cubedeg {

// Component position (1-based within the current sign vectors) and sign used
// to select boxes at one recursion level.
struct Pivot {
    std::size_t position = 1;
    Sign sign = Sign::Plus;

    friend bool operator==(const Pivot&, const Pivot&) = default;
};

// Number of entries whose vector has `p.sign` at `p.position`.
std::size_t count_selected(const SignList& list, const Pivot& p) noexcept;

// The pivot selecting the fewest entries among those selecting at least one;
// ties go to the smallest position, then Plus before Minus. Returns (1, +)
// for an empty list.
Pivot choose_pivot(const SignList& list);

// 0-dimensional case: half the sum of orientation * sign. Throws
// MalformedList if the sum is odd or a vector is not a single non-Zero sign.
std::int64_t deg_base(const SignList& list);

// Faces of the selected boxes, cut against the non-selected ones. Every piece
// lying inside a non-selected box S inherits S's vector with position
// `position` (1-based) removed; the first such S in list order wins. Pieces
// touching the non-selected boxes only in lower dimension are dropped.
SignList build_faces(const SignList& selected, const SignList& nonselected, std::size_t position,
                     unsigned workers = 1);

struct LevelStats {
    std::size_t dim = 0;
    std::size_t entries = 0;
    std::size_t selected = 0;
    std::size_t nonselected = 0;
    std::optional<Pivot> pivot;         // unset at the base level or for an empty list
    std::size_t dropped_component = 0;  // original index of the component removed
    std::size_t faces = 0;              // size of the list handed to the next level
};

struct DegOptions {
    // Forces the pivot of the first level; deeper levels always use choose_pivot.
    std::optional<Pivot> top_pivot;
    unsigned workers = 1;
};

// Degree from a sufficient sign list covering an oriented boundary. Purely
// combinatorial; no function evaluation happens here.
std::int64_t deg_rec(const SignList& list, const DegOptions& options = {},
                     std::vector<LevelStats>* levels = nullptr);

struct DegreeReport {
    std::int64_t degree = 0;
    std::size_t boundary_entries = 0;
    std::vector<LevelStats> levels;
    RefineStats refinement;
    double refine_ms = 0.0;
    double deg_ms = 0.0;
};

// deg(f, box, p): refines a sign covering of the boundary of `box` for f - p
// and reduces it with deg_rec. An empty `p` means the origin.
DegreeReport compute_degree(const FunctionSystem& fs, const NBox& box, std::span<const double> p = {},
                            const RefineLimits& limits = {}, const DegOptions& options = {});

} // namespace cubedeg

#endif
