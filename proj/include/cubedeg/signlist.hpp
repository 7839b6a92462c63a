// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_SIGNLIST_HPP
#define CUBEDEG_SIGNLIST_HPP

#include "cubedeg/expr.hpp"
#include "cubedeg/geometry.hpp"
#include "cubedeg/interval.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cubedeg {

// Certified signs of the active components over one box.
using SignVector = std::vector<Sign>;

// At least one non-Zero entry.
bool is_sufficient(const SignVector& v) noexcept;

std::string to_string(const SignVector& v);

struct SignEntry {
    OrientedBox box;
    SignVector signs;

    friend bool operator==(const SignEntry&, const SignEntry&) = default;
};

// A list (multiset) of oriented d-boxes with (d+1)-entry sign vectors.
// `active` records which original components the vector positions refer to.
struct SignList {
    std::vector<SignEntry> entries;
    std::size_t box_dim = 0;
    std::vector<std::size_t> active;

    std::size_t codomain_dim() const noexcept { return box_dim + 1; }
    bool empty() const noexcept { return entries.empty(); }
    std::size_t size() const noexcept { return entries.size(); }
};

bool is_sufficient(const SignList& list) noexcept;

// Orders entries by box (canonical_less), then orientation, then signs.
void sort_canonical(SignList& list);

// Entry i is the sign of the enclosure of active component i over `box`.
// A component whose evaluation leaves its domain is recorded as Zero.
SignVector sign_vector_for(const FunctionSystem& fs, const NBox& box);

// max_depth bounds how often any single coordinate of a boundary box may be
// halved; 60 halvings take a unit interval to about double resolution.
struct RefineLimits {
    unsigned max_depth = 60;
    std::size_t max_boxes = 10'000'000;
};

struct RefineStats {
    std::size_t boxes_created = 0;
    unsigned max_depth_used = 0;  // most halvings of one coordinate
};

// Sufficient sign list wrt. fs covering the oriented boundary of `domain`.
//
// Starts from faces(domain) and bisects, breadth-first along the widest free
// axis, every box whose sign vector is all Zero. Entries come back in
// canonical order, independent of `workers`. Throws Undecidable when the
// depth or box budget runs out: either 0 lies on f(boundary) or double
// precision cannot separate it.
SignList refine_cov(const FunctionSystem& fs, const OrientedBox& domain, const RefineLimits& limits = {},
                    unsigned workers = 1, RefineStats* stats = nullptr);

} // namespace cubedeg

#endif
