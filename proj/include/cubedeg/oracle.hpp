// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_ORACLE_HPP
#define CUBEDEG_ORACLE_HPP

#include "cubedeg/expr.hpp"
#include "cubedeg/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>

// Brute-force degree references for low dimensions. These use plain double
// point evaluation only and share nothing with refine_cov / deg_rec, so they
// can serve as independent ground truth.
namespace cubedeg::oracle {

struct WindingConfig {
    std::size_t samples_per_edge = 256;
    unsigned max_rounds = 20;  // bisection depth allowed per initial segment
    double max_angle_step = std::numbers::pi / 2.0;
};

// (sign f(b) - sign f(a)) / 2 for a scalar function of x1.
// Throws ZeroAtEndpoint when f vanishes at a or b.
std::int64_t degree_1d(const FunctionSystem& fs, double a, double b);

// Turns of f/|f| along the counterclockwise boundary of a 2-box.
// Throws SampleHitZero or CannotResolve instead of guessing.
std::int64_t winding_number_2d(const FunctionSystem& fs, const NBox& box, const WindingConfig& cfg = {});

// degree_1d or winding_number_2d depending on the dimension.
std::int64_t low_dim_degree(const FunctionSystem& fs, const NBox& box, const WindingConfig& cfg = {});

// (f, g)(x, y) = (f(x), g(y)) with g's variables renumbered after f's.
FunctionSystem product_system(const FunctionSystem& f, const FunctionSystem& g);
NBox product_box(const NBox& a, const NBox& b);

struct Factor {
    FunctionSystem fs;
    NBox box;
};

// deg(f x g, B1 x B2) = deg(f, B1) * deg(g, B2); each factor has dimension 1 or 2.
std::int64_t product_degree(const FunctionSystem& f1, const NBox& b1, const FunctionSystem& f2, const NBox& b2,
                            const WindingConfig& cfg = {});
std::int64_t product_degree(std::span<const Factor> factors, const WindingConfig& cfg = {});

} // namespace cubedeg::oracle

#endif
