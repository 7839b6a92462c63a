// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures for the unit and acceptance tests: seeded random problem
// generators whose degrees are known independently, a brute-force
// balancedness checker and a few list manipulations.

#ifndef CUBEDEG_TESTS_SUPPORT_HPP
#define CUBEDEG_TESTS_SUPPORT_HPP

#include "cubedeg/degree.hpp"
#include "cubedeg/expr.hpp"
#include "cubedeg/geometry.hpp"
#include "cubedeg/oracle.hpp"
#include "cubedeg/signlist.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cubedeg::testing {

using Rng = std::mt19937_64;

// Uniform k / denom for integer k in [lo * denom, hi * denom].
double dyadic(Rng& rng, double lo, double hi, int denom);

struct Problem1D {
    FunctionSystem fs;
    NBox box;
    std::string text;
};

// Univariate polynomial on an interval whose endpoints are not roots.
Problem1D random_problem_1d(Rng& rng);

struct Problem2D {
    FunctionSystem fs;
    NBox box;
    std::string description;
    std::optional<std::int64_t> expected;  // known by construction, if any
};

// Planar polynomial system whose boundary keeps |f| above `margin` on a
// dense sample and which the winding oracle resolves. Half of the draws are
// products of (z - r) and conj(z - r) factors, so nonzero degrees are common.
Problem2D random_problem_2d(Rng& rng, double margin = 1e-3);

// f x g x ... on the product box, with the product of the factor degrees.
struct ProductProblem {
    std::vector<oracle::Factor> factors;
    FunctionSystem fs;
    NBox box;
    std::int64_t expected;
};
ProductProblem random_product(Rng& rng, std::size_t total_dim);

// Random expression tree over x1..x_dim using every operator and
// elementary function; depth bounds the tree height.
Expr random_expr(Rng& rng, std::size_t dim, int depth);

// Every small oriented sub-face occurs as often as its opposite.
// Returns a description of the first imbalance, or nullopt.
std::optional<std::string> find_imbalance(const SignList& list);

struct Split {
    SignList selected;
    SignList nonselected;
};
Split split_by_pivot(const SignList& list, const Pivot& pivot);

// Bisects entry `index` along free axis `axis`; both halves keep the vector.
SignList with_entry_bisected(const SignList& list, std::size_t index, std::size_t axis);

// Appends (x, v) and (-x, w).
SignList with_pair(const SignList& list, const OrientedBox& x, const SignVector& v, const SignVector& w);

} // namespace cubedeg::testing

#endif
