// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/error.hpp"
#include "cubedeg/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace cubedeg;

namespace {

NBox box(std::initializer_list<Interval> iv) { return NBox(std::vector<Interval>(iv)); }

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("dimension, diameter and free axes")
{
    const NBox b = box({{0, 1}, {2, 2}, {-1, 3}});
    CHECK(b.ambient_dim() == 3);
    CHECK(b.dimension() == 2);
    CHECK(b.diameter() == 4);
    CHECK(b.free_axes() == std::vector<std::size_t>{0, 2});
    CHECK(box({{1, 1}}).dimension() == 0);
    std::ostringstream os;
    os << box({{-1, 1}, {0, 0.5}});
    CHECK(os.str() == "[-1, 1]x[0, 0.5]");
}

TEST_CASE("faces of a square")
{
    const auto f = faces(OrientedBox{box({{-1, 1}, {-1, 1}}), 1});
    REQUIRE(f.size() == 4);
    // F1-, F1+, F2-, F2+
    CHECK(f[0].box == box({{-1, -1}, {-1, 1}}));
    CHECK(f[0].orientation == -1);
    CHECK(f[1].box == box({{1, 1}, {-1, 1}}));
    CHECK(f[1].orientation == 1);
    CHECK(f[2].box == box({{-1, 1}, {-1, -1}}));
    CHECK(f[2].orientation == 1);
    CHECK(f[3].box == box({{-1, 1}, {1, 1}}));
    CHECK(f[3].orientation == -1);
}

TEST_CASE("faces flip with orientation and index over free axes")
{
    const auto f = faces(OrientedBox{box({{0, 1}, {5, 5}, {0, 2}}), -1});
    REQUIRE(f.size() == 4);
    CHECK(f[0].box == box({{0, 0}, {5, 5}, {0, 2}}));
    CHECK(f[0].orientation == 1);
    CHECK(f[2].box == box({{0, 1}, {5, 5}, {0, 0}}));
    CHECK(f[2].orientation == -1);
    CHECK_THROWS_AS(faces(OrientedBox{box({{1, 1}, {2, 2}}), 1}), Error);
}

TEST_CASE("boundary of a boundary cancels")
{
    // Every 1-face of a 3-cube appears twice with opposite orientations.
    std::vector<OrientedBox> edges;
    for (const OrientedBox& f : faces(OrientedBox{box({{0, 1}, {0, 1}, {0, 1}}), 1})) {
        for (const OrientedBox& e : faces(f)) edges.push_back(e);
    }
    CHECK(edges.size() == 24);
    for (const OrientedBox& e : edges) {
        const auto same = std::count(edges.begin(), edges.end(), e);
        const auto opposite = std::count(edges.begin(), edges.end(), e.opposite());
        CHECK(same == 1);
        CHECK(opposite == 1);
    }
}

TEST_CASE("bisection")
{
    const auto [lo, hi] = bisect(OrientedBox{box({{0, 1}, {0, 4}}), -1}, 1);
    CHECK(lo.box == box({{0, 1}, {0, 2}}));
    CHECK(hi.box == box({{0, 1}, {2, 4}}));
    CHECK(lo.orientation == -1);
    CHECK(hi.orientation == -1);
    CHECK_THROWS_AS(bisect(OrientedBox{box({{0, 1}, {3, 3}}), 1}, 1), Error);
    const double a = 1.0;
    const double b = std::nextafter(1.0, 2.0);
    CHECK_THROWS_AS(bisect(OrientedBox{box({{a, b}}), 1}, 0), Error);
}

TEST_CASE("widest axis prefers the lowest index on ties")
{
    CHECK(widest_axis(box({{0, 1}, {0, 2}, {0, 2}})) == 1u);
    CHECK(widest_axis(box({{0, 3}, {0, 3}})) == 0u);
    CHECK(!widest_axis(box({{1, 1}})).has_value());
}

TEST_CASE("intersection dimension")
{
    const NBox a = box({{0, 2}, {0, 2}});
    CHECK(intersection_dim(a, box({{1, 3}, {1, 3}})) == 2u);
    CHECK(intersection_dim(a, box({{2, 3}, {0, 1}})) == 1u);
    CHECK(intersection_dim(a, box({{2, 3}, {2, 3}})) == 0u);
    CHECK(!intersection_dim(a, box({{3, 4}, {0, 1}})).has_value());
}

TEST_CASE("subset and canonical order")
{
    CHECK(box({{0, 1}, {1, 1}}).is_subset_of(box({{0, 2}, {0, 1}})));
    CHECK(!box({{0, 3}}).is_subset_of(box({{0, 2}})));
    CHECK(canonical_less(box({{0, 1}}), box({{0, 2}})));
    CHECK(!canonical_less(box({{0, 2}}), box({{0, 2}})));
}

TEST_CASE("split_against grids a face by overlapping boxes")
{
    const OrientedBox face{box({{0, 0}, {0, 4}, {0, 4}}), -1};
    const std::vector<NBox> others{box({{0, 0}, {1, 5}, {-1, 2}}), box({{1, 1}, {0, 4}, {0, 4}})};
    const auto pieces = split_against(face, others);
    // Only the first box overlaps the face in full dimension: cuts at 1 and 2.
    CHECK(pieces.size() == 4);
    for (const OrientedBox& p : pieces) {
        CHECK(p.orientation == -1);
        CHECK(p.box.is_subset_of(face.box));
        const bool inside = p.box.is_subset_of(others[0]);
        const auto dim = intersection_dim(p.box, others[0]);
        CHECK((inside || !dim || *dim < 2));
    }
    const auto untouched = split_against(face, std::vector<NBox>{});
    REQUIRE(untouched.size() == 1);
    CHECK(untouched[0] == face);
}

TEST_CASE("split_against does not depend on the order of the others")
{
    const OrientedBox face{box({{0, 4}, {0, 4}}), 1};
    std::vector<NBox> others{box({{1, 3}, {-1, 2}}), box({{-1, 2}, {3, 5}})};
    auto a = split_against(face, others);
    std::reverse(others.begin(), others.end());
    auto b = split_against(face, others);
    const auto less = [](const OrientedBox& x, const OrientedBox& y) { return canonical_less(x.box, y.box); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    CHECK(a == b);
}

} // TEST_SUITE
