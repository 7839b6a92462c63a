// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/signlist.hpp"

#include "cubedeg/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <sstream>

namespace cubedeg {

bool is_sufficient(const SignVector& v) noexcept
{
    return std::any_of(v.begin(), v.end(), [](Sign s) { return s != Sign::Zero; });
}

std::string to_string(const SignVector& v)
{
    std::string out;
    out.reserve(v.size());
    for (Sign s : v) out += to_char(s);
    return out;
}

bool is_sufficient(const SignList& list) noexcept
{
    return std::all_of(list.entries.begin(), list.entries.end(),
                       [](const SignEntry& e) { return is_sufficient(e.signs); });
}

void sort_canonical(SignList& list)
{
    std::sort(list.entries.begin(), list.entries.end(), [](const SignEntry& a, const SignEntry& b) {
        if (canonical_less(a.box.box, b.box.box)) return true;
        if (canonical_less(b.box.box, a.box.box)) return false;
        if (a.box.orientation != b.box.orientation) return a.box.orientation < b.box.orientation;
        return a.signs < b.signs;
    });
}

SignVector sign_vector_for(const FunctionSystem& fs, const NBox& box)
{
    SignVector v(fs.codomain_dim(), Sign::Zero);
    for (std::size_t i = 0; i < v.size(); ++i) {
        try {
            v[i] = sign_of(fs.eval_interval(i, box.coords()));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::EmptyDomain) throw;
        }
    }
    return v;
}

SignList refine_cov(const FunctionSystem& fs, const OrientedBox& domain, const RefineLimits& limits,
                    unsigned workers, RefineStats* stats)
{
    const std::size_t n = fs.ambient_dim();
    if (domain.box.ambient_dim() != n || domain.box.dimension() != n) {
        throw Error(ErrorCode::InvalidArgument, "domain must be a full-dimensional box in R^" + std::to_string(n));
    }
    if (fs.codomain_dim() != n) throw Error(ErrorCode::InvalidArgument, "function system must map R^n to R^n");

    SignList out;
    out.box_dim = n - 1;
    out.active.assign(fs.active().begin(), fs.active().end());

    // Each pending box carries how often each coordinate has been halved.
    struct Pending {
        OrientedBox box;
        std::vector<unsigned> cuts;
    };
    std::vector<Pending> frontier;
    for (OrientedBox& f : faces(domain)) frontier.push_back({std::move(f), std::vector<unsigned>(n, 0)});
    std::size_t created = frontier.size();
    unsigned depth = 0;

    const auto undecidable = [&](const NBox& box, const char* reason) {
        std::ostringstream msg;
        msg << "cannot certify a sign on boundary box " << box << " (" << reason
            << "); 0 may lie on f(boundary) or double precision does not suffice";
        throw Error(ErrorCode::Undecidable, msg.str());
    };

    while (!frontier.empty()) {
        std::stable_sort(frontier.begin(), frontier.end(), [](const Pending& a, const Pending& b) {
            const double da = a.box.box.diameter();
            const double db = b.box.box.diameter();
            if (da != db) return da > db;
            return canonical_less(a.box.box, b.box.box);
        });

        std::vector<SignVector> vectors(frontier.size());
        detail::parallel_for(frontier.size(), workers, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) vectors[i] = sign_vector_for(fs, frontier[i].box.box);
        });

        std::vector<Pending> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            Pending& cur = frontier[i];
            if (is_sufficient(vectors[i])) {
                out.entries.push_back({std::move(cur.box), std::move(vectors[i])});
                continue;
            }
            const auto axis = widest_axis(cur.box.box);
            if (!axis) undecidable(cur.box.box, "box is a point");
            if (cur.cuts[*axis] >= limits.max_depth) undecidable(cur.box.box, "depth limit reached");
            std::pair<OrientedBox, OrientedBox> halves;
            try {
                halves = bisect(cur.box, *axis);
            } catch (const Error&) {
                undecidable(cur.box.box, "box too thin to bisect");
            }
            created += 2;
            if (created > limits.max_boxes) undecidable(cur.box.box, "box limit reached");
            std::vector<unsigned> cuts = std::move(cur.cuts);
            depth = std::max(depth, ++cuts[*axis]);
            next.push_back({std::move(halves.first), cuts});
            next.push_back({std::move(halves.second), std::move(cuts)});
        }
        frontier = std::move(next);
    }

    sort_canonical(out);
    if (stats != nullptr) {
        stats->boxes_created = created;
        stats->max_depth_used = depth;
    }
    return out;
}

} // namespace cubedeg
