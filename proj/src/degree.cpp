// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/degree.hpp"

#include "cubedeg/error.hpp"
#include "parallel.hpp"

#include <chrono>
#include <iterator>
#include <limits>

namespace cubedeg {

namespace {

void check_shape(const SignList& list)
{
    for (const SignEntry& e : list.entries) {
        if (e.box.box.dimension() != list.box_dim || e.signs.size() != list.codomain_dim()) {
            throw Error(ErrorCode::MalformedList, "sign list entry does not match the list dimension");
        }
        if (e.box.orientation != 1 && e.box.orientation != -1) {
            throw Error(ErrorCode::MalformedList, "orientation must be +1 or -1");
        }
    }
}

SignVector without_position(const SignVector& v, std::size_t position)
{
    SignVector out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i + 1 != position) out.push_back(v[i]);
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

} // namespace

std::size_t count_selected(const SignList& list, const Pivot& p) noexcept
{
    std::size_t count = 0;
    for (const SignEntry& e : list.entries) {
        if (e.signs[p.position - 1] == p.sign) ++count;
    }
    return count;
}

Pivot choose_pivot(const SignList& list)
{
    const std::size_t width = list.codomain_dim();
    std::vector<std::size_t> plus(width, 0);
    std::vector<std::size_t> minus(width, 0);
    for (const SignEntry& e : list.entries) {
        for (std::size_t i = 0; i < width; ++i) {
            if (e.signs[i] == Sign::Plus) ++plus[i];
            if (e.signs[i] == Sign::Minus) ++minus[i];
        }
    }
    Pivot best;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < width; ++i) {
        for (const auto& [count, sign] : {std::pair{plus[i], Sign::Plus}, std::pair{minus[i], Sign::Minus}}) {
            if (count != 0 && count < best_count) {
                best_count = count;
                best = {i + 1, sign};
            }
        }
    }
    return best;
}

std::int64_t deg_base(const SignList& list)
{
    std::int64_t twice = 0;
    for (const SignEntry& e : list.entries) {
        if (e.signs.size() != 1 || e.signs[0] == Sign::Zero) {
            throw Error(ErrorCode::MalformedList, "0-dimensional entries need a single non-Zero sign");
        }
        twice += e.box.orientation * to_int(e.signs[0]);
    }
    if (twice % 2 != 0) {
        throw Error(ErrorCode::MalformedList, "odd orientation sum " + std::to_string(twice)
                                                  + ": the list is not an oriented boundary");
    }
    return twice / 2;
}

SignList build_faces(const SignList& selected, const SignList& nonselected, std::size_t position, unsigned workers)
{
    const std::size_t d = selected.box_dim;
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "build_faces needs boxes of dimension at least 1");
    if (position < 1 || position > d + 1) throw Error(ErrorCode::InvalidArgument, "pivot position out of range");

    SignList out;
    out.box_dim = d - 1;
    out.active = selected.active;
    if (position - 1 < out.active.size()) {
        out.active.erase(out.active.begin() + static_cast<std::ptrdiff_t>(position - 1));
    }

    std::vector<std::vector<SignEntry>> per_entry(selected.size());
    detail::parallel_for(selected.size(), workers, [&](std::size_t begin, std::size_t end) {
        std::vector<const SignEntry*> candidates;
        std::vector<const NBox*> candidate_boxes;
        for (std::size_t i = begin; i < end; ++i) {
            for (const OrientedBox& face : faces(selected.entries[i].box)) {
                candidates.clear();
                candidate_boxes.clear();
                for (const SignEntry& s : nonselected.entries) {
                    if (intersection_dim(face.box, s.box.box) == d - 1) {
                        candidates.push_back(&s);
                        candidate_boxes.push_back(&s.box.box);
                    }
                }
                if (candidates.empty()) continue;
                for (OrientedBox& piece : split_against(face, candidate_boxes)) {
                    for (const SignEntry* s : candidates) {
                        if (!piece.box.is_subset_of(s->box.box)) continue;
                        SignVector reduced = without_position(s->signs, position);
                        if (!is_sufficient(reduced)) {
                            throw Error(ErrorCode::InsufficientInheritance,
                                        "a face piece inherited an all-Zero sign vector");
                        }
                        per_entry[i].push_back({std::move(piece), std::move(reduced)});
                        break;
                    }
                }
            }
        }
    });

    for (auto& entries : per_entry) {
        out.entries.insert(out.entries.end(), std::make_move_iterator(entries.begin()),
                           std::make_move_iterator(entries.end()));
    }
    sort_canonical(out);
    return out;
}

std::int64_t deg_rec(const SignList& list, const DegOptions& options, std::vector<LevelStats>* levels)
{
    if (!is_sufficient(list)) throw Error(ErrorCode::InvalidArgument, "deg_rec needs a sufficient sign list");

    const auto record = [&](const LevelStats& s) {
        if (levels != nullptr) levels->push_back(s);
    };

    SignList current = list;
    std::int64_t factor = 1;
    bool top = true;
    for (;;) {
        check_shape(current);
        LevelStats stats;
        stats.dim = current.box_dim;
        stats.entries = current.size();
        if (current.box_dim == 0) {
            record(stats);
            return factor * deg_base(current);
        }
        if (current.empty()) {
            record(stats);
            return 0;
        }

        const Pivot pivot = (top && options.top_pivot) ? *options.top_pivot : choose_pivot(current);
        if (pivot.position < 1 || pivot.position > current.codomain_dim() || pivot.sign == Sign::Zero) {
            throw Error(ErrorCode::InvalidArgument, "pivot must have position in 1.."
                                                        + std::to_string(current.codomain_dim())
                                                        + " and a non-Zero sign");
        }

        SignList sel{.entries = {}, .box_dim = current.box_dim, .active = current.active};
        SignList non{.entries = {}, .box_dim = current.box_dim, .active = current.active};
        for (SignEntry& e : current.entries) {
            (e.signs[pivot.position - 1] == pivot.sign ? sel : non).entries.push_back(std::move(e));
        }
        stats.selected = sel.size();
        stats.nonselected = non.size();
        stats.pivot = pivot;
        if (pivot.position - 1 < current.active.size()) stats.dropped_component = current.active[pivot.position - 1];

        SignList next = build_faces(sel, non, pivot.position, options.workers);
        stats.faces = next.size();
        record(stats);

        // s * (-1)^(l+1)
        factor *= to_int(pivot.sign) * (pivot.position % 2 == 1 ? 1 : -1);
        current = std::move(next);
        top = false;
    }
}

DegreeReport compute_degree(const FunctionSystem& fs, const NBox& box, std::span<const double> p,
                            const RefineLimits& limits, const DegOptions& options)
{
    const std::size_t n = fs.ambient_dim();
    if (box.ambient_dim() != n || box.dimension() != n) {
        throw Error(ErrorCode::InvalidArgument, "domain must be a full-dimensional box in R^" + std::to_string(n));
    }
    const FunctionSystem shifted = p.empty() ? fs : fs.translated(p);

    DegreeReport report;
    const auto t0 = std::chrono::steady_clock::now();
    const SignList boundary = refine_cov(shifted, OrientedBox{box, 1}, limits, options.workers, &report.refinement);
    report.refine_ms = elapsed_ms(t0);
    report.boundary_entries = boundary.size();

    const auto t1 = std::chrono::steady_clock::now();
    report.degree = deg_rec(boundary, options, &report.levels);
    report.deg_ms = elapsed_ms(t1);
    return report;
}

} // namespace cubedeg
