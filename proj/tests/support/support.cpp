// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include "cubedeg/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace cubedeg::testing {

namespace {

using Op = Expr::Op;

Expr operator+(Expr a, Expr b) { return Expr::binary(Op::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(Op::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(Op::Mul, std::move(a), std::move(b)); }

struct Complex {
    Expr re;
    Expr im;
};

Complex operator*(const Complex& a, const Complex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

int uniform_int(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Interval with endpoints on the odd multiples of 1/16, so it never touches
// a point on the 1/8 grid.
Interval offset_interval(Rng& rng, double lo, double hi, double min_width)
{
    for (;;) {
        const double a = dyadic(rng, lo, hi, 8) + 1.0 / 16.0;
        const double b = dyadic(rng, lo, hi, 8) + 1.0 / 16.0;
        if (std::fabs(b - a) >= min_width) return {std::min(a, b), std::max(a, b)};
    }
}

std::string number(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Smallest Euclidean norm of f over a dense sample of the boundary of a 2-box.
double boundary_margin(const FunctionSystem& fs, const NBox& box, std::size_t per_edge)
{
    const std::array<std::array<double, 2>, 4> corners{{{box[0].lo, box[1].lo},
                                                        {box[0].hi, box[1].lo},
                                                        {box[0].hi, box[1].hi},
                                                        {box[0].lo, box[1].hi}}};
    double best = INFINITY;
    for (std::size_t e = 0; e < 4; ++e) {
        const auto& p = corners[e];
        const auto& q = corners[(e + 1) % 4];
        for (std::size_t k = 0; k < per_edge; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(per_edge);
            const std::array<double, 2> x{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
            const double u = fs.eval_point(0, x);
            const double v = fs.eval_point(1, x);
            if (!std::isfinite(u) || !std::isfinite(v)) return 0.0;
            best = std::min(best, std::hypot(u, v));
        }
    }
    return best;
}

Expr random_quadratic(Rng& rng)
{
    const Expr x = Expr::variable(0);
    const Expr y = Expr::variable(1);
    const std::array<Expr, 6> monomials{Expr::constant(1.0), x, y, x * x, x * y, y * y};
    Expr sum = Expr::constant(dyadic(rng, -1, 1, 4));
    for (std::size_t i = 1; i < monomials.size(); ++i) {
        const double c = dyadic(rng, -2, 2, 4);
        if (c != 0.0) sum = sum + Expr::constant(c) * monomials[i];
    }
    return sum;
}

} // namespace

double dyadic(Rng& rng, double lo, double hi, int denom)
{
    const int a = static_cast<int>(std::ceil(lo * denom));
    const int b = static_cast<int>(std::floor(hi * denom));
    return static_cast<double>(uniform_int(rng, a, b)) / denom;
}

Problem1D random_problem_1d(Rng& rng)
{
    for (;;) {
        std::string text;
        if (uniform_int(rng, 0, 1) == 0) {
            // c (x - r1) ... (x - rk)
            static constexpr std::array<double, 6> scales{1, -1, 2, -2, 0.5, -0.5};
            text = number(scales[static_cast<std::size_t>(uniform_int(rng, 0, 5))]);
            const int k = uniform_int(rng, 1, 4);
            for (int i = 0; i < k; ++i) text += "*(x1-(" + number(dyadic(rng, -2, 2, 8)) + "))";
        } else {
            const int degree = uniform_int(rng, 0, 5);
            text = number(dyadic(rng, -2, 2, 4));
            for (int p = 1; p <= degree; ++p) text += "+(" + number(dyadic(rng, -2, 2, 4)) + ")*x1^" + std::to_string(p);
        }
        const Interval iv = offset_interval(rng, -2.5, 2.5, 0.125);
        FunctionSystem fs = FunctionSystem::parse(text, 1);
        const double fa = fs.eval_point(0, std::array{iv.lo});
        const double fb = fs.eval_point(0, std::array{iv.hi});
        if (std::fabs(fa) < 1e-6 || std::fabs(fb) < 1e-6) continue;
        return {std::move(fs), NBox({iv}), std::move(text)};
    }
}

Problem2D random_problem_2d(Rng& rng, double margin)
{
    for (;;) {
        std::vector<Expr> components;
        std::optional<std::int64_t> expected;
        std::string description;
        const NBox box({offset_interval(rng, -2, 2, 0.25), offset_interval(rng, -2, 2, 0.25)});
        if (uniform_int(rng, 0, 1) == 0) {
            const int k = uniform_int(rng, 1, 3);
            Complex f{Expr::constant(1.0), Expr::constant(0.0)};
            std::int64_t inside = 0;
            description = "complex";
            for (int i = 0; i < k; ++i) {
                const double a = dyadic(rng, -1.5, 1.5, 8);
                const double b = dyadic(rng, -1.5, 1.5, 8);
                const bool conj = uniform_int(rng, 0, 2) == 0;
                Complex factor{Expr::variable(0) - Expr::constant(a), Expr::variable(1) - Expr::constant(b)};
                if (conj) factor.im = Expr::negate(factor.im);
                f = f * factor;
                if (box[0].contains(a) && box[1].contains(b)) inside += conj ? -1 : 1;
                description += (conj ? " conj(z-(" : " (z-(") + number(a) + "," + number(b) + "))";
            }
            components = {f.re, f.im};
            expected = inside;
        } else {
            components = {random_quadratic(rng), random_quadratic(rng)};
            description = "quadratic";
        }
        FunctionSystem fs(std::move(components));
        if (boundary_margin(fs, box, 2048) < margin) continue;
        try {
            (void)oracle::winding_number_2d(fs, box);
        } catch (const Error&) {
            continue;
        }
        return {std::move(fs), box, std::move(description), expected};
    }
}

ProductProblem random_product(Rng& rng, std::size_t total_dim)
{
    for (int attempt = 0;; ++attempt) {
        std::vector<oracle::Factor> factors;
        std::size_t left = total_dim;
        while (left > 0) {
            if (left >= 2 && uniform_int(rng, 0, 1) == 0) {
                Problem2D q = random_problem_2d(rng);
                factors.push_back({std::move(q.fs), std::move(q.box)});
                left -= 2;
            } else {
                Problem1D q = random_problem_1d(rng);
                factors.push_back({std::move(q.fs), std::move(q.box)});
                left -= 1;
            }
        }
        FunctionSystem fs = factors.front().fs;
        NBox box = factors.front().box;
        for (std::size_t i = 1; i < factors.size(); ++i) {
            fs = oracle::product_system(fs, factors[i].fs);
            box = oracle::product_box(box, factors[i].box);
        }
        const std::int64_t expected = oracle::product_degree(factors);
        if (expected != 0 || attempt >= 19) return {std::move(factors), std::move(fs), std::move(box), expected};
    }
}

Expr random_expr(Rng& rng, std::size_t dim, int depth)
{
    if (depth <= 0 || uniform_int(rng, 0, 4) == 0) {
        if (uniform_int(rng, 0, 2) == 0) return Expr::constant(std::uniform_real_distribution<double>(-3, 3)(rng));
        return Expr::variable(uniform_int(rng, 0, static_cast<int>(dim) - 1));
    }
    switch (uniform_int(rng, 0, 7)) {
    case 0: return Expr::negate(random_expr(rng, dim, depth - 1));
    case 1: return random_expr(rng, dim, depth - 1) + random_expr(rng, dim, depth - 1);
    case 2: return random_expr(rng, dim, depth - 1) - random_expr(rng, dim, depth - 1);
    case 3: return random_expr(rng, dim, depth - 1) * random_expr(rng, dim, depth - 1);
    case 4: return Expr::binary(Op::Div, random_expr(rng, dim, depth - 1), random_expr(rng, dim, depth - 1));
    case 5: return Expr::power(random_expr(rng, dim, depth - 1), uniform_int(rng, -3, 5));
    default: break;
    }
    static constexpr std::array fns{ElemFn::Sin, ElemFn::Cos, ElemFn::Exp, ElemFn::Ln,
                                    ElemFn::Sqrt, ElemFn::Cbrt, ElemFn::Abs};
    return Expr::elementary(fns[static_cast<std::size_t>(uniform_int(rng, 0, fns.size() - 1))],
                            random_expr(rng, dim, depth - 1));
}

std::optional<std::string> find_imbalance(const SignList& list)
{
    if (list.box_dim == 0 || list.empty()) return std::nullopt;
    const std::size_t n = list.entries.front().box.box.ambient_dim();

    // The global grid of all endpoints makes every cell small: it either lies
    // in a list box or meets it in lower dimension.
    std::vector<std::set<double>> cuts(n);
    for (const SignEntry& e : list.entries) {
        for (std::size_t a = 0; a < n; ++a) {
            cuts[a].insert(e.box.box[a].lo);
            cuts[a].insert(e.box.box[a].hi);
        }
    }

    const auto less = [](const NBox& a, const NBox& b) { return canonical_less(a, b); };
    std::map<NBox, long, decltype(less)> balance(less);
    for (const SignEntry& e : list.entries) {
        for (const OrientedBox& face : faces(e.box)) {
            const std::vector<std::size_t> free = face.box.free_axes();
            std::vector<std::vector<double>> points(free.size());
            for (std::size_t k = 0; k < free.size(); ++k) {
                const Interval iv = face.box[free[k]];
                for (auto it = cuts[free[k]].lower_bound(iv.lo); it != cuts[free[k]].end() && *it <= iv.hi; ++it) {
                    points[k].push_back(*it);
                }
            }
            std::vector<std::size_t> at(free.size(), 0);
            for (;;) {
                NBox cell = face.box;
                for (std::size_t k = 0; k < free.size(); ++k) cell[free[k]] = {points[k][at[k]], points[k][at[k] + 1]};
                balance[cell] += face.orientation;
                std::size_t k = 0;
                while (k < free.size() && ++at[k] + 1 >= points[k].size()) at[k++] = 0;
                if (k == free.size()) break;
            }
        }
    }
    for (const auto& [cell, sum] : balance) {
        if (sum != 0) {
            std::ostringstream os;
            os << "sub-face " << cell << " has orientation surplus " << sum;
            return os.str();
        }
    }
    return std::nullopt;
}

Split split_by_pivot(const SignList& list, const Pivot& pivot)
{
    Split s{{{}, list.box_dim, list.active}, {{}, list.box_dim, list.active}};
    for (const SignEntry& e : list.entries) {
        (e.signs[pivot.position - 1] == pivot.sign ? s.selected : s.nonselected).entries.push_back(e);
    }
    return s;
}

SignList with_entry_bisected(const SignList& list, std::size_t index, std::size_t axis)
{
    SignList out = list;
    const SignEntry e = out.entries[index];
    auto [lo, hi] = bisect(e.box, axis);
    out.entries[index] = {std::move(lo), e.signs};
    out.entries.push_back({std::move(hi), e.signs});
    return out;
}

SignList with_pair(const SignList& list, const OrientedBox& x, const SignVector& v, const SignVector& w)
{
    SignList out = list;
    out.entries.push_back({x, v});
    out.entries.push_back({x.opposite(), w});
    return out;
}

} // namespace cubedeg::testing
