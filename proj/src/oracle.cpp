// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/oracle.hpp"

#include "cubedeg/error.hpp"

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace cubedeg::oracle {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : -1; }

class Winder {
public:
    Winder(const FunctionSystem& fs, const WindingConfig& cfg) : fs_(fs), cfg_(cfg) {}

    // Accumulated angle of f along the segment from p to q.
    double edge(std::array<double, 2> p, std::array<double, 2> q)
    {
        const auto at = [&](double t) {
            return std::array<double, 2>{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
        };
        const std::size_t n = cfg_.samples_per_edge;
        double total = 0.0;
        double t_prev = 0.0;
        auto f_prev = value(at(0.0));
        for (std::size_t k = 1; k <= n; ++k) {
            const double t = k == n ? 1.0 : static_cast<double>(k) / static_cast<double>(n);
            const auto f = value(at(t));
            total += segment(at, t_prev, f_prev, t, f, 0);
            t_prev = t;
            f_prev = f;
        }
        return total;
    }

private:
    const FunctionSystem& fs_;
    const WindingConfig& cfg_;

    std::array<double, 2> value(std::array<double, 2> x) const
    {
        const std::array<double, 2> f{fs_.eval_point(0, x), fs_.eval_point(1, x)};
        if (!std::isfinite(f[0]) || !std::isfinite(f[1])) {
            throw Error(ErrorCode::CannotResolve, "f is not finite on the boundary");
        }
        if (f[0] == 0.0 && f[1] == 0.0) throw Error(ErrorCode::SampleHitZero, "f vanishes at a boundary sample");
        return f;
    }

    static double angle(std::array<double, 2> u, std::array<double, 2> v)
    {
        return std::atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1]);
    }

    template <class At>
    double segment(const At& at, double t0, std::array<double, 2> f0, double t1, std::array<double, 2> f1,
                   unsigned round)
    {
        const double step = angle(f0, f1);
        if (std::fabs(step) <= cfg_.max_angle_step) return step;
        if (round >= cfg_.max_rounds) {
            throw Error(ErrorCode::CannotResolve, "angle step stays above the cap after refinement");
        }
        const double tm = 0.5 * (t0 + t1);
        const auto fm = value(at(tm));
        return segment(at, t0, f0, tm, fm, round + 1) + segment(at, tm, fm, t1, f1, round + 1);
    }
};

} // namespace

std::int64_t degree_1d(const FunctionSystem& fs, double a, double b)
{
    if (fs.ambient_dim() != 1) throw Error(ErrorCode::InvalidArgument, "degree_1d needs a scalar function of x1");
    const double fa = fs.eval_point(0, std::array{a});
    const double fb = fs.eval_point(0, std::array{b});
    if (fa == 0.0 || fb == 0.0) throw Error(ErrorCode::ZeroAtEndpoint, "f vanishes at an endpoint");
    return (sign_of(fb) - sign_of(fa)) / 2;
}

std::int64_t winding_number_2d(const FunctionSystem& fs, const NBox& box, const WindingConfig& cfg)
{
    if (fs.ambient_dim() != 2 || box.ambient_dim() != 2) {
        throw Error(ErrorCode::InvalidArgument, "winding_number_2d needs f: R^2 -> R^2 on a 2-box");
    }
    if (cfg.samples_per_edge < 4 || !(cfg.max_angle_step < std::numbers::pi)) {
        throw Error(ErrorCode::InvalidArgument, "winding config needs >= 4 samples and an angle cap below pi");
    }
    const double x0 = box[0].lo, x1 = box[0].hi, y0 = box[1].lo, y1 = box[1].hi;
    Winder w(fs, cfg);
    const double total = w.edge({x0, y0}, {x1, y0}) + w.edge({x1, y0}, {x1, y1}) + w.edge({x1, y1}, {x0, y1})
                         + w.edge({x0, y1}, {x0, y0});
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::fabs(turns - rounded) > 1e-6) {
        throw Error(ErrorCode::CannotResolve, "accumulated angle is not a multiple of 2 pi");
    }
    return static_cast<std::int64_t>(rounded);
}

std::int64_t low_dim_degree(const FunctionSystem& fs, const NBox& box, const WindingConfig& cfg)
{
    switch (fs.ambient_dim()) {
    case 1: return degree_1d(fs, box[0].lo, box[0].hi);
    case 2: return winding_number_2d(fs, box, cfg);
    default: break;
    }
    throw Error(ErrorCode::InvalidArgument, "oracles cover dimensions 1 and 2 only");
}

FunctionSystem product_system(const FunctionSystem& f, const FunctionSystem& g)
{
    const int offset = static_cast<int>(f.ambient_dim());
    std::vector<Expr> components;
    for (std::size_t i : f.active()) components.push_back(f.component(i));
    for (std::size_t i : g.active()) components.push_back(g.component(i).shifted(offset));
    return FunctionSystem(std::move(components));
}

NBox product_box(const NBox& a, const NBox& b)
{
    std::vector<Interval> coords(a.coords().begin(), a.coords().end());
    coords.insert(coords.end(), b.coords().begin(), b.coords().end());
    return NBox(std::move(coords));
}

std::int64_t product_degree(const FunctionSystem& f1, const NBox& b1, const FunctionSystem& f2, const NBox& b2,
                            const WindingConfig& cfg)
{
    return low_dim_degree(f1, b1, cfg) * low_dim_degree(f2, b2, cfg);
}

std::int64_t product_degree(std::span<const Factor> factors, const WindingConfig& cfg)
{
    std::int64_t degree = 1;
    for (const Factor& f : factors) degree *= low_dim_degree(f.fs, f.box, cfg);
    return degree;
}

} // namespace cubedeg::oracle
