// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_INTERVAL_HPP
#define CUBEDEG_INTERVAL_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>

namespace cubedeg {

// Certified sign of a function over a box. Zero means "not certified",
// i.e. the enclosure straddles or touches 0.
enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign negate(Sign s) noexcept { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
char to_char(Sign s) noexcept;

// Closed interval [lo, hi] with double endpoints. Endpoints may be infinite,
// never NaN, and lo <= hi. Degenerate (lo == hi) intervals are ordinary values.
//
// All arithmetic rounds outward: the lower endpoint towards -inf and the upper
// towards +inf, so every result encloses the exact image of its operands.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr Interval() = default;
    constexpr explicit Interval(double v) : lo(v), hi(v) {}
    constexpr Interval(double l, double h) : lo(l), hi(h) {}

    static constexpr Interval entire() noexcept
    {
        return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    }

    constexpr bool is_degenerate() const noexcept { return lo == hi; }
    constexpr bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    constexpr bool contains(const Interval& o) const noexcept { return lo <= o.lo && o.hi <= hi; }

    // Width rounded upwards.
    double width() const noexcept;

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

Interval operator-(const Interval& a);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Division by an interval containing 0 gives the whole line.
Interval operator/(const Interval& a, const Interval& b);

Interval pow(const Interval& a, int exponent);

enum class ElemFn : std::uint8_t { Sin, Cos, Exp, Ln, Sqrt, Cbrt, Abs };

const char* to_string(ElemFn fn) noexcept;

// Enclosure of fn over a. Ln and Sqrt clip to their domain; an interval with
// no point in the domain throws Error(EmptyDomain).
Interval elementary(ElemFn fn, const Interval& a);

// Cube root through sign(x) * exp(ln|x| / 3). Kept for differential testing
// against the direct monotone enclosure used by elementary(Cbrt, .).
Interval cbrt_via_exp_ln(const Interval& a);

// Plus iff lo > 0, Minus iff hi < 0, otherwise Zero.
constexpr Sign sign_of(const Interval& a) noexcept
{
    if (a.lo > 0.0) return Sign::Plus;
    if (a.hi < 0.0) return Sign::Minus;
    return Sign::Zero;
}

} // namespace cubedeg

#endif
