// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/interval.hpp"

#include "cubedeg/error.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <ostream>

namespace cubedeg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this magnitude the error-free transformations may lose exactness to
// underflow, so results are widened by one ulp unconditionally.
constexpr double kTiny = 0x1p-960;

double next_down(double x) { return std::nextafter(x, -kInf); }
double next_up(double x) { return std::nextafter(x, kInf); }

double down_n(double x, int steps)
{
    for (int i = 0; i < steps; ++i) x = next_down(x);
    return x;
}

double up_n(double x, int steps)
{
    for (int i = 0; i < steps; ++i) x = next_up(x);
    return x;
}

// Lower endpoint never +inf, upper never -inf, NaN collapses to the whole line.
Interval make(double lo, double hi)
{
    if (std::isnan(lo) || std::isnan(hi)) return Interval::entire();
    if (lo == kInf) lo = DBL_MAX;
    if (hi == -kInf) hi = -DBL_MAX;
    return {lo, hi};
}

// Rounded result s of a finite-operand operation that overflowed.
double overflow_down(double s) { return s > 0 ? DBL_MAX : s; }
double overflow_up(double s) { return s < 0 ? -DBL_MAX : s; }

// `err` is the exact residual true - s (or something with its sign).
double settle_down(double s, double err)
{
    if (std::fabs(s) < kTiny) return next_down(s);
    return err < 0 ? next_down(s) : s;
}

double settle_up(double s, double err)
{
    if (std::fabs(s) < kTiny) return next_up(s);
    return err > 0 ? next_up(s) : s;
}

double two_sum_err(double a, double b, double s)
{
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

double add_down(double a, double b)
{
    const double s = a + b;
    if (std::isinf(s)) return std::isfinite(a) && std::isfinite(b) ? overflow_down(s) : s;
    // TwoSum stays exact through underflow, so no tiny-magnitude widening.
    return two_sum_err(a, b, s) < 0 ? next_down(s) : s;
}

double add_up(double a, double b)
{
    const double s = a + b;
    if (std::isinf(s)) return std::isfinite(a) && std::isfinite(b) ? overflow_up(s) : s;
    return two_sum_err(a, b, s) > 0 ? next_up(s) : s;
}

double mul_down(double a, double b)
{
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (std::isinf(p)) return std::isfinite(a) && std::isfinite(b) ? overflow_down(p) : p;
    if (p == 0.0) return (a > 0) == (b > 0) ? 0.0 : next_down(0.0);  // underflow, sign known
    return settle_down(p, std::fma(a, b, -p));
}

double mul_up(double a, double b)
{
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (std::isinf(p)) return std::isfinite(a) && std::isfinite(b) ? overflow_up(p) : p;
    if (p == 0.0) return (a > 0) == (b > 0) ? next_up(0.0) : 0.0;
    return settle_up(p, std::fma(a, b, -p));
}

// Sign of (a/b - q) from the exact remainder a - q*b.
double div_residual(double a, double b, double q)
{
    const double r = std::fma(-q, b, a);
    if (r == 0.0) return 0.0;
    return (r > 0) == (b > 0) ? 1.0 : -1.0;
}

double div_down(double a, double b)
{
    if (a == 0.0) return 0.0;
    const double q = a / b;
    if (std::isinf(b)) return std::isinf(a) ? -kInf : 0.0;
    if (std::isinf(q)) return std::isfinite(a) ? overflow_down(q) : q;
    if (std::isinf(a)) return q;
    return settle_down(q, div_residual(a, b, q));
}

double div_up(double a, double b)
{
    if (a == 0.0) return 0.0;
    const double q = a / b;
    if (std::isinf(b)) return std::isinf(a) ? kInf : 0.0;
    if (std::isinf(q)) return std::isfinite(a) ? overflow_up(q) : q;
    if (std::isinf(a)) return q;
    return settle_up(q, div_residual(a, b, q));
}

double sqrt_down(double x)
{
    const double s = std::sqrt(x);
    if (s == 0.0 || std::isinf(s)) return s;
    return settle_down(s, std::fma(-s, s, x));
}

double sqrt_up(double x)
{
    const double s = std::sqrt(x);
    if (s == 0.0 || std::isinf(s)) return s;
    return settle_up(s, std::fma(-s, s, x));
}

// m >= 0; repeated squaring keeps every intermediate non-negative, so directed
// rounding of each product stays monotone.
double pow_abs_down(double m, unsigned k)
{
    double result = 1.0;
    double base = m;
    while (k != 0) {
        if (k & 1u) result = mul_down(result, base);
        k >>= 1u;
        if (k != 0) base = mul_down(base, base);
    }
    return result;
}

double pow_abs_up(double m, unsigned k)
{
    double result = 1.0;
    double base = m;
    while (k != 0) {
        if (k & 1u) result = mul_up(result, base);
        k >>= 1u;
        if (k != 0) base = mul_up(base, base);
    }
    return result;
}

// libm transcendental results are taken as accurate to within one ulp; two
// steps outward leave margin.
constexpr int kLibmSlack = 2;

Interval exp_iv(const Interval& a)
{
    const auto lo = [](double x) {
        if (x == 0.0) return 1.0;
        return std::max(0.0, down_n(std::exp(x), kLibmSlack));
    };
    const auto hi = [](double x) {
        if (x == 0.0) return 1.0;
        const double e = std::exp(x);
        return std::isinf(e) ? e : up_n(e, kLibmSlack);
    };
    return make(lo(a.lo), hi(a.hi));
}

Interval ln_iv(const Interval& a)
{
    if (!(a.hi > 0.0)) throw Error(ErrorCode::EmptyDomain, "ln: interval lies outside (0, inf)");
    const auto lo = [](double x) {
        if (x <= 0.0) return -kInf;
        if (x == 1.0) return 0.0;
        const double l = std::log(x);
        return std::isinf(l) ? l : down_n(l, kLibmSlack);
    };
    const auto hi = [](double x) {
        if (x == 1.0) return 0.0;
        const double l = std::log(x);
        return std::isinf(l) ? l : up_n(l, kLibmSlack);
    };
    return make(lo(a.lo), hi(a.hi));
}

Interval sqrt_iv(const Interval& a)
{
    if (a.hi < 0.0) throw Error(ErrorCode::EmptyDomain, "sqrt: interval lies below 0");
    return make(a.lo <= 0.0 ? 0.0 : sqrt_down(a.lo), sqrt_up(a.hi));
}

// Monotone odd function with cbrt(0) = 0 exactly, so the sign of the result
// always equals the sign of the argument.
Interval cbrt_iv(const Interval& a)
{
    const auto lo = [](double x) {
        if (x == 0.0 || std::isinf(x)) return x;
        const double c = down_n(std::cbrt(x), kLibmSlack);
        return x > 0.0 ? std::max(c, next_up(0.0)) : c;
    };
    const auto hi = [](double x) {
        if (x == 0.0 || std::isinf(x)) return x;
        const double c = up_n(std::cbrt(x), kLibmSlack);
        return x < 0.0 ? std::min(c, next_down(0.0)) : c;
    };
    return make(lo(a.lo), hi(a.hi));
}

Interval abs_iv(const Interval& a)
{
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return {-a.hi, -a.lo};
    return {0.0, std::max(-a.lo, a.hi)};
}

// Beyond this magnitude argument reduction is not trusted; sin/cos fall back
// to [-1, 1].
constexpr double kTrigRange = 1e6;

// Whether [lo, hi] may contain a point phase + 2*pi*k. Errs towards "yes".
bool may_contain_phase(double lo, double hi, double phase)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double slack = 1e-9;
    const double t_lo = (lo - phase) / two_pi;
    const double t_hi = (hi - phase) / two_pi;
    return std::floor(t_hi + slack) >= std::ceil(t_lo - slack);
}

template <class F>
Interval trig_iv(const Interval& a, F f, double max_phase, double min_phase, double exact_at_zero)
{
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || std::fabs(a.lo) > kTrigRange
        || std::fabs(a.hi) > kTrigRange || a.hi - a.lo >= 2.0 * std::numbers::pi) {
        return {-1.0, 1.0};
    }
    const auto lo_at = [&](double x) { return x == 0.0 ? exact_at_zero : down_n(f(x), kLibmSlack); };
    const auto hi_at = [&](double x) { return x == 0.0 ? exact_at_zero : up_n(f(x), kLibmSlack); };
    double lo = std::min(lo_at(a.lo), lo_at(a.hi));
    double hi = std::max(hi_at(a.lo), hi_at(a.hi));
    if (may_contain_phase(a.lo, a.hi, max_phase)) hi = 1.0;
    if (may_contain_phase(a.lo, a.hi, min_phase)) lo = -1.0;
    return {std::max(lo, -1.0), std::min(hi, 1.0)};
}

} // namespace

char to_char(Sign s) noexcept
{
    switch (s) {
    case Sign::Minus: return '-';
    case Sign::Plus: return '+';
    case Sign::Zero: break;
    }
    return '0';
}

double Interval::width() const noexcept
{
    return add_up(hi, -lo);
}

std::ostream& operator<<(std::ostream& os, const Interval& iv)
{
    return os << '[' << iv.lo << ", " << iv.hi << ']';
}

Interval operator-(const Interval& a)
{
    return {-a.hi, -a.lo};
}

Interval operator+(const Interval& a, const Interval& b)
{
    return make(add_down(a.lo, b.lo), add_up(a.hi, b.hi));
}

Interval operator-(const Interval& a, const Interval& b)
{
    return make(add_down(a.lo, -b.hi), add_up(a.hi, -b.lo));
}

Interval operator*(const Interval& a, const Interval& b)
{
    const double lo = std::min({mul_down(a.lo, b.lo), mul_down(a.lo, b.hi), mul_down(a.hi, b.lo),
                                mul_down(a.hi, b.hi)});
    const double hi = std::max({mul_up(a.lo, b.lo), mul_up(a.lo, b.hi), mul_up(a.hi, b.lo),
                                mul_up(a.hi, b.hi)});
    return make(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains(0.0)) return Interval::entire();
    const double lo = std::min({div_down(a.lo, b.lo), div_down(a.lo, b.hi), div_down(a.hi, b.lo),
                                div_down(a.hi, b.hi)});
    const double hi = std::max({div_up(a.lo, b.lo), div_up(a.lo, b.hi), div_up(a.hi, b.lo),
                                div_up(a.hi, b.hi)});
    return make(lo, hi);
}

Interval pow(const Interval& a, int exponent)
{
    if (exponent == 0) return Interval(1.0);
    if (exponent < 0) return Interval(1.0) / pow(a, -exponent);
    const auto k = static_cast<unsigned>(exponent);
    if (k % 2 == 1) {
        const double lo = a.lo >= 0.0 ? pow_abs_down(a.lo, k) : -pow_abs_up(-a.lo, k);
        const double hi = a.hi >= 0.0 ? pow_abs_up(a.hi, k) : -pow_abs_down(-a.hi, k);
        return make(lo, hi);
    }
    if (a.lo >= 0.0) return make(pow_abs_down(a.lo, k), pow_abs_up(a.hi, k));
    if (a.hi <= 0.0) return make(pow_abs_down(-a.hi, k), pow_abs_up(-a.lo, k));
    return make(0.0, pow_abs_up(std::max(-a.lo, a.hi), k));
}

const char* to_string(ElemFn fn) noexcept
{
    switch (fn) {
    case ElemFn::Sin: return "sin";
    case ElemFn::Cos: return "cos";
    case ElemFn::Exp: return "exp";
    case ElemFn::Ln: return "ln";
    case ElemFn::Sqrt: return "sqrt";
    case ElemFn::Cbrt: return "cbrt";
    case ElemFn::Abs: return "abs";
    }
    return "?";
}

Interval elementary(ElemFn fn, const Interval& a)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    switch (fn) {
    case ElemFn::Sin:
        return trig_iv(a, [](double x) { return std::sin(x); }, half_pi, -half_pi, 0.0);
    case ElemFn::Cos:
        return trig_iv(a, [](double x) { return std::cos(x); }, 0.0, std::numbers::pi, 1.0);
    case ElemFn::Exp: return exp_iv(a);
    case ElemFn::Ln: return ln_iv(a);
    case ElemFn::Sqrt: return sqrt_iv(a);
    case ElemFn::Cbrt: return cbrt_iv(a);
    case ElemFn::Abs: return abs_iv(a);
    }
    return Interval::entire();
}

Interval cbrt_via_exp_ln(const Interval& a)
{
    // On each sign-definite part, x -> exp(ln|x|/3) is monotone in |x|.
    const auto positive_part = [](double lo, double hi) -> Interval {
        // 0 <= lo <= hi
        if (hi == 0.0) return Interval(0.0);
        const Interval l = ln_iv(Interval(lo, hi)) / Interval(3.0);
        Interval r = exp_iv(l);
        if (lo == 0.0) r.lo = 0.0;
        return r;
    };
    if (a.lo >= 0.0) return positive_part(a.lo, a.hi);
    if (a.hi <= 0.0) return -positive_part(-a.hi, -a.lo);
    const Interval neg = -positive_part(0.0, -a.lo);
    const Interval pos = positive_part(0.0, a.hi);
    return {neg.lo, pos.hi};
}

} // namespace cubedeg
