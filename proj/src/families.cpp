// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/families.hpp"

#include "cubedeg/error.hpp"

namespace cubedeg {

namespace {

std::string x(std::size_t i) { return "x" + std::to_string(i); }

std::string saddle_component(std::size_t i, std::size_t n)
{
    if (i > 1) return "2*x1*" + x(i);
    std::string s = "x1^2";
    for (std::size_t j = 2; j <= n; ++j) s += "-" + x(j) + "^2";
    return s;
}

} // namespace

const char* to_string(Family f) noexcept
{
    switch (f) {
    case Family::Identity: return "identity";
    case Family::Saddle: return "saddle";
    case Family::CubeRoot: return "cuberoot";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) noexcept
{
    if (name == "identity" || name == "id") return Family::Identity;
    if (name == "saddle") return Family::Saddle;
    if (name == "cuberoot" || name == "cbrt") return Family::CubeRoot;
    return std::nullopt;
}

std::string family_expression(Family f, std::size_t n)
{
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "family dimension must be at least 1");
    std::string out;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i > 1) out += "; ";
        switch (f) {
        case Family::Identity: out += x(i); break;
        case Family::Saddle: out += saddle_component(i, n); break;
        case Family::CubeRoot: out += "cbrt(" + saddle_component(i, n) + ")"; break;
        }
    }
    return out;
}

} // namespace cubedeg
