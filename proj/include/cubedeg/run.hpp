// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_RUN_HPP
#define CUBEDEG_RUN_HPP

#include "cubedeg/degree.hpp"
#include "cubedeg/error.hpp"
#include "cubedeg/geometry.hpp"
#include "cubedeg/signlist.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubedeg {

// "[a,b]x[c,d]x..." with decimal endpoints; a factor may carry a repeat
// count, "[a,b]^k". Endpoints are rounded to nearest double and then taken
// as exact. Throws EmptyInterval (a > b), DegenerateInterval (a == b) or
// InvalidArgument for malformed text.
NBox parse_box(std::string_view text);

// Comma-separated coordinates, "a,b,...".
std::vector<double> parse_point(std::string_view text);

// "l,s" with l >= 1 and s one of '+', '-'.
Pivot parse_pivot(std::string_view text);

// Shortest round-trip decimal forms; parse_box(format_box(b)) == b.
std::string format_box(const NBox& box);
std::string format_point(std::span<const double> point);
std::string format_pivot(const Pivot& pivot);

struct RunConfig {
    std::string functions;
    std::size_t dim = 0;
    NBox box;
    std::vector<double> point;  // empty means the origin
    RefineLimits limits;
    std::optional<Pivot> pivot;
    unsigned workers = 1;
};

enum class RunStatus { Ok, Undecidable, InputError, Failure };

const char* to_string(RunStatus s) noexcept;
RunStatus classify(ErrorCode code) noexcept;

struct RunOutcome {
    RunStatus status = RunStatus::Ok;
    std::optional<DegreeReport> report;
    std::string message;
};

// Parses config.functions and computes the degree. Errors are captured in
// the outcome rather than thrown.
RunOutcome run_degree(const RunConfig& config);

// Machine-readable document with fields status, degree, message, stats,
// timings and config. The config echo holds everything that determines the
// result (not the worker count), so re-running it reproduces the document.
// Without timings the document is a deterministic function of the config.
std::string to_json(const RunConfig& config, const RunOutcome& outcome, bool include_timings);

} // namespace cubedeg

#endif
