// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/cubedeg.h"

#include "cubedeg/degree.hpp"
#include "cubedeg/error.hpp"
#include "cubedeg/expr.hpp"
#include "cubedeg/families.hpp"
#include "cubedeg/oracle.hpp"
#include "cubedeg/run.hpp"

#include <cstring>
#include <new>
#include <string>

struct cubedeg_problem {
    cubedeg::RunConfig config;
};

struct cubedeg_result {
    cubedeg::RunConfig config;
    cubedeg::RunOutcome outcome;
};

namespace {

thread_local std::string last_error;

cubedeg_status to_status(cubedeg::ErrorCode code)
{
    using cubedeg::ErrorCode;
    switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::VariableOutOfRange:
    case ErrorCode::ComponentCount: return CUBEDEG_ERR_SYNTAX;
    case ErrorCode::EmptyDomain: return CUBEDEG_ERR_DOMAIN;
    case ErrorCode::Undecidable: return CUBEDEG_ERR_UNDECIDABLE;
    case ErrorCode::SampleHitZero:
    case ErrorCode::CannotResolve:
    case ErrorCode::ZeroAtEndpoint: return CUBEDEG_ERR_ORACLE;
    case ErrorCode::InvalidArgument:
    case ErrorCode::EmptyInterval:
    case ErrorCode::DegenerateInterval: return CUBEDEG_ERR_INVALID_ARGUMENT;
    case ErrorCode::NoFaces:
    case ErrorCode::CannotSplit:
    case ErrorCode::MalformedList:
    case ErrorCode::InsufficientInheritance: break;
    }
    return CUBEDEG_ERR_INTERNAL;
}

cubedeg_status fail(cubedeg_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
cubedeg_status guarded(F&& body) noexcept
{
    try {
        last_error.clear();
        return body();
    } catch (const cubedeg::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(CUBEDEG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CUBEDEG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CUBEDEG_ERR_INTERNAL, "unknown error");
    }
}

cubedeg_status copy_out(const std::string& text, char* buffer, size_t capacity, size_t* required)
{
    if (required != nullptr) *required = text.size() + 1;
    if (buffer == nullptr || capacity < text.size() + 1) {
        return fail(CUBEDEG_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(text.size() + 1) + " bytes");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return CUBEDEG_OK;
}

cubedeg_status null_handle() { return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "null handle or pointer"); }

} // namespace

extern "C" {

const char* cubedeg_version(void)
{
    return "0.1.0";
}

const char* cubedeg_status_name(cubedeg_status status)
{
    switch (status) {
    case CUBEDEG_OK: return "ok";
    case CUBEDEG_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CUBEDEG_ERR_SYNTAX: return "syntax";
    case CUBEDEG_ERR_DOMAIN: return "domain";
    case CUBEDEG_ERR_UNDECIDABLE: return "undecidable";
    case CUBEDEG_ERR_ORACLE: return "oracle";
    case CUBEDEG_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case CUBEDEG_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* cubedeg_last_error(void)
{
    return last_error.c_str();
}

cubedeg_status cubedeg_problem_create(const char* functions, const char* box, size_t dim, cubedeg_problem** out)
{
    return guarded([&] {
        if (functions == nullptr || box == nullptr || out == nullptr) return null_handle();
        *out = nullptr;
        cubedeg::RunConfig config;
        config.box = cubedeg::parse_box(box);
        if (dim == 0) dim = config.box.ambient_dim();
        if (config.box.ambient_dim() != dim) {
            return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "box has dimension " + std::to_string(config.box.ambient_dim())
                                                          + ", expected " + std::to_string(dim));
        }
        config.dim = dim;
        config.functions = functions;
        // Validate eagerly so that syntax errors surface at creation.
        (void)cubedeg::FunctionSystem::parse(config.functions, dim);
        *out = new cubedeg_problem{std::move(config)};
        return CUBEDEG_OK;
    });
}

void cubedeg_problem_destroy(cubedeg_problem* problem)
{
    delete problem;
}

size_t cubedeg_problem_dim(const cubedeg_problem* problem)
{
    return problem == nullptr ? 0 : problem->config.dim;
}

cubedeg_status cubedeg_problem_set_point(cubedeg_problem* problem, const char* point)
{
    return guarded([&] {
        if (problem == nullptr) return null_handle();
        if (point == nullptr || *point == '\0') {
            problem->config.point.clear();
            return CUBEDEG_OK;
        }
        auto p = cubedeg::parse_point(point);
        if (p.size() != problem->config.dim) {
            return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "point has dimension " + std::to_string(p.size())
                                                          + ", expected " + std::to_string(problem->config.dim));
        }
        problem->config.point = std::move(p);
        return CUBEDEG_OK;
    });
}

cubedeg_status cubedeg_problem_set_limits(cubedeg_problem* problem, unsigned max_depth, size_t max_boxes)
{
    if (problem == nullptr) return null_handle();
    if (max_boxes == 0) return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "max_boxes must be positive");
    problem->config.limits = {max_depth, max_boxes};
    return CUBEDEG_OK;
}

cubedeg_status cubedeg_problem_set_workers(cubedeg_problem* problem, unsigned workers)
{
    if (problem == nullptr) return null_handle();
    if (workers == 0) return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "workers must be positive");
    problem->config.workers = workers;
    return CUBEDEG_OK;
}

cubedeg_status cubedeg_problem_set_pivot(cubedeg_problem* problem, size_t position, int sign)
{
    if (problem == nullptr) return null_handle();
    if (position == 0) {
        problem->config.pivot.reset();
        return CUBEDEG_OK;
    }
    if (position > problem->config.dim || (sign != 1 && sign != -1)) {
        return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "pivot needs position in 1.." + std::to_string(problem->config.dim)
                                                      + " and sign +1 or -1");
    }
    problem->config.pivot = cubedeg::Pivot{position, sign > 0 ? cubedeg::Sign::Plus : cubedeg::Sign::Minus};
    return CUBEDEG_OK;
}

cubedeg_status cubedeg_compute(const cubedeg_problem* problem, cubedeg_result** out)
{
    return guarded([&] {
        if (problem == nullptr || out == nullptr) return null_handle();
        *out = nullptr;
        auto* result = new cubedeg_result{problem->config, cubedeg::run_degree(problem->config)};
        *out = result;
        switch (result->outcome.status) {
        case cubedeg::RunStatus::Ok: return CUBEDEG_OK;
        case cubedeg::RunStatus::Undecidable: return fail(CUBEDEG_ERR_UNDECIDABLE, result->outcome.message);
        case cubedeg::RunStatus::InputError: return fail(CUBEDEG_ERR_INVALID_ARGUMENT, result->outcome.message);
        case cubedeg::RunStatus::Failure: break;
        }
        return fail(CUBEDEG_ERR_INTERNAL, result->outcome.message);
    });
}

void cubedeg_result_destroy(cubedeg_result* result)
{
    delete result;
}

cubedeg_status cubedeg_result_status(const cubedeg_result* result)
{
    if (result == nullptr) return CUBEDEG_ERR_INVALID_ARGUMENT;
    switch (result->outcome.status) {
    case cubedeg::RunStatus::Ok: return CUBEDEG_OK;
    case cubedeg::RunStatus::Undecidable: return CUBEDEG_ERR_UNDECIDABLE;
    case cubedeg::RunStatus::InputError: return CUBEDEG_ERR_INVALID_ARGUMENT;
    case cubedeg::RunStatus::Failure: break;
    }
    return CUBEDEG_ERR_INTERNAL;
}

const char* cubedeg_result_message(const cubedeg_result* result)
{
    return result == nullptr ? "" : result->outcome.message.c_str();
}

cubedeg_status cubedeg_result_degree(const cubedeg_result* result, int64_t* degree)
{
    if (result == nullptr || degree == nullptr) return null_handle();
    if (!result->outcome.report) return fail(cubedeg_result_status(result), result->outcome.message);
    *degree = result->outcome.report->degree;
    return CUBEDEG_OK;
}

size_t cubedeg_result_level_count(const cubedeg_result* result)
{
    if (result == nullptr || !result->outcome.report) return 0;
    return result->outcome.report->levels.size();
}

cubedeg_status cubedeg_result_level(const cubedeg_result* result, size_t index, cubedeg_level* out)
{
    if (result == nullptr || out == nullptr) return null_handle();
    if (index >= cubedeg_result_level_count(result)) {
        return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "level index out of range");
    }
    const cubedeg::LevelStats& s = result->outcome.report->levels[index];
    *out = cubedeg_level{.dim = s.dim,
                         .entries = s.entries,
                         .selected = s.selected,
                         .nonselected = s.nonselected,
                         .faces = s.faces,
                         .pivot_position = s.pivot ? s.pivot->position : 0,
                         .pivot_sign = s.pivot ? cubedeg::to_int(s.pivot->sign) : 0,
                         .dropped_component = s.pivot ? s.dropped_component + 1 : 0};
    return CUBEDEG_OK;
}

cubedeg_status cubedeg_result_refinement(const cubedeg_result* result, size_t* boundary_entries,
                                         size_t* boxes_created, unsigned* max_depth_used)
{
    if (result == nullptr) return null_handle();
    if (!result->outcome.report) return fail(cubedeg_result_status(result), result->outcome.message);
    const auto& r = *result->outcome.report;
    if (boundary_entries != nullptr) *boundary_entries = r.boundary_entries;
    if (boxes_created != nullptr) *boxes_created = r.refinement.boxes_created;
    if (max_depth_used != nullptr) *max_depth_used = r.refinement.max_depth_used;
    return CUBEDEG_OK;
}

cubedeg_status cubedeg_result_timings(const cubedeg_result* result, double* refine_ms, double* deg_ms)
{
    if (result == nullptr) return null_handle();
    if (!result->outcome.report) return fail(cubedeg_result_status(result), result->outcome.message);
    if (refine_ms != nullptr) *refine_ms = result->outcome.report->refine_ms;
    if (deg_ms != nullptr) *deg_ms = result->outcome.report->deg_ms;
    return CUBEDEG_OK;
}

cubedeg_status cubedeg_result_json(const cubedeg_result* result, int include_timings, char* buffer, size_t capacity,
                                   size_t* required)
{
    return guarded([&] {
        if (result == nullptr) return null_handle();
        return copy_out(cubedeg::to_json(result->config, result->outcome, include_timings != 0), buffer, capacity,
                        required);
    });
}

cubedeg_status cubedeg_oracle_degree(const cubedeg_problem* problem, int64_t* degree)
{
    return guarded([&] {
        if (problem == nullptr || degree == nullptr) return null_handle();
        const auto& c = problem->config;
        if (c.dim > 2) return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "oracles cover dimensions 1 and 2 only");
        auto fs = cubedeg::FunctionSystem::parse(c.functions, c.dim);
        if (!c.point.empty()) fs = fs.translated(c.point);
        *degree = cubedeg::oracle::low_dim_degree(fs, c.box);
        return CUBEDEG_OK;
    });
}

cubedeg_status cubedeg_family_expression(cubedeg_family family, size_t n, char* buffer, size_t capacity,
                                         size_t* required)
{
    return guarded([&] {
        cubedeg::Family f{};
        switch (family) {
        case CUBEDEG_FAMILY_IDENTITY: f = cubedeg::Family::Identity; break;
        case CUBEDEG_FAMILY_SADDLE: f = cubedeg::Family::Saddle; break;
        case CUBEDEG_FAMILY_CUBE_ROOT: f = cubedeg::Family::CubeRoot; break;
        default: return fail(CUBEDEG_ERR_INVALID_ARGUMENT, "unknown family");
        }
        return copy_out(cubedeg::family_expression(f, n), buffer, capacity, required);
    });
}

} // extern "C"
