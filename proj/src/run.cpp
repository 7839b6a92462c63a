// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/run.hpp"

#include "cubedeg/expr.hpp"

#include <json.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace cubedeg {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done()
    {
        skip_space();
        return pos_ == text_.size();
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    double number()
    {
        skip_space();
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        if (begin != end && *begin == '+') ++begin;
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || !std::isfinite(value)) fail("expected a finite number");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    std::size_t count()
    {
        skip_space();
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc() || value == 0) fail("expected a positive repeat count");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::InvalidArgument,
                    what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string format_double(double v)
{
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

nlohmann::json level_json(const LevelStats& s)
{
    nlohmann::json j{{"dim", s.dim},
                     {"entries", s.entries},
                     {"selected", s.selected},
                     {"nonselected", s.nonselected},
                     {"faces", s.faces}};
    if (s.pivot) {
        j["pivot"] = format_pivot(*s.pivot);
        j["dropped_component"] = s.dropped_component + 1;
    } else {
        j["pivot"] = nullptr;
        j["dropped_component"] = nullptr;
    }
    return j;
}

} // namespace

NBox parse_box(std::string_view text)
{
    Scanner s(text);
    std::vector<Interval> coords;
    do {
        s.expect('[');
        const double lo = s.number();
        s.expect(',');
        const double hi = s.number();
        s.expect(']');
        if (lo > hi) {
            throw Error(ErrorCode::EmptyInterval, "empty interval [" + format_double(lo) + "," + format_double(hi) + "]");
        }
        if (lo == hi) {
            throw Error(ErrorCode::DegenerateInterval,
                        "degenerate interval [" + format_double(lo) + "," + format_double(hi) + "] in the domain box");
        }
        std::size_t repeat = 1;
        if (s.accept('^')) repeat = s.count();
        coords.insert(coords.end(), repeat, Interval(lo, hi));
    } while (s.accept('x') || s.accept('X'));
    if (!s.done()) s.fail("unexpected trailing text");
    return NBox(std::move(coords));
}

std::vector<double> parse_point(std::string_view text)
{
    Scanner s(text);
    std::vector<double> point;
    do {
        point.push_back(s.number());
    } while (s.accept(','));
    if (!s.done()) s.fail("unexpected trailing text");
    return point;
}

Pivot parse_pivot(std::string_view text)
{
    Scanner s(text);
    const std::size_t position = s.count();
    s.expect(',');
    Pivot p{position, Sign::Plus};
    if (s.accept('-')) {
        p.sign = Sign::Minus;
    } else if (!s.accept('+')) {
        s.fail("expected '+' or '-'");
    }
    if (!s.done()) s.fail("unexpected trailing text");
    return p;
}

std::string format_box(const NBox& box)
{
    std::string out;
    for (std::size_t i = 0; i < box.ambient_dim(); ++i) {
        if (i != 0) out += 'x';
        out += '[' + format_double(box[i].lo) + ',' + format_double(box[i].hi) + ']';
    }
    return out;
}

std::string format_point(std::span<const double> point)
{
    std::string out;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i != 0) out += ',';
        out += format_double(point[i]);
    }
    return out;
}

std::string format_pivot(const Pivot& pivot)
{
    return std::to_string(pivot.position) + ',' + to_char(pivot.sign);
}

const char* to_string(RunStatus s) noexcept
{
    switch (s) {
    case RunStatus::Ok: return "ok";
    case RunStatus::Undecidable: return "undecidable";
    case RunStatus::InputError: return "input_error";
    case RunStatus::Failure: return "failure";
    }
    return "?";
}

RunStatus classify(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Undecidable: return RunStatus::Undecidable;
    case ErrorCode::EmptyDomain:
    case ErrorCode::Syntax:
    case ErrorCode::VariableOutOfRange:
    case ErrorCode::ComponentCount:
    case ErrorCode::InvalidArgument:
    case ErrorCode::EmptyInterval:
    case ErrorCode::DegenerateInterval:
    case ErrorCode::SampleHitZero:
    case ErrorCode::CannotResolve:
    case ErrorCode::ZeroAtEndpoint: return RunStatus::InputError;
    case ErrorCode::NoFaces:
    case ErrorCode::CannotSplit:
    case ErrorCode::MalformedList:
    case ErrorCode::InsufficientInheritance: break;
    }
    return RunStatus::Failure;
}

RunOutcome run_degree(const RunConfig& config)
{
    RunOutcome outcome;
    try {
        if (config.box.ambient_dim() != config.dim) {
            throw Error(ErrorCode::InvalidArgument, "box has dimension " + std::to_string(config.box.ambient_dim())
                                                        + " but the system has " + std::to_string(config.dim));
        }
        if (!config.point.empty() && config.point.size() != config.dim) {
            throw Error(ErrorCode::InvalidArgument, "point has dimension " + std::to_string(config.point.size())
                                                        + " but the system has " + std::to_string(config.dim));
        }
        const FunctionSystem fs = FunctionSystem::parse(config.functions, config.dim);
        outcome.report = compute_degree(fs, config.box, config.point, config.limits,
                                        DegOptions{.top_pivot = config.pivot, .workers = config.workers});
    } catch (const Error& e) {
        outcome.status = classify(e.code());
        outcome.message = e.what();
    } catch (const std::exception& e) {
        outcome.status = RunStatus::Failure;
        outcome.message = e.what();
    }
    return outcome;
}

std::string to_json(const RunConfig& config, const RunOutcome& outcome, bool include_timings)
{
    nlohmann::json doc;
    doc["status"] = to_string(outcome.status);
    doc["message"] = outcome.message.empty() ? nlohmann::json(nullptr) : nlohmann::json(outcome.message);

    nlohmann::json cfg{{"fn", config.functions},
                       {"dim", config.dim},
                       {"box", format_box(config.box)},
                       {"max_depth", config.limits.max_depth},
                       {"max_boxes", config.limits.max_boxes}};
    cfg["point"] = config.point.empty() ? nlohmann::json(nullptr) : nlohmann::json(format_point(config.point));
    cfg["pivot"] = config.pivot ? nlohmann::json(format_pivot(*config.pivot)) : nlohmann::json(nullptr);
    doc["config"] = std::move(cfg);

    if (outcome.report) {
        const DegreeReport& r = *outcome.report;
        doc["degree"] = r.degree;
        nlohmann::json levels = nlohmann::json::array();
        for (const LevelStats& s : r.levels) levels.push_back(level_json(s));
        doc["stats"] = {{"boundary_entries", r.boundary_entries},
                        {"boxes_created", r.refinement.boxes_created},
                        {"max_depth_used", r.refinement.max_depth_used},
                        {"levels", std::move(levels)}};
        doc["timings"] = include_timings ? nlohmann::json{{"refine_ms", r.refine_ms}, {"deg_ms", r.deg_ms}}
                                         : nlohmann::json(nullptr);
    } else {
        doc["degree"] = nullptr;
        doc["stats"] = nullptr;
        doc["timings"] = nullptr;
    }
    return doc.dump(2);
}

} // namespace cubedeg
