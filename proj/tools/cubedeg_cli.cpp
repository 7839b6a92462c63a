// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

// cubedeg: topological degree of f on a box from the command line.
// Talks to the engine only through the C interface.

#include "cubedeg/cubedeg.h"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_undecidable = 2;
constexpr int exit_input = 3;

struct ProblemDeleter {
    void operator()(cubedeg_problem* p) const { cubedeg_problem_destroy(p); }
};
struct ResultDeleter {
    void operator()(cubedeg_result* r) const { cubedeg_result_destroy(r); }
};
using Problem = std::unique_ptr<cubedeg_problem, ProblemDeleter>;
using Result = std::unique_ptr<cubedeg_result, ResultDeleter>;

struct Options {
    std::string fn;
    std::string box;
    std::size_t dim = 0;
    std::string point;
    unsigned max_depth = 60;
    std::size_t max_boxes = 10'000'000;
    unsigned workers = 1;
    bool json = false;
    bool stats = false;
    bool oracle = false;
    bool no_timings = false;
    std::string pivot;
    std::string benchmark;
    std::string range = "1:6";
};

int exit_code(cubedeg_status s)
{
    switch (s) {
    case CUBEDEG_OK: return exit_ok;
    case CUBEDEG_ERR_UNDECIDABLE: return exit_undecidable;
    case CUBEDEG_ERR_INVALID_ARGUMENT:
    case CUBEDEG_ERR_SYNTAX:
    case CUBEDEG_ERR_DOMAIN:
    case CUBEDEG_ERR_ORACLE: return exit_input;
    default: break;
    }
    return exit_failure;
}

int report_error(cubedeg_status s)
{
    std::cerr << "cubedeg: " << cubedeg_status_name(s) << ": " << cubedeg_last_error() << '\n';
    return exit_code(s);
}

std::optional<std::string> result_json(const cubedeg_result* r, bool timings)
{
    std::size_t need = 0;
    cubedeg_result_json(r, timings ? 1 : 0, nullptr, 0, &need);
    std::string buf(need, '\0');
    if (cubedeg_result_json(r, timings ? 1 : 0, buf.data(), buf.size(), nullptr) != CUBEDEG_OK) return std::nullopt;
    buf.resize(need - 1);
    return buf;
}

// "l,s" with s one of + - (also accepts +1 / -1).
bool parse_pivot(const std::string& text, std::size_t& position, int& sign)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t used = 0;
        const unsigned long l = std::stoul(text.substr(0, comma), &used);
        if (used != comma || l == 0) return false;
        position = l;
    } catch (const std::exception&) {
        return false;
    }
    const std::string s = text.substr(comma + 1);
    if (s == "+" || s == "+1" || s == "1") sign = 1;
    else if (s == "-" || s == "-1") sign = -1;
    else return false;
    return true;
}

cubedeg_status configure(cubedeg_problem* p, const Options& o)
{
    cubedeg_status s = cubedeg_problem_set_limits(p, o.max_depth, o.max_boxes);
    if (s == CUBEDEG_OK) s = cubedeg_problem_set_workers(p, o.workers);
    if (s == CUBEDEG_OK && !o.point.empty()) s = cubedeg_problem_set_point(p, o.point.c_str());
    if (s == CUBEDEG_OK && !o.pivot.empty()) {
        std::size_t position = 0;
        int sign = 0;
        if (!parse_pivot(o.pivot, position, sign)) {
            std::cerr << "cubedeg: invalid_argument: --pivot expects l,s such as 1,-\n";
            return CUBEDEG_ERR_INVALID_ARGUMENT;
        }
        s = cubedeg_problem_set_pivot(p, position, sign);
    }
    return s;
}

void print_stats(const cubedeg_result* r)
{
    std::size_t entries = 0, created = 0;
    unsigned depth = 0;
    double refine_ms = 0, deg_ms = 0;
    cubedeg_result_refinement(r, &entries, &created, &depth);
    cubedeg_result_timings(r, &refine_ms, &deg_ms);
    std::printf("boundary entries: %zu (boxes created %zu, max depth %u)\n", entries, created, depth);
    std::printf("%-5s %-9s %-9s %-12s %-7s %-9s\n", "dim", "entries", "selected", "nonselected", "pivot", "faces");
    const std::size_t levels = cubedeg_result_level_count(r);
    for (std::size_t i = 0; i < levels; ++i) {
        cubedeg_level lv{};
        cubedeg_result_level(r, i, &lv);
        std::string pivot = "-";
        if (lv.pivot_position != 0) pivot = std::to_string(lv.pivot_position) + (lv.pivot_sign > 0 ? ",+" : ",-");
        std::printf("%-5zu %-9zu %-9zu %-12zu %-7s %-9zu\n", lv.dim, lv.entries, lv.selected, lv.nonselected,
                    pivot.c_str(), lv.faces);
    }
    std::printf("refine: %.3f ms\ndeg: %.3f ms\n", refine_ms, deg_ms);
}

int run_single(const Options& o)
{
    if (o.fn.empty() || o.box.empty()) {
        std::cerr << "cubedeg: invalid_argument: --fn and --box are required\n";
        return exit_input;
    }
    cubedeg_problem* raw = nullptr;
    cubedeg_status s = cubedeg_problem_create(o.fn.c_str(), o.box.c_str(), o.dim, &raw);
    if (s != CUBEDEG_OK) return report_error(s);
    Problem problem(raw);
    if ((s = configure(problem.get(), o)) != CUBEDEG_OK) {
        return s == CUBEDEG_ERR_INVALID_ARGUMENT && *cubedeg_last_error() == '\0' ? exit_input : report_error(s);
    }

    std::optional<std::int64_t> oracle;
    if (o.oracle) {
        std::int64_t d = 0;
        const cubedeg_status os = cubedeg_oracle_degree(problem.get(), &d);
        if (os != CUBEDEG_OK) return report_error(os);
        oracle = d;
    }

    cubedeg_result* rraw = nullptr;
    s = cubedeg_compute(problem.get(), &rraw);
    Result result(rraw);
    if (result == nullptr) return report_error(s);
    const std::string message = cubedeg_result_message(result.get());

    std::int64_t degree = 0;
    const bool have_degree = cubedeg_result_degree(result.get(), &degree) == CUBEDEG_OK;
    const bool mismatch = oracle && have_degree && *oracle != degree;

    if (o.json) {
        const auto doc = result_json(result.get(), !o.no_timings);
        if (!doc) return report_error(CUBEDEG_ERR_INTERNAL);
        std::cout << *doc << '\n';
    } else if (have_degree) {
        std::cout << "degree: " << degree << '\n';
        if (oracle) std::cout << "oracle: " << *oracle << (mismatch ? " (MISMATCH)" : " (agrees)") << '\n';
        if (o.stats) print_stats(result.get());
    }
    if (s != CUBEDEG_OK) {
        std::cerr << "cubedeg: " << cubedeg_status_name(s) << ": " << message << '\n';
        return exit_code(s);
    }
    if (mismatch) {
        std::cerr << "cubedeg: oracle degree " << *oracle << " differs from computed degree " << degree << '\n';
        return exit_failure;
    }
    return exit_ok;
}

bool parse_range(const std::string& text, std::size_t& lo, std::size_t& hi)
{
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stoul(text);
        } else {
            lo = std::stoul(text.substr(0, colon));
            hi = std::stoul(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

int run_benchmark(const Options& o)
{
    cubedeg_family family{};
    if (o.benchmark == "identity" || o.benchmark == "id") family = CUBEDEG_FAMILY_IDENTITY;
    else if (o.benchmark == "saddle") family = CUBEDEG_FAMILY_SADDLE;
    else if (o.benchmark == "cuberoot" || o.benchmark == "cbrt")
        family = CUBEDEG_FAMILY_CUBE_ROOT;
    else {
        std::cerr << "cubedeg: invalid_argument: unknown family '" << o.benchmark
                  << "' (identity, saddle, cuberoot)\n";
        return exit_input;
    }
    std::size_t lo = 0, hi = 0;
    if (!parse_range(o.range, lo, hi)) {
        std::cerr << "cubedeg: invalid_argument: --range expects N or A:B with 1 <= A <= B\n";
        return exit_input;
    }
    // In benchmark mode --box names the interval repeated in every coordinate.
    const std::string interval = o.box.empty() ? "[-1,1]" : o.box;

    std::printf("family,n,refine_ms,deg_ms,selected,nonselected,degree\n");
    int worst = exit_ok;
    for (std::size_t n = lo; n <= hi; ++n) {
        std::size_t need = 0;
        cubedeg_family_expression(family, n, nullptr, 0, &need);
        std::string fn(need, '\0');
        cubedeg_family_expression(family, n, fn.data(), fn.size(), nullptr);
        fn.resize(need - 1);
        const std::string box = interval + "^" + std::to_string(n);

        cubedeg_problem* raw = nullptr;
        cubedeg_status s = cubedeg_problem_create(fn.c_str(), box.c_str(), n, &raw);
        if (s != CUBEDEG_OK) return report_error(s);
        Problem problem(raw);
        Options per = o;
        per.point.clear();
        per.pivot.clear();
        if ((s = configure(problem.get(), per)) != CUBEDEG_OK) return report_error(s);

        cubedeg_result* rraw = nullptr;
        s = cubedeg_compute(problem.get(), &rraw);
        Result result(rraw);
        std::int64_t degree = 0;
        if (s != CUBEDEG_OK || cubedeg_result_degree(result.get(), &degree) != CUBEDEG_OK) {
            std::printf("%s,%zu,,,,,%s\n", o.benchmark.c_str(), n, cubedeg_status_name(s));
            std::fflush(stdout);
            if (exit_code(s) > worst) worst = exit_code(s);
            continue;
        }
        double refine_ms = 0, deg_ms = 0;
        cubedeg_result_timings(result.get(), &refine_ms, &deg_ms);
        cubedeg_level top{};
        if (cubedeg_result_level_count(result.get()) > 0) cubedeg_result_level(result.get(), 0, &top);
        std::printf("%s,%zu,%.3f,%.3f,%zu,%zu,%lld\n", o.benchmark.c_str(), n, refine_ms, deg_ms, top.selected,
                    top.nonselected, static_cast<long long>(degree));
        std::fflush(stdout);
    }
    return worst;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Topological degree deg(f, B, p) of f: R^n -> R^n on a box B.\n\n"
                 "Expressions use variables x1..xn, numbers, + - * /, integer powers ^k and\n"
                 "sin cos exp ln sqrt cbrt abs; components are separated by ';'.\n"
                 "Boxes are written [a,b]x[c,d]x... (or [a,b]^n for a cube).\n\n"
                 "Exit codes: 0 success, 1 failure, 2 undecidable within limits, 3 input error.",
                 "cubedeg"};
    app.add_option("--fn", o.fn, "Component expressions separated by ';'");
    app.add_option("--box", o.box, "Domain box, e.g. [-1,1]x[-1,1]; with --benchmark a single interval");
    app.add_option("--dim", o.dim, "Ambient dimension (inferred from --box when omitted)");
    app.add_option("--point", o.point, "Target point p as a,b,... (default origin)");
    app.add_option("--max-depth", o.max_depth, "Maximum bisection depth")->capture_default_str();
    app.add_option("--max-boxes", o.max_boxes, "Maximum number of boxes created")->capture_default_str();
    app.add_option("--workers", o.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_flag("--json", o.json, "Emit one JSON document");
    app.add_flag("--stats", o.stats, "Print per-level statistics and phase timings");
    app.add_flag("--oracle", o.oracle, "Cross-check with the sampling oracle (n <= 2)");
    app.add_flag("--no-timings", o.no_timings, "Leave wall-clock timings out of the JSON document");
    app.add_option("--pivot", o.pivot, "Force the first pivot l,s, e.g. 1,-");
    app.add_option("--benchmark", o.benchmark, "Sweep a built-in family (identity, saddle, cuberoot); CSV output");
    app.add_option("--range", o.range, "Dimensions for --benchmark, N or A:B")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        return o.benchmark.empty() ? run_single(o) : run_benchmark(o);
    } catch (const std::exception& e) {
        std::cerr << "cubedeg: " << e.what() << '\n';
        return exit_failure;
    }
}
