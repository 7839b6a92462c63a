// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/error.hpp"
#include "cubedeg/families.hpp"
#include "cubedeg/run.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace cubedeg;

namespace {

ErrorCode code_of(const auto& body)
{
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

RunConfig config(std::string fn, std::string box)
{
    RunConfig c;
    c.box = parse_box(box);
    c.dim = c.box.ambient_dim();
    c.functions = std::move(fn);
    return c;
}

} // namespace

TEST_SUITE("run") {

TEST_CASE("box parsing")
{
    const NBox b = parse_box("[-1,1]x[-1,1]");
    CHECK(b == NBox({{-1, 1}, {-1, 1}}));
    CHECK(parse_box(" [ -0.001 , 1 ] x [0,2e0]") == NBox({{-0.001, 1}, {0, 2}}));
    CHECK(parse_box("[-1,1]^3") == NBox(std::vector<Interval>(3, Interval(-1, 1))));
    CHECK(parse_box("[0,1]x[2,3]^2") == NBox({{0, 1}, {2, 3}, {2, 3}}));
    CHECK(code_of([] { (void)parse_box("[1,0]"); }) == ErrorCode::EmptyInterval);
    CHECK(code_of([] { (void)parse_box("[1,1]"); }) == ErrorCode::DegenerateInterval);
    for (const char* bad : {"", "[0,1", "[0;1]", "[0,1]y[0,1]", "[a,1]", "[0,1]^0", "[0,inf]", "[0,1]x"}) {
        CHECK_MESSAGE(code_of([&] { (void)parse_box(bad); }) == ErrorCode::InvalidArgument, bad);
    }
}

TEST_CASE("box formatting round-trips")
{
    for (const char* text : {"[-1,1]x[-1,1]", "[-0.001,1]", "[0.1,0.30000000000000004]x[-3,7.5]"}) {
        const NBox b = parse_box(text);
        CHECK(parse_box(format_box(b)) == b);
    }
    CHECK(format_box(parse_box("[-1,1]x[0,0.5]")) == "[-1,1]x[0,0.5]");
}

TEST_CASE("point and pivot parsing")
{
    CHECK(parse_point("1,-2.5") == std::vector<double>{1, -2.5});
    CHECK(code_of([] { (void)parse_point("1,,2"); }) == ErrorCode::InvalidArgument);
    const Pivot p = parse_pivot("3,-");
    CHECK(p.position == 3);
    CHECK(p.sign == Sign::Minus);
    CHECK(format_pivot(p) == "3,-");
    CHECK(code_of([] { (void)parse_pivot("0,+"); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { (void)parse_pivot("1,x"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("run statuses")
{
    CHECK(run_degree(config("x1;x2", "[-1,1]x[-1,1]")).report->degree == 1);
    CHECK(run_degree(config("x1^2-x2^2;2*x1*x2", "[-1,1]x[-1,1]")).report->degree == 2);
    const RunOutcome undecidable = run_degree(config("x1;x2", "[0,1]x[-1,1]"));
    CHECK(undecidable.status == RunStatus::Undecidable);
    CHECK(!undecidable.report);
    CHECK(!undecidable.message.empty());
    CHECK(run_degree(config("x1+;x2", "[-1,1]^2")).status == RunStatus::InputError);
    CHECK(run_degree(config("x1", "[-1,1]^2")).status == RunStatus::InputError);
    RunConfig bad_point = config("x1;x2", "[-1,1]^2");
    bad_point.point = {1, 2, 3};
    CHECK(run_degree(bad_point).status == RunStatus::InputError);
    CHECK(classify(ErrorCode::MalformedList) == RunStatus::Failure);
}

TEST_CASE("json document")
{
    RunConfig c = config(family_expression(Family::Saddle, 3), "[-1,1]^3");
    c.pivot = Pivot{2, Sign::Minus};
    const RunOutcome out = run_degree(c);
    const auto doc = nlohmann::json::parse(to_json(c, out, false));
    CHECK(doc["status"] == "ok");
    CHECK(doc["degree"] == 0);
    CHECK(doc["timings"].is_null());
    CHECK(doc["config"]["pivot"] == "2,-");
    CHECK(doc["config"]["box"] == "[-1,1]x[-1,1]x[-1,1]");
    CHECK(doc["stats"]["levels"].size() == 3);
    CHECK(doc["stats"]["levels"][0]["pivot"] == "2,-");

    const auto timed = nlohmann::json::parse(to_json(c, out, true));
    CHECK(timed["timings"]["refine_ms"].is_number());
    CHECK(timed["timings"]["deg_ms"].is_number());

    // Re-running the echoed configuration reproduces the document.
    RunConfig echoed;
    echoed.functions = doc["config"]["fn"];
    echoed.box = parse_box(doc["config"]["box"].get<std::string>());
    echoed.dim = doc["config"]["dim"];
    echoed.pivot = parse_pivot(doc["config"]["pivot"].get<std::string>());
    echoed.limits = {doc["config"]["max_depth"], doc["config"]["max_boxes"]};
    echoed.workers = 3;
    CHECK(to_json(echoed, run_degree(echoed), false) == to_json(c, out, false));

    const RunConfig failing = config("x1;x2", "[0,1]x[-1,1]");
    const auto err = nlohmann::json::parse(to_json(failing, run_degree(failing), true));
    CHECK(err["status"] == "undecidable");
    CHECK(err["degree"].is_null());
    CHECK(err["message"].is_string());
}

TEST_CASE("families")
{
    CHECK(family_expression(Family::Identity, 3) == "x1; x2; x3");
    CHECK(family_from_name("saddle") == Family::Saddle);
    CHECK(family_from_name("cbrt") == Family::CubeRoot);
    CHECK(!family_from_name("nope").has_value());
    const FunctionSystem fs = FunctionSystem::parse(family_expression(Family::CubeRoot, 3), 3);
    CHECK(fs.ambient_dim() == 3);
}

} // TEST_SUITE
