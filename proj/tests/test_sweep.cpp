#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "helperbounds/sweep.hpp"

using namespace helperbounds;
using sweep::SweepSpec;

namespace {

SweepSpec spec_from(const std::string& text) {
    std::istringstream ss(text);
    return sweep::parse_spec(ss);
}

} // namespace

TEST_CASE("spec parsing with comments and fixed parameters") {
    auto spec = spec_from(
        "# figure sweep\n"
        "setting = binary\n"
        "sweep = C\n"
        "lo = 0.01\n"
        "hi = 0.03\n"
        "steps = 5\n"
        "p1 = 0.05   # source bias\n"
        "p2 = 0.1\n"
        "bounds = cor2, cor4\n");
    CHECK(spec.setting == sweep::Setting::binary);
    CHECK(spec.sweep_var == "C");
    CHECK(spec.steps == 5);
    CHECK(spec.fixed.at("p1") == doctest::Approx(0.05));
    CHECK(spec.bounds.size() == 2);
}

TEST_CASE("spec validation failures") {
    CHECK_THROWS_AS(spec_from("setting = binary\nsweep = C\nlo = 1\nhi = 0\nsteps = 5\n"
                              "p1 = 0.1\np2 = 0.1\nbounds = cor2\n"),
                    sweep::SpecError); // lo >= hi
    CHECK_THROWS_AS(spec_from("setting = binary\nsweep = C\nlo = 0\nhi = 1\nsteps = 1\n"
                              "p1 = 0.1\np2 = 0.1\nbounds = cor2\n"),
                    sweep::SpecError); // steps < 2
    CHECK_THROWS_AS(spec_from("setting = binary\nsweep = C\nlo = 0\nhi = 1\nsteps = 3\n"
                              "p1 = 0.1\np2 = 0.1\nbounds = nosuch\n"),
                    sweep::SpecError); // unknown bound
    CHECK_THROWS_AS(spec_from("setting = binary\nsweep = Q\nlo = 0\nhi = 1\nsteps = 3\n"
                              "p1 = 0.1\np2 = 0.1\nbounds = cor2\n"),
                    sweep::SpecError); // unknown sweep var
    CHECK_THROWS_AS(spec_from("setting = binary\nsweep = C\nlo = 0\nhi = 1\nsteps = 3\n"
                              "p1 = 0.1\nbounds = cor2\n"),
                    sweep::SpecError); // missing p2
    CHECK_THROWS_AS(spec_from("setting = martian\nsweep = C\nlo = 0\nhi = 1\nsteps = 3\n"
                              "bounds = cor2\n"),
                    sweep::SpecError); // unknown setting
}

TEST_CASE("sweep rows ascend and columns match the header") {
    auto spec = spec_from(
        "setting = gaussian\nsweep = P\nlo = 0\nhi = 0.5\nsteps = 6\nP2 = 1\n"
        "bounds = thm6, prop6\n");
    auto table = sweep::run_sweep(spec);
    REQUIRE(table.rows.size() == 6);
    CHECK(table.header.front() == "P");
    CHECK(table.header[1] == "thm6");
    CHECK(table.header[2] == "prop6");
    CHECK(table.header.back() == "prop6.gamma");
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(table.rows[i].size() == table.header.size());
        if (i) CHECK(table.rows[i][0] > table.rows[i - 1][0]);
    }
    // tight at P = 0 against the silent-helper MMSE
    CHECK(table.rows[0][1] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("CSV emission is stable under a parse/emit round trip") {
    auto spec = spec_from(
        "setting = gaussian_sv\nsweep = P2\nlo = 0.5\nhi = 4\nsteps = 4\n"
        "P1 = 1\nP = 1\nN = 1\nbounds = prop7, prop8, thm9\n");
    auto table = sweep::run_sweep(spec);
    std::string csv = sweep::to_csv(table);
    CHECK(csv.find("\r") == std::string::npos); // LF endings only
    std::istringstream in(csv);
    auto parsed = sweep::parse_csv(in);
    CHECK(parsed.header == table.header);
    REQUIRE(parsed.rows.size() == table.rows.size());
    std::string csv2 = sweep::to_csv(parsed);
    CHECK(csv == csv2);
    for (std::size_t i = 0; i < parsed.rows.size(); ++i)
        for (std::size_t j = 0; j < parsed.rows[i].size(); ++j)
            CHECK(parsed.rows[i][j] ==
                  doctest::Approx(table.rows[i][j]).epsilon(1e-11));
}

TEST_CASE("same spec and seed give identical tables") {
    auto spec = spec_from(
        "setting = binary\nsweep = C\nlo = 0.01\nhi = 0.05\nsteps = 3\n"
        "p1 = 0.1\np2 = 0.2\nbounds = thm3, thm4, thm2\n");
    sweep::RunOptions opt;
    opt.seed = 9;
    opt.budget = 500;
    auto a = sweep::run_sweep(spec, opt);
    auto b = sweep::run_sweep(spec, opt);
    CHECK(sweep::to_csv(a) == sweep::to_csv(b));
}

TEST_CASE("erasure sweep hits zero once cost covers the interference bias") {
    auto spec = spec_from(
        "setting = erasure\nsweep = C\nlo = 0\nhi = 0.5\nsteps = 6\n"
        "p1 = 0.1\np2 = 0.3\nbounds = prop4\n");
    auto table = sweep::run_sweep(spec);
    for (const auto& row : table.rows) {
        if (row[0] >= 0.3) CHECK(row[1] == 0.0);
        CHECK(row[1] >= 0.0);
    }
}
