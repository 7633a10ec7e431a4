#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nvres/config.hpp"
#include "nvres/sweep.hpp"

using namespace nvres;

TEST_CASE("quantity parsing with unit suffixes") {
    CHECK(parse_quantity("15 um") == doctest::Approx(15e-6).epsilon(1e-15));
    CHECK(parse_quantity("300nm") == doctest::Approx(300e-9).epsilon(1e-15));
    CHECK(parse_quantity("1 kHz") == 1.0);
    CHECK(parse_quantity("2MHz") == 2000.0);
    CHECK(parse_quantity("6.3 ms") == 6.3);
    CHECK(parse_quantity("2 s") == 2000.0);
    CHECK(parse_quantity("130 GPa") == doctest::Approx(130e9));
    CHECK(parse_quantity("1e6 T/m") == doctest::Approx(1e6));
    CHECK(parse_quantity("-0.5") == -0.5);
    CHECK_THROWS_AS((void)parse_quantity("abc"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_quantity("3 parsec"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_quantity(""), std::invalid_argument);
}

TEST_CASE("config text parsing") {
    const Config cfg = Config::parse_text(
        "# reference cantilever\n"
        "length_1 = 15 um\n"
        "\n"
        "alpha = 1 kHz   # direct coupling\n"
        "mass_1 = 3.5e-16\n");
    CHECK(cfg.require("length_1") == doctest::Approx(15e-6));
    CHECK(cfg.require("alpha") == 1.0);
    CHECK(cfg.require("mass_1") == doctest::Approx(3.5e-16));
    CHECK_FALSE(cfg.get("missing").has_value());
    CHECK(cfg.get_or("missing", 7.0) == 7.0);
    CHECK_THROWS_AS((void)cfg.require("missing"), std::invalid_argument);
}

TEST_CASE("config errors carry line numbers") {
    try {
        (void)Config::parse_text("a = 1\nbroken line\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 2);
    }
    try {
        (void)Config::parse_text("a = 1\nb = 2\nc = 3 furlongs\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("g17 formatting is stable") {
    CHECK(format_g17(0.5) == "0.5");
    CHECK(format_g17(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("run spec validation") {
    RunSpec spec;
    spec.n_points = 1;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.n_points = 10;
    spec.t_end = spec.t_start;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.t_end = 1.0;
    spec.mode = RunMode::Sweep;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // no axis
    spec.sweep_axis = "gamma_d";
    spec.sweep_values = {0.5, 1.0};
    CHECK_NOTHROW(spec.validate());
    spec.sweep_values.push_back(std::nan(""));
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("metadata round-trips to an equivalent spec and identical output") {
    RunSpec spec;
    spec.mode = RunMode::Negativity;
    spec.parameters = {{"alpha", 1.0}, {"beta", 2.0}, {"n_1", 0.0}, {"n_3", 0.0}};
    spec.initial_state = "pair";
    spec.t_start = 0.0;
    spec.t_end = 6.3;
    spec.n_points = 25;

    const std::string csv = negativity_csv(spec);
    const RunSpec back = parse_metadata(csv);
    CHECK(back.mode == spec.mode);
    CHECK(back.parameters == spec.parameters);
    CHECK(back.initial_state == spec.initial_state);
    CHECK(back.t_start == spec.t_start);
    CHECK(back.t_end == spec.t_end);
    CHECK(back.n_points == spec.n_points);
    CHECK(negativity_csv(back) == csv);  // byte-identical rerun
}

TEST_CASE("deterministic output for identical specs") {
    RunSpec spec;
    spec.mode = RunMode::Lindblad;
    spec.parameters = {{"alpha", 1.0}, {"beta", 1.0}, {"gamma_d", 0.5}, {"gamma_e", 1.0}};
    spec.t_end = 2.0;
    spec.n_points = 9;
    CHECK(lindblad_csv(spec) == lindblad_csv(spec));
}

TEST_CASE("negativity csv reports the closed form only for the pair states") {
    RunSpec spec;
    spec.parameters = {{"alpha", 1.0}, {"beta", 2.0}};
    spec.n_points = 5;
    spec.t_end = 1.0;
    CHECK(negativity_csv(spec).find("negativity_closed_form") != std::string::npos);
    spec.initial_state = "equal";
    CHECK(negativity_csv(spec).find("negativity_closed_form") == std::string::npos);
}

TEST_CASE("lindblad csv can dump the full matrix") {
    RunSpec spec;
    spec.mode = RunMode::Lindblad;
    spec.parameters = {{"alpha", 1.0}, {"beta", 1.0}, {"gamma_d", 0.5}, {"gamma_e", 1.0}};
    spec.t_end = 1.0;
    spec.n_points = 3;
    spec.dump_rho = true;
    const std::string csv = lindblad_csv(spec);
    CHECK(csv.find("rho_re_9_9") != std::string::npos);
    CHECK(csv.find("rho_im_1_2") != std::string::npos);
}
