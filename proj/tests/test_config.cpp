#include <sstream>
#include <string>

#include "boussinesq/config.hpp"
#include "boussinesq/scenario.hpp"
#include "doctest.h"

using namespace boussinesq;

TEST_SUITE("config") {
  TEST_CASE("every built-in scenario round-trips through text") {
    for (const auto& name : scenario::builtin_names()) {
      const ScenarioConfig c = scenario::builtin_config(name);
      CHECK(c.name == name);
      CHECK_NOTHROW(c.validate());
      CHECK(parse_config_string(config_to_string(c)) == c);
    }
    CHECK_THROWS_AS((void)scenario::builtin_config("missing"), ConfigError);
  }

  TEST_CASE("missing keys keep defaults; comments and blanks are ignored") {
    const ScenarioConfig c = parse_config_string("# header\n\nname = demo  # trailing comment\nn_cells = 64\n");
    ScenarioConfig expected;
    expected.name = "demo";
    expected.n_cells = 64;
    CHECK(c == expected);
  }

  TEST_CASE("enumerations and lists parse") {
    const ScenarioConfig c = parse_config_string(
        "variant = unfactorized\nreconstruction = unlimited\nconversion = left\ninitial = heap\n"
        "output_times = 0, 0.5 ,1\nend_time = 1\ncorrector = false\ncorrector_center = origin\nunits = si\n");
    CHECK(c.variant == ModelVariant::Unfactorized);
    CHECK(c.reconstruction == hyperbolic::Reconstruction::Unlimited);
    CHECK(c.conversion == splitting::ConversionScheme::LeftOnly);
    CHECK(c.initial == InitialKind::Heap);
    CHECK(c.output_times == std::vector<double>{0.0, 0.5, 1.0});
    CHECK_FALSE(c.corrector);
    CHECK(c.corrector_center == analytic::CorrectorCenter::Origin);
    CHECK(c.units == Units::SI);
  }

  TEST_CASE("malformed input is rejected") {
    const char* bad[] = {
        "n_cells = 64\nn_cells = 65\n",     // duplicate
        "colour = red\n",                   // unknown key
        "n_cells\n",                        // no '='
        "epsilon = abc\n",                  // not a number
        "n_cells = 12.5\n",                 // not an integer
        "n_cells = 4\n",                    // too few cells
        "corrector = yes\n",                // not a boolean
        "variant = spectral\n",             // unknown variant
        "end_time = 1\noutput_times = 0.5, 0.2\n",  // unsorted
        "end_time = 1\noutput_times = 2\n",         // beyond end
        "alpha = 1.2\nvariant = fifth_only\n",      // variant needs alpha = 1
        "cfl = 1.5\n",
        "amplitude = 0\n",
        "direction = 2\n",
        "name =\n",
        "x_min = 5\nx_max = 1\n",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS((void)parse_config_string(text), ConfigError);
    }
  }

  TEST_CASE("names must survive the round trip") {
    ScenarioConfig c;
    c.name = " padded";
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.name = "a#b";
    CHECK_THROWS_AS(c.validate(), ConfigError);
  }

  TEST_CASE("derived run options") {
    ScenarioConfig c = scenario::builtin_config("heap_lf");
    CHECK_FALSE(c.run_options().fixed_dt.has_value());
    c.dt = 0.01;
    CHECK(*c.run_options().fixed_dt == 0.01);
    c.n_disp = 3;
    CHECK(c.step_options().n_disp == 3);
    CHECK(c.grid().size() == c.n_cells);
  }

  TEST_CASE("unreadable files") { CHECK_THROWS_AS((void)load_config("/nonexistent/x.cfg"), ConfigError); }
}
