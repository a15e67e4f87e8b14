#include <stdexcept>
#include <string>

#include <doctest.h>

#include "leodist/constellation.hpp"

using namespace leodist;

TEST_CASE("minimal config parses and exposes shell geometry") {
    ConstellationSpec spec =
        parse_config(R"({"shells":[{"altitude_km":550,"num_satellites":1584}]})");
    CHECK(spec.num_shells() == 1);
    CHECK(spec.earth_radius_km == 6371.0);
    CHECK(spec.shell_geometry(1).radius_km == doctest::Approx(6921.0));
    CHECK(spec.shells[0].num_satellites == 1584);
    CHECK_NOTHROW(validate(spec));
}

TEST_CASE("config validation rejects bad shells") {
    ConstellationSpec spec;
    spec.shells = {{550.0, 100}};
    CHECK_NOTHROW(validate(spec));

    spec.shells[0].altitude_km = 0.0;
    CHECK_THROWS_WITH_AS(validate(spec), doctest::Contains("positive"), std::invalid_argument);

    spec.shells[0].altitude_km = 550.0;
    spec.shells[0].num_satellites = -1;
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);

    spec.shells[0].num_satellites = 1000001;
    CHECK_THROWS_WITH_AS(validate(spec), doctest::Contains("sanity bound"), std::invalid_argument);

    spec.shells.clear();
    CHECK_THROWS_WITH_AS(validate(spec), doctest::Contains("at least one shell"),
                         std::invalid_argument);

    spec.shells = {{550.0, 100}};
    spec.earth_radius_km = 0.0;
    CHECK_THROWS_AS(validate(spec), std::invalid_argument);
}

TEST_CASE("earth radius override flows into shell geometry") {
    ConstellationSpec spec = parse_config(
        R"({"earth_radius_km":6000,"shells":[{"altitude_km":500,"num_satellites":10}]})");
    CHECK(spec.earth_radius_km == 6000.0);
    CHECK(spec.shell_geometry(1).radius_km == doctest::Approx(6500.0));
}

TEST_CASE("config parsing is strict") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"shells":[{"altitude_km":550,"num_satellites":1}],"extra":1})"),
        doctest::Contains("unknown key \"extra\""), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"shells":[{"altitude_km":550,"num_satellites":1,"color":"red"}]})"),
        doctest::Contains("unknown key \"color\""), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"shells":[{"altitude_km":550,"num_satellites":1.5}]})"),
        doctest::Contains("integer"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config(R"({"shells":[]})"),
                         doctest::Contains("at least one shell"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config(R"({"name":"x"})"), doctest::Contains("missing"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config("not json"), doctest::Contains("malformed"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_config("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(load_config_file("/nonexistent/path.json"), std::invalid_argument);
}

TEST_CASE("serialize round-trips every preset") {
    for (const std::string& name : preset_names()) {
        ConstellationSpec spec = preset(name);
        CHECK(parse_config(serialize(spec)) == spec);
    }
}

TEST_CASE("bundled presets") {
    CHECK(preset_names().size() == 8);
    for (const std::string& name : preset_names()) CHECK_NOTHROW(validate(preset(name)));

    ConstellationSpec oneweb = preset("oneweb");
    CHECK(oneweb.num_shells() == 1);
    CHECK(oneweb.shells[0].altitude_km == 1200.0);
    CHECK(oneweb.shells[0].num_satellites == 74);

    ConstellationSpec fig4 = preset("fig4");
    int total = 0;
    for (const ShellSpec& s : fig4.shells) total += s.num_satellites;
    CHECK(total == 1505);

    CHECK(preset("spacex").num_shells() == 5);
    CHECK(preset("fig3-circle").shells[3].altitude_km == 1325.0);

    CHECK_THROWS_WITH_AS(preset("bogus"), doctest::Contains("available presets"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(preset("bogus"), doctest::Contains("oneweb"), std::invalid_argument);
}

TEST_CASE("observer validation") {
    ConstellationSpec spec = preset("fig4");

    CHECK_NOTHROW(validate_observer(spec, ObservationPoint::earth_surface()));
    CHECK_NOTHROW(validate_observer(spec, ObservationPoint::on_shell(1)));
    CHECK_NOTHROW(validate_observer(spec, ObservationPoint::on_shell(4)));
    CHECK_THROWS_WITH_AS(validate_observer(spec, ObservationPoint::on_shell(5)),
                         doctest::Contains("out of range"), std::invalid_argument);
    CHECK_THROWS_AS(ObservationPoint::on_shell(0), std::invalid_argument);
    CHECK_THROWS_AS(ObservationPoint::on_shell(-2), std::invalid_argument);

    spec.shells[1].num_satellites = 0;
    CHECK_THROWS_WITH_AS(validate_observer(spec, ObservationPoint::on_shell(2)),
                         doctest::Contains("no satellites"), std::invalid_argument);
    CHECK_NOTHROW(validate_observer(spec, ObservationPoint::earth_surface()));

    CHECK(ObservationPoint::earth_surface().is_earth_surface());
    CHECK_FALSE(ObservationPoint::on_shell(3).is_earth_surface());
    CHECK(ObservationPoint::on_shell(3).shell_index() == 3);
    CHECK_THROWS_AS(ObservationPoint::earth_surface().shell_index(), std::invalid_argument);
}
