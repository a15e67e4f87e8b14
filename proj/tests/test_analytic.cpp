#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "leodist/analytic.hpp"
#include "leodist/constellation.hpp"
#include "leodist/montecarlo.hpp"

using namespace leodist;

namespace {

constexpr double kPi = 3.14159265358979323846;

double closed_form_ground_plateau(double earth_r, double shell_r, int n) {
    return std::pow(1.0 - std::acos(earth_r / shell_r) / kPi, n);
}

// Probability that a colatitude drawn uniformly from [0, pi] lands outside
// the cap with base-plane offset z, computed without calling acos: the cap
// edge angle is located by bisecting cos(phi) = z / r.
double cap_miss_probability_by_bisection(double z, double r) {
    double lo = 0.0;
    double hi = kPi;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (r * std::cos(mid) > z) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double phi_edge = 0.5 * (lo + hi);
    return 1.0 - phi_edge / kPi;
}

}  // namespace

TEST_CASE("single-shell ground CCDF matches high-precision references") {
    EarthGeometry earth;
    ShellGeometry shell(550.0, earth);

    CHECK(ccdf_contact_shell(400.0, shell, 1, earth) == 1.0);
    CHECK(std::abs(ccdf_contact_shell(1000.0, shell, 1, earth) - 0.9599391030276164) < 1e-12);
    CHECK(std::abs(ccdf_contact_shell(5000.0, shell, 1, earth) - 0.8722441068644836) < 1e-12);

    ShellCcdf c = ShellCcdf::contact_from_earth(shell, 1, earth);
    CHECK(c.onset_km == doctest::Approx(550.0));
    CHECK(c.max_distance_km == doctest::Approx(2703.812123650606).epsilon(1e-12));
    CHECK(std::abs(c.plateau - 0.8722441068644836) < 1e-12);

    SUBCASE("zero satellites means the shell never contributes") {
        for (double d : {100.0, 550.0, 1000.0, 9000.0}) {
            CHECK(ccdf_contact_shell(d, shell, 0, earth) == 1.0);
        }
    }
}

TEST_CASE("nearest-neighbor CCDFs match high-precision references") {
    EarthGeometry earth;
    ShellGeometry inner(1000.0, earth);
    ShellGeometry outer(1325.0, earth);

    CHECK(std::abs(ccdf_nn_same_shell(1000.0, inner, 2, earth) - 0.9567827291672549) < 1e-12);
    CHECK(std::abs(ccdf_nn_cross_shell(500.0, inner, outer, 1, earth) - 0.9839399661534807) <
          1e-12);

    CHECK(ccdf_nn_cross_shell(325.0, inner, outer, 1, earth) == 1.0);
    CHECK(ccdf_nn_cross_shell(100.0, inner, outer, 5, earth) == 1.0);

    SUBCASE("a lone point has no neighbor on its own shell") {
        for (double d : {0.0, 1000.0, 8000.0}) {
            CHECK(ccdf_nn_same_shell(d, inner, 1, earth) == 1.0);
        }
        CHECK_THROWS_AS(ShellCcdf::nn_same_shell(inner, 0, earth), std::invalid_argument);
    }

    SUBCASE("same-shell line-of-sight limit spans the horizon both ways") {
        ShellCcdf c = ShellCcdf::nn_same_shell(inner, 2, earth);
        CHECK(c.max_distance_km == doctest::Approx(7414.040733635067).epsilon(1e-12));
        CHECK(c.onset_km == 0.0);
    }
}

TEST_CASE("branch boundaries are continuous by construction") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> re_dist(6000.0, 6500.0);
    std::uniform_real_distribution<double> alt(200.0, 2000.0);
    std::uniform_int_distribution<int> count(1, 2000);

    for (int it = 0; it < 1000; ++it) {
        EarthGeometry earth(re_dist(rng));
        ShellGeometry a(alt(rng), earth);
        ShellGeometry b(alt(rng), earth);
        int n = count(rng);

        std::vector<ShellCcdf> cases = {
            ShellCcdf::contact_from_earth(a, n, earth),
            ShellCcdf::nn_same_shell(a, n, earth),
            ShellCcdf::nn_cross_shell(a, b, n, earth),
        };
        for (const ShellCcdf& c : cases) {
            CHECK(c.eval(c.onset_km) == 1.0);
            CHECK(c.eval(c.onset_km - 1e-9) == 1.0);
            CHECK(c.eval(c.max_distance_km) == c.plateau);
            CHECK(std::abs(c.eval(c.max_distance_km + 1e-9) - c.plateau) < 1e-12);
        }
    }
}

TEST_CASE("ground plateau equals its closed form") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> re_dist(6000.0, 6500.0);
    std::uniform_real_distribution<double> alt(200.0, 2000.0);
    std::uniform_int_distribution<int> count(1, 2000);

    for (int it = 0; it < 200; ++it) {
        EarthGeometry earth(re_dist(rng));
        ShellGeometry shell(alt(rng), earth);
        int n = count(rng);
        ShellCcdf c = ShellCcdf::contact_from_earth(shell, n, earth);
        CHECK(std::abs(c.plateau -
                       closed_form_ground_plateau(earth.radius_km, shell.radius_km, n)) < 1e-12);
    }
}

TEST_CASE("cap probability agrees with an arccos-free bisection route") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> radius(6000.0, 9000.0);
    std::uniform_real_distribution<double> frac(-1.0, 1.0);

    for (int it = 0; it < 200; ++it) {
        double r = radius(rng);
        double z = frac(rng) * r;
        double direct = 1.0 - std::acos(z / r) / kPi;
        CHECK(std::abs(direct - cap_miss_probability_by_bisection(z, r)) < 1e-9);
    }
}

TEST_CASE("CCDF falls monotonically and with the point count") {
    EarthGeometry earth;
    ShellGeometry shell(550.0, earth);

    SUBCASE("nonincreasing in distance") {
        ShellCcdf c = ShellCcdf::contact_from_earth(shell, 40, earth);
        double prev = c.eval(0.0);
        for (int i = 1; i <= 4000; ++i) {
            double d = 3000.0 * i / 4000.0;
            double v = c.eval(d);
            CHECK(v <= prev);
            prev = v;
        }
    }

    SUBCASE("strictly decreasing in the point count at a fixed distance") {
        double prev = 2.0;
        for (int n : {1, 10, 100, 1000}) {
            double v = ccdf_contact_shell(1000.0, shell, n, earth);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("combined distribution over a whole constellation") {
    SUBCASE("one shell reduces to the complement of its CCDF") {
        EarthGeometry earth;
        ShellGeometry shell(1200.0, earth);
        ConstellationSpec spec;
        spec.shells = {{1200.0, 74}};
        for (double d : {800.0, 1200.0, 1400.0, 2500.0, 9000.0}) {
            CHECK(cdf_combined(d, spec, ObservationPoint::earth_surface()) ==
                  doctest::Approx(1.0 - ccdf_contact_shell(d, shell, 74, earth)).epsilon(1e-15));
        }
    }

    SUBCASE("reference values over multi-shell presets") {
        ObservationPoint earth_obs = ObservationPoint::earth_surface();
        CHECK(std::abs(cdf_combined(1400.0, preset("oneweb"), earth_obs) - 0.9169377826743510) <
              1e-12);
        CHECK(std::abs(cdf_combined(1120.0, preset("fig3-circle"), earth_obs) -
                       0.2921048339542166) < 1e-12);
        CHECK(std::abs(cdf_combined(1150.0, preset("fig3-circle"), earth_obs) -
                       0.5024426552787670) < 1e-12);
        CHECK(cdf_combined(900.0, preset("fig3-circle"), earth_obs) == 0.0);
    }

    SUBCASE("nondecreasing on a dense grid") {
        DistanceDistribution dist =
            DistanceDistribution::build(preset("fig4"), ObservationPoint::on_shell(2));
        double top = 1.05 * dist.max_distance_km();
        double prev = -1.0;
        for (int i = 0; i <= 10000; ++i) {
            double v = dist.cdf(top * i / 10000.0);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(dist.cdf(top) <= dist.visibility_probability() + 1e-15);
    }
}

TEST_CASE("visibility probability per constellation") {
    ObservationPoint earth_obs = ObservationPoint::earth_surface();
    CHECK(std::abs(visibility_probability(preset("leosat"), earth_obs) - 0.9999999995731891) <
          1e-12);
    CHECK(std::abs(visibility_probability(preset("oneweb"), earth_obs) - 0.9999996397540538) <
          1e-12);
    CHECK(visibility_probability(preset("spacex"), earth_obs) > 1.0 - 1e-12);

    SUBCASE("a single sparse shell leaves visible mass below one") {
        ConstellationSpec spec;
        spec.shells = {{550.0, 1}};
        CHECK(std::abs(visibility_probability(spec, earth_obs) - 0.1277558931355164) < 1e-12);
    }
}

TEST_CASE("quantile inverts the combined CDF") {
    ConstellationSpec circle = preset("fig3-circle");
    ObservationPoint earth_obs = ObservationPoint::earth_surface();
    DistanceDistribution dist = DistanceDistribution::build(circle, earth_obs);

    CHECK(dist.quantile(0.0) == doctest::Approx(1110.0));
    CHECK(dist.quantile(0.5024426552787670) == doctest::Approx(1150.0).epsilon(1e-8));

    double q25 = dist.quantile(0.25);
    double q50 = dist.quantile(0.50);
    double q75 = dist.quantile(0.75);
    CHECK(q25 < q50);
    CHECK(q50 < q75);
    CHECK(dist.cdf(q50) == doctest::Approx(0.5).epsilon(1e-6));

    SUBCASE("rejects levels outside the visible mass") {
        CHECK_THROWS_AS(dist.quantile(-0.1), std::domain_error);
        CHECK_THROWS_AS(dist.quantile(1.0), std::domain_error);
        DistanceDistribution oneweb =
            DistanceDistribution::build(preset("oneweb"), earth_obs);
        CHECK_THROWS_WITH_AS(oneweb.quantile(0.99999999),
                             doctest::Contains("beyond visibility mass"), std::domain_error);
    }
}

TEST_CASE("conditional mean distance") {
    ObservationPoint earth_obs = ObservationPoint::earth_surface();

    SUBCASE("single satellite, checked against simulation") {
        ConstellationSpec spec;
        spec.shells = {{550.0, 1}};
        double analytic = conditional_mean_distance(spec, earth_obs);

        SimulationConfig cfg;
        cfg.trials = 1000000;
        cfg.seed = 404;
        EmpiricalCdf emp = run_experiment(spec, earth_obs, cfg);
        REQUIRE(!emp.finite_distances_km.empty());
        double sum = 0.0;
        for (double d : emp.finite_distances_km) sum += d;
        double mc_mean = sum / static_cast<double>(emp.finite_distances_km.size());
        double sq = 0.0;
        for (double d : emp.finite_distances_km) sq += (d - mc_mean) * (d - mc_mean);
        double se = std::sqrt(sq / static_cast<double>(emp.finite_distances_km.size() - 1)) /
                    std::sqrt(static_cast<double>(emp.finite_distances_km.size()));
        CHECK(std::abs(analytic - mc_mean) < 3.0 * se);
    }

    SUBCASE("a dense shell concentrates the distance just above the altitude") {
        ConstellationSpec spec;
        spec.shells = {{550.0, 100000}};
        double mean = conditional_mean_distance(spec, earth_obs);
        CHECK(mean > 550.0);
        CHECK(mean < 550.01);
    }

    SUBCASE("mean sits inside the support and near the median for a tight CDF") {
        ConstellationSpec circle = preset("fig3-circle");
        DistanceDistribution dist = DistanceDistribution::build(circle, earth_obs);
        double mean = dist.conditional_mean_distance();
        CHECK(mean > dist.min_onset_km());
        CHECK(mean < dist.max_distance_km());
        CHECK(std::abs(mean - dist.quantile(0.5)) < 50.0);
    }
}

TEST_CASE("an observer on the surface makes the cross-shell form collapse to the ground one") {
    EarthGeometry earth;
    ShellGeometry shell(777.0, earth);
    ShellCcdf ground = ShellCcdf::contact_from_earth(shell, 12, earth);
    ShellCcdf degenerate =
        ShellCcdf::make(CcdfKind::NnCrossShell, earth.radius_km, shell.radius_km, 12, earth);

    CHECK(degenerate.onset_km == doctest::Approx(ground.onset_km));
    CHECK(degenerate.max_distance_km == doctest::Approx(ground.max_distance_km).epsilon(1e-15));
    for (double d : {700.0, 777.0, 1500.0, 2600.0, 5000.0}) {
        CHECK(degenerate.eval(d) == doctest::Approx(ground.eval(d)).epsilon(1e-15));
    }
}
