#pragma once

#include <cstdint>
#include <vector>

#include "leodist/analytic.hpp"
#include "leodist/constellation.hpp"
#include "leodist/montecarlo.hpp"

namespace leodist {

// Kolmogorov-Smirnov comparison of an empirical CDF against the analytic
// one. The statistic is the largest absolute gap seen at any sample jump
// point (both sides) or grid point; both CDFs are normalized by the total
// trial count, so only the finite mass is compared here.
struct KsReport {
    double statistic = 0.0;
    double threshold = 0.0;
    std::int64_t trials = 0;
    std::vector<double> grid_km;
    bool pass = false;
};

KsReport ks_compare(const EmpiricalCdf& emp, const ConstellationSpec& spec,
                    const ObservationPoint& obs, double threshold);

// Largest |F_emp - F_analytic| over the sample jump points (both sides of
// each jump) and the given extra evaluation points.
double ks_statistic(const EmpiricalCdf& emp, const DistanceDistribution& dist,
                    const std::vector<double>& extra_points_km);

// The infinite-outcome fraction checked against 1 - visibility probability
// with a binomial four-sigma bound; the complement of what ks_compare sees.
struct InfiniteMassCheck {
    double expected_fraction = 0.0;
    double observed_fraction = 0.0;
    double bound = 0.0;  // four binomial sigmas
    bool pass = false;
};

InfiniteMassCheck check_infinite_mass(const EmpiricalCdf& emp, const ConstellationSpec& spec,
                                      const ObservationPoint& obs);

// One evaluation row: combined CDF plus each shell's CCDF.
struct SweepRow {
    double d_km = 0.0;
    double cdf = 0.0;
    std::vector<double> shell_ccdfs;
};

// Rows over an ascending grid of distances; feeds the CSV output.
std::vector<SweepRow> sweep_report(const ConstellationSpec& spec, const ObservationPoint& obs,
                                   const std::vector<double>& d_grid_km);

}  // namespace leodist
