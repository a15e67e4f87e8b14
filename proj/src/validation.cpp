#include "leodist/validation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leodist {

double ks_statistic(const EmpiricalCdf& emp, const DistanceDistribution& dist,
                    const std::vector<double>& extra_points_km) {
    if (emp.n_total <= 0) throw std::invalid_argument("empirical CDF is empty");
    const double n = static_cast<double>(emp.n_total);
    const std::vector<double>& xs = emp.finite_distances_km;
    double stat = 0.0;
    for (std::size_t i = 0; i < xs.size();) {
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i]) ++j;
        const double analytic = dist.cdf(xs[i]);
        stat = std::max(stat, std::abs(analytic - static_cast<double>(i) / n));
        stat = std::max(stat, std::abs(analytic - static_cast<double>(j) / n));
        i = j;
    }
    for (double d : extra_points_km) {
        stat = std::max(stat, std::abs(dist.cdf(d) - emp.eval(d)));
    }
    return stat;
}

KsReport ks_compare(const EmpiricalCdf& emp, const ConstellationSpec& spec,
                    const ObservationPoint& obs, double threshold) {
    if (emp.n_total <= 0) throw std::invalid_argument("empirical CDF is empty");
    const DistanceDistribution dist = DistanceDistribution::build(spec, obs);

    KsReport report;
    report.threshold = threshold;
    report.trials = emp.n_total;
    const double top = dist.max_distance_km();
    for (double d = 0.0; d < top; d += 1.0) report.grid_km.push_back(d);
    report.grid_km.push_back(top);
    report.statistic = ks_statistic(emp, dist, report.grid_km);
    report.pass = report.statistic <= threshold;
    return report;
}

InfiniteMassCheck check_infinite_mass(const EmpiricalCdf& emp, const ConstellationSpec& spec,
                                      const ObservationPoint& obs) {
    if (emp.n_total <= 0) throw std::invalid_argument("empirical CDF is empty");
    InfiniteMassCheck check;
    check.expected_fraction =
        1.0 - DistanceDistribution::build(spec, obs).visibility_probability();
    check.observed_fraction =
        static_cast<double>(emp.n_infinite) / static_cast<double>(emp.n_total);
    const double p = check.expected_fraction;
    check.bound = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(emp.n_total));
    check.pass = std::abs(check.observed_fraction - check.expected_fraction) <= check.bound;
    return check;
}

std::vector<SweepRow> sweep_report(const ConstellationSpec& spec, const ObservationPoint& obs,
                                   const std::vector<double>& d_grid_km) {
    for (std::size_t i = 1; i < d_grid_km.size(); ++i) {
        if (d_grid_km[i] < d_grid_km[i - 1]) {
            throw std::invalid_argument("unsorted grid: distances must be ascending");
        }
    }
    const DistanceDistribution dist = DistanceDistribution::build(spec, obs);
    std::vector<SweepRow> rows;
    rows.reserve(d_grid_km.size());
    for (double d : d_grid_km) {
        SweepRow row;
        row.d_km = d;
        row.cdf = dist.cdf(d);
        row.shell_ccdfs.reserve(dist.shells().size());
        for (const ShellCcdf& c : dist.shells()) row.shell_ccdfs.push_back(c.eval(d));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace leodist
