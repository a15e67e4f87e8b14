#pragma once

#include <vector>

#include "leodist/constellation.hpp"
#include "leodist/geometry.hpp"

namespace leodist {

enum class CcdfKind { ContactFromEarth, NnSameShell, NnCrossShell };

// Piecewise CCDF P(D_k >= d) of the distance from one observer to the
// nearest point on one shell: 1 below the onset distance, a smooth arc
// between onset and the line-of-sight limit, and a constant plateau beyond.
// The plateau is the arc evaluated at the limit, so every branch boundary
// is continuous by construction.
struct ShellCcdf {
    CcdfKind kind = CcdfKind::ContactFromEarth;
    double onset_km = 0.0;          // |target radius - observer radius|
    double max_distance_km = 0.0;   // longest chord with line of sight
    double plateau = 1.0;           // value for d > max_distance_km
    int exponent = 0;               // number of independent points on the shell
    double obs_radius_km = 0.0;
    double target_radius_km = 0.0;
    double earth_radius_km = 0.0;

    double eval(double d_km) const;

    static ShellCcdf contact_from_earth(const ShellGeometry& shell, int n_sat,
                                        const EarthGeometry& earth);
    static ShellCcdf nn_same_shell(const ShellGeometry& shell, int n_sat,
                                   const EarthGeometry& earth);
    static ShellCcdf nn_cross_shell(const ShellGeometry& obs_shell,
                                    const ShellGeometry& target_shell, int n_sat,
                                    const EarthGeometry& earth);
    // Radii given directly; exponent is used as-is.
    static ShellCcdf make(CcdfKind kind, double obs_radius_km, double target_radius_km,
                          int exponent, const EarthGeometry& earth);
};

double ccdf_contact_shell(double d_km, const ShellGeometry& shell, int n_sat,
                          const EarthGeometry& earth);
double ccdf_nn_same_shell(double d_km, const ShellGeometry& shell, int n_sat,
                          const EarthGeometry& earth);
double ccdf_nn_cross_shell(double d_km, const ShellGeometry& obs_shell,
                           const ShellGeometry& target_shell, int n_sat,
                           const EarthGeometry& earth);

// Distribution of the nearest visible distance, F(d) = 1 - prod_k CCDF_k(d).
// Defective in general: 1 - F(infinity) is the probability that no point at
// all has line of sight.
class DistanceDistribution {
public:
    static DistanceDistribution build(const ConstellationSpec& spec, const ObservationPoint& obs);

    double cdf(double d_km) const;
    double visibility_probability() const;  // F at infinity

    // Smallest d with F(d) >= q, by bisection to 1e-6 km; q = 0 returns the
    // edge of the support. Requires 0 <= q < 1 and q < visibility.
    double quantile(double q) const;

    // E[D | D finite], by adaptive quadrature to 1e-8 relative tolerance.
    double conditional_mean_distance() const;

    double min_onset_km() const;
    double max_distance_km() const;
    const std::vector<ShellCcdf>& shells() const { return shells_; }

private:
    std::vector<ShellCcdf> shells_;
};

double cdf_combined(double d_km, const ConstellationSpec& spec, const ObservationPoint& obs);
double visibility_probability(const ConstellationSpec& spec, const ObservationPoint& obs);
double quantile(double q, const ConstellationSpec& spec, const ObservationPoint& obs);
double conditional_mean_distance(const ConstellationSpec& spec, const ObservationPoint& obs);

}  // namespace leodist
