#include "leodist/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace leodist {

namespace {

constexpr double kPi = std::numbers::pi;
// Absorbs floating-point drift at branch boundaries; anything larger is a bug.
constexpr double kAcosClampTol = 1e-12;
constexpr double kQuantileTolKm = 1e-6;
constexpr double kMeanRelTol = 1e-8;

double clamped_acos(double x) {
    if (x > 1.0) {
        if (x > 1.0 + kAcosClampTol) {
            throw std::logic_error("arccos argument " + std::to_string(x) +
                                   " exceeds 1 beyond the clamping tolerance");
        }
        x = 1.0;
    } else if (x < -1.0) {
        if (x < -1.0 - kAcosClampTol) {
            throw std::logic_error("arccos argument " + std::to_string(x) +
                                   " falls below -1 beyond the clamping tolerance");
        }
        x = -1.0;
    }
    return std::acos(x);
}

// base^n for base in [0, 1], stable at large n (n can be in the thousands).
double pow_prob(double base, int n) {
    if (n == 0) return 1.0;
    if (base <= 0.0) return 0.0;
    if (base >= 1.0) return 1.0;
    return std::exp(static_cast<double>(n) * std::log(base));
}

// Probability that one point lands outside the cap of points within chord d
// of the observer, under the colatitude-uniform law.
double miss_probability(double d_km, double onset_km, double obs_radius_km,
                        double target_radius_km) {
    const double arg = 1.0 - (d_km * d_km - onset_km * onset_km) /
                                 (2.0 * obs_radius_km * target_radius_km);
    return 1.0 - clamped_acos(arg) / kPi;
}

// Adaptive Simpson on [a, b] with a pre-evaluated midpoint.
template <typename F>
double adaptive_simpson(const F& f, double a, double fa, double b, double fb, double m, double fm,
                        double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
    if (b <= a) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

}  // namespace

ShellCcdf ShellCcdf::make(CcdfKind kind, double obs_radius_km, double target_radius_km,
                          int exponent, const EarthGeometry& earth) {
    if (obs_radius_km < earth.radius_km) {
        throw std::invalid_argument("observer radius must be at or above the Earth surface");
    }
    if (target_radius_km <= earth.radius_km) {
        throw std::invalid_argument("target shell radius must exceed the Earth radius");
    }
    if (exponent < 0) throw std::invalid_argument("point count must be nonnegative");

    ShellCcdf c;
    c.kind = kind;
    c.obs_radius_km = obs_radius_km;
    c.target_radius_km = target_radius_km;
    c.earth_radius_km = earth.radius_km;
    c.exponent = exponent;
    c.onset_km = std::abs(target_radius_km - obs_radius_km);
    const double re = earth.radius_km;
    c.max_distance_km = std::sqrt(target_radius_km * target_radius_km - re * re) +
                        std::sqrt(obs_radius_km * obs_radius_km - re * re);
    // The plateau is the middle branch at the line-of-sight limit, which
    // keeps the CCDF continuous there; a distance distribution cannot jump
    // at its support edge. For a surface observer this equals the closed
    // form [1 - arccos(r_e/r_t)/pi]^n. One could instead derive the plateau
    // from the limiting cap height written as h_max = 2 r_e^2 / r_o (same
    // shell) or ((r_o + r_t)^2 - d_max^2) / (2 r_o) (different shells);
    // those describe the complementary cap - their arccos argument is the
    // negative of the continuity value - so they disagree with the branch
    // limit and are not used.
    c.plateau = pow_prob(
        miss_probability(c.max_distance_km, c.onset_km, obs_radius_km, target_radius_km),
        exponent);
    return c;
}

ShellCcdf ShellCcdf::contact_from_earth(const ShellGeometry& shell, int n_sat,
                                        const EarthGeometry& earth) {
    return make(CcdfKind::ContactFromEarth, earth.radius_km, shell.radius_km, n_sat, earth);
}

ShellCcdf ShellCcdf::nn_same_shell(const ShellGeometry& shell, int n_sat,
                                   const EarthGeometry& earth) {
    if (n_sat < 1) {
        throw std::invalid_argument("nearest-neighbor observer shell needs at least one point");
    }
    return make(CcdfKind::NnSameShell, shell.radius_km, shell.radius_km, n_sat - 1, earth);
}

ShellCcdf ShellCcdf::nn_cross_shell(const ShellGeometry& obs_shell,
                                    const ShellGeometry& target_shell, int n_sat,
                                    const EarthGeometry& earth) {
    return make(CcdfKind::NnCrossShell, obs_shell.radius_km, target_shell.radius_km, n_sat, earth);
}

double ShellCcdf::eval(double d_km) const {
    if (d_km < onset_km) return 1.0;
    if (d_km > max_distance_km) return plateau;
    return pow_prob(miss_probability(d_km, onset_km, obs_radius_km, target_radius_km), exponent);
}

double ccdf_contact_shell(double d_km, const ShellGeometry& shell, int n_sat,
                          const EarthGeometry& earth) {
    return ShellCcdf::contact_from_earth(shell, n_sat, earth).eval(d_km);
}

double ccdf_nn_same_shell(double d_km, const ShellGeometry& shell, int n_sat,
                          const EarthGeometry& earth) {
    return ShellCcdf::nn_same_shell(shell, n_sat, earth).eval(d_km);
}

double ccdf_nn_cross_shell(double d_km, const ShellGeometry& obs_shell,
                           const ShellGeometry& target_shell, int n_sat,
                           const EarthGeometry& earth) {
    return ShellCcdf::nn_cross_shell(obs_shell, target_shell, n_sat, earth).eval(d_km);
}

DistanceDistribution DistanceDistribution::build(const ConstellationSpec& spec,
                                                 const ObservationPoint& obs) {
    validate_observer(spec, obs);
    const EarthGeometry earth = spec.earth();
    DistanceDistribution dist;
    dist.shells_.reserve(spec.shells.size());
    if (obs.is_earth_surface()) {
        for (int k = 1; k <= spec.num_shells(); ++k) {
            dist.shells_.push_back(ShellCcdf::contact_from_earth(
                spec.shell_geometry(k), spec.shells[static_cast<std::size_t>(k - 1)].num_satellites,
                earth));
        }
    } else {
        const int i = obs.shell_index();
        const ShellGeometry obs_shell = spec.shell_geometry(i);
        for (int k = 1; k <= spec.num_shells(); ++k) {
            const int n = spec.shells[static_cast<std::size_t>(k - 1)].num_satellites;
            if (k == i) {
                dist.shells_.push_back(ShellCcdf::nn_same_shell(obs_shell, n, earth));
            } else {
                dist.shells_.push_back(
                    ShellCcdf::nn_cross_shell(obs_shell, spec.shell_geometry(k), n, earth));
            }
        }
    }
    return dist;
}

double DistanceDistribution::cdf(double d_km) const {
    double prod = 1.0;
    for (const ShellCcdf& c : shells_) prod *= c.eval(d_km);
    return 1.0 - prod;
}

double DistanceDistribution::visibility_probability() const {
    double prod = 1.0;
    for (const ShellCcdf& c : shells_) prod *= c.plateau;
    return 1.0 - prod;
}

double DistanceDistribution::min_onset_km() const {
    double m = shells_.front().onset_km;
    for (const ShellCcdf& c : shells_) m = std::min(m, c.onset_km);
    return m;
}

double DistanceDistribution::max_distance_km() const {
    double m = shells_.front().max_distance_km;
    for (const ShellCcdf& c : shells_) m = std::max(m, c.max_distance_km);
    return m;
}

double DistanceDistribution::quantile(double q) const {
    if (!(q >= 0.0 && q < 1.0)) {
        throw std::domain_error("quantile level must lie in [0, 1), got " + std::to_string(q));
    }
    const double f_inf = visibility_probability();
    if (q >= f_inf) {
        throw std::domain_error("quantile beyond visibility mass: q = " + std::to_string(q) +
                                " but F(infinity) = " + std::to_string(f_inf));
    }
    if (q == 0.0) return min_onset_km();
    double lo = min_onset_km();
    double hi = max_distance_km();
    while (hi - lo > kQuantileTolKm) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) >= q) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

double DistanceDistribution::conditional_mean_distance() const {
    const double f_inf = visibility_probability();
    if (f_inf <= 0.0) {
        throw std::domain_error("conditional mean undefined: visibility probability is zero");
    }
    // E[D 1{D finite}] = integral of (F(inf) - F(t)) over [0, D_top]; split at
    // the branch boundaries so the quadrature only ever sees smooth pieces.
    std::vector<double> cuts{0.0, max_distance_km()};
    for (const ShellCcdf& c : shells_) {
        cuts.push_back(c.onset_km);
        cuts.push_back(c.max_distance_km);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const auto tail = [this, f_inf](double t) { return f_inf - cdf(t); };
    double rough = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        rough += 0.5 * (tail(a) + tail(b)) * (b - a);
    }
    const double tol = std::max(kMeanRelTol * std::abs(rough), 1e-14);
    const double span = cuts.back() - cuts.front();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        total += integrate(tail, a, b, tol * (b - a) / span);
    }
    return total / f_inf;
}

double cdf_combined(double d_km, const ConstellationSpec& spec, const ObservationPoint& obs) {
    return DistanceDistribution::build(spec, obs).cdf(d_km);
}

double visibility_probability(const ConstellationSpec& spec, const ObservationPoint& obs) {
    return DistanceDistribution::build(spec, obs).visibility_probability();
}

double quantile(double q, const ConstellationSpec& spec, const ObservationPoint& obs) {
    return DistanceDistribution::build(spec, obs).quantile(q);
}

double conditional_mean_distance(const ConstellationSpec& spec, const ObservationPoint& obs) {
    return DistanceDistribution::build(spec, obs).conditional_mean_distance();
}

}  // namespace leodist
