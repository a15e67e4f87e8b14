#include "leodist/geometry.hpp"

#include <stdexcept>
#include <string>

namespace leodist {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

EarthGeometry::EarthGeometry(double radius) : radius_km(radius) {
    require(std::isfinite(radius_km) && radius_km > 0.0,
            "earth radius must be positive, got " + std::to_string(radius));
}

ShellGeometry::ShellGeometry(double altitude, const EarthGeometry& earth)
    : altitude_km(altitude), radius_km(earth.radius_km + altitude) {
    require(std::isfinite(altitude) && altitude > 0.0,
            "shell altitude must be positive, got " + std::to_string(altitude));
}

CapSpec CapSpec::from_height(double height_km, double sphere_radius_km) {
    require(std::isfinite(sphere_radius_km) && sphere_radius_km > 0.0,
            "cap sphere radius must be positive");
    require(height_km >= 0.0 && height_km <= 2.0 * sphere_radius_km,
            "cap height must lie in [0, 2r], got " + std::to_string(height_km));
    return CapSpec{height_km, sphere_radius_km - height_km, sphere_radius_km};
}

double cap_height_earth_obs(double d_km, const ShellGeometry& shell, const EarthGeometry& earth) {
    require(d_km >= shell.altitude_km,
            "cap undefined below the shell-onset distance: d = " + std::to_string(d_km) +
                " km < altitude " + std::to_string(shell.altitude_km) + " km");
    const double a = shell.altitude_km;
    return (d_km * d_km - a * a) / (2.0 * earth.radius_km);
}

double cap_height_cross(double d_km, const ShellGeometry& obs_shell,
                        const ShellGeometry& target_shell) {
    const double delta = std::abs(target_shell.altitude_km - obs_shell.altitude_km);
    require(d_km >= delta,
            "cap undefined below the onset distance: d = " + std::to_string(d_km) +
                " km < altitude gap " + std::to_string(delta) + " km");
    return (d_km * d_km - delta * delta) / (2.0 * obs_shell.radius_km);
}

double cap_height_same(double d_km, const ShellGeometry& shell) {
    require(d_km >= 0.0, "distance must be nonnegative");
    return d_km * d_km / (2.0 * shell.radius_km);
}

double max_los_distance(double obs_radius_km, const ShellGeometry& target_shell,
                        const EarthGeometry& earth) {
    const double re = earth.radius_km;
    require(obs_radius_km >= re, "observer radius must be at or above the Earth surface");
    const double rt = target_shell.radius_km;
    return std::sqrt(rt * rt - re * re) + std::sqrt(obs_radius_km * obs_radius_km - re * re);
}

double chord_from_colatitude(double phi_rad, double obs_radius_km, double target_radius_km) {
    require(phi_rad >= 0.0 && phi_rad <= std::acos(-1.0) + 1e-12, "colatitude must lie in [0, pi]");
    require(obs_radius_km > 0.0 && target_radius_km > 0.0, "radii must be positive");
    const double ro = obs_radius_km;
    const double rt = target_radius_km;
    return std::sqrt(std::max(0.0, ro * ro + rt * rt - 2.0 * ro * rt * std::cos(phi_rad)));
}

double colatitude_from_chord(double d_km, double obs_radius_km, double target_radius_km) {
    require(obs_radius_km > 0.0 && target_radius_km > 0.0, "radii must be positive");
    const double ro = obs_radius_km;
    const double rt = target_radius_km;
    double c = (ro * ro + rt * rt - d_km * d_km) / (2.0 * ro * rt);
    c = std::min(1.0, std::max(-1.0, c));
    return std::acos(c);
}

bool segment_clears_earth(const Vec3& p, const Vec3& q, const EarthGeometry& earth) {
    const double re2 = earth.radius_km * earth.radius_km;
    const Vec3 w = q - p;
    const double ww = dot(w, w);
    if (ww == 0.0) return true;  // degenerate segment, endpoint is outside the ball
    const double t = -dot(p, w) / ww;
    if (t <= 0.0 || t >= 1.0) return true;  // closest approach at an endpoint
    const Vec3 m = p + t * w;
    return dot(m, m) >= re2;
}

}  // namespace leodist
