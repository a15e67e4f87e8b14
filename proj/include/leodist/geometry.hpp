#pragma once

#include <cmath>

namespace leodist {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// Spherical Earth. Kilometers throughout; no unit conversion inside the core.
struct EarthGeometry {
    double radius_km;
    explicit EarthGeometry(double radius_km = 6371.0);
};

// One constellation shell concentric with the Earth.
struct ShellGeometry {
    double altitude_km;
    double radius_km;  // earth radius + altitude
    ShellGeometry(double altitude_km, const EarthGeometry& earth);
};

// Spherical cap described by its height and the offset of its base plane
// from the sphere center, z = r - h.
struct CapSpec {
    double height_km;
    double plane_offset_km;
    double sphere_radius_km;
    static CapSpec from_height(double height_km, double sphere_radius_km);
};

// Height of the cap cut out of `shell` by a ball of radius d centered at an
// observer on the Earth surface. Defined for d >= shell altitude (the ball
// first touches the shell at d = altitude).
double cap_height_earth_obs(double d_km, const ShellGeometry& shell, const EarthGeometry& earth);

// Cap height on `target_shell` within distance d of an observation point on
// `obs_shell`. Defined for d >= |altitude difference|.
double cap_height_cross(double d_km, const ShellGeometry& obs_shell, const ShellGeometry& target_shell);

// Cap height on the observer's own shell, d >= 0.
double cap_height_same(double d_km, const ShellGeometry& shell);

// Longest chord with line of sight (Earth-tangent) from an observer at
// obs_radius_km to a point on target_shell. obs_radius_km equal to the
// earth radius gives the ground-observer case; equal to the target radius
// gives the same-shell case. The three cases are one formula.
double max_los_distance(double obs_radius_km, const ShellGeometry& target_shell,
                        const EarthGeometry& earth);

// Chord between a point at obs_radius and a point at target_radius whose
// colatitude from the observer axis is phi. Strictly increasing in phi.
double chord_from_colatitude(double phi_rad, double obs_radius_km, double target_radius_km);

// Inverse of chord_from_colatitude on [0, pi].
double colatitude_from_chord(double d_km, double obs_radius_km, double target_radius_km);

// True iff the segment pq stays outside the open Earth ball; grazing the
// surface counts as clear. Both endpoints must be at or above the surface.
bool segment_clears_earth(const Vec3& p, const Vec3& q, const EarthGeometry& earth);

}  // namespace leodist
