#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "leodist/constellation.hpp"
#include "leodist/geometry.hpp"

namespace leodist {

// ColatitudeUniform draws the colatitude (angle from the observer axis)
// uniformly on [0, pi]; it is the law under which the analytic module's cap
// probabilities are exact. AreaUniform is the uniform-by-surface-area law
// (cos of the colatitude uniform on [-1, 1]), shipped as a diagnostic; its
// distances measurably deviate from the analytic curves.
enum class SamplerKind { ColatitudeUniform, AreaUniform };

struct SimulationConfig {
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    SamplerKind sampler = SamplerKind::ColatitudeUniform;
    int workers = 0;  // 0 = one per hardware thread
};

// One draw of the whole constellation. For the nearest-neighbor scenario the
// observer's own shell holds the remaining points (its count minus one) and
// the observer itself sits at the pole of its shell.
struct Realization {
    std::vector<std::vector<Vec3>> shell_points;
    Vec3 observer{};
    ObservationPoint observation = ObservationPoint::earth_surface();
};

// Empirical distribution of one experiment: sorted finite distances plus the
// count of trials that saw no visible point at all.
struct EmpiricalCdf {
    std::vector<double> finite_distances_km;
    std::int64_t n_infinite = 0;
    std::int64_t n_total = 0;

    // #{samples <= d} / n_total; tops out at 1 - n_infinite/n_total.
    double eval(double d_km) const;
    double finite_fraction() const;

    bool operator==(const EmpiricalCdf&) const = default;
};

// n independent points on the shell, colatitude measured from `axis` (must
// be unit length) per the sampler, azimuth uniform.
std::vector<Vec3> sample_shell(const ShellGeometry& shell, int n, SamplerKind sampler,
                               const Vec3& axis, std::mt19937_64& rng);

// Observer at the pole position of its sphere; every shell sampled about the
// observer axis.
Realization sample_realization(const ConstellationSpec& spec, const ObservationPoint& obs,
                               SamplerKind sampler, std::mt19937_64& rng);

// Minimum distance from the observer to any point with line of sight;
// +infinity when no point is visible.
double nearest_visible_distance(const Realization& realization, const EarthGeometry& earth);

// Runs config.trials independent draws and collects the empirical CDF of the
// nearest visible distance. Output is a function of (spec, obs, trials, seed,
// sampler) only; the worker count never changes the result.
EmpiricalCdf run_experiment(const ConstellationSpec& spec, const ObservationPoint& obs,
                            const SimulationConfig& config);

// Seed of the dedicated random stream of one trial. A fixed 64-bit mix of
// (seed, trial index), so any partitioning of trials across workers
// reproduces the same per-trial draws.
std::uint64_t trial_stream_seed(std::uint64_t seed, std::int64_t trial_index);

}  // namespace leodist
