#include "leodist/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace leodist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; avoids the library distribution so
// the draw sequence is identical on every platform.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Basis {
    Vec3 axis, e1, e2;
};

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Basis basis_about(const Vec3& axis) {
    if (std::abs(norm(axis) - 1.0) > 1e-9) {
        throw std::invalid_argument("sampling axis must be unit length");
    }
    const double ax = std::abs(axis.x);
    const double ay = std::abs(axis.y);
    const double az = std::abs(axis.z);
    Vec3 helper{1.0, 0.0, 0.0};
    if (ay <= ax && ay <= az) {
        helper = {0.0, 1.0, 0.0};
    } else if (az <= ax && az <= ay) {
        helper = {0.0, 0.0, 1.0};
    }
    Vec3 e1 = cross(axis, helper);
    e1 = (1.0 / norm(e1)) * e1;
    const Vec3 e2 = cross(axis, e1);
    return {axis, e1, e2};
}

void sample_shell_into(std::vector<Vec3>& out, double radius_km, int n, SamplerKind sampler,
                       const Basis& basis, std::mt19937_64& rng) {
    out.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double u = next_unit(rng);
        const double v = next_unit(rng);
        double cos_phi, sin_phi;
        if (sampler == SamplerKind::ColatitudeUniform) {
            const double phi = kPi * u;
            cos_phi = std::cos(phi);
            sin_phi = std::sin(phi);
        } else {
            cos_phi = 2.0 * u - 1.0;
            sin_phi = std::sqrt(std::max(0.0, 1.0 - cos_phi * cos_phi));
        }
        const double theta = kTwoPi * v;
        const double c1 = sin_phi * std::cos(theta);
        const double c2 = sin_phi * std::sin(theta);
        out[static_cast<std::size_t>(i)] = {
            radius_km * (cos_phi * basis.axis.x + c1 * basis.e1.x + c2 * basis.e2.x),
            radius_km * (cos_phi * basis.axis.y + c1 * basis.e1.y + c2 * basis.e2.y),
            radius_km * (cos_phi * basis.axis.z + c1 * basis.e1.z + c2 * basis.e2.z)};
    }
}

struct ExperimentLayout {
    std::vector<double> shell_radii_km;
    std::vector<int> counts;  // observer's own shell already reduced by one
    Vec3 observer;
    EarthGeometry earth{6371.0};
};

ExperimentLayout layout_for(const ConstellationSpec& spec, const ObservationPoint& obs) {
    validate_observer(spec, obs);
    ExperimentLayout lay;
    lay.earth = spec.earth();
    for (int k = 1; k <= spec.num_shells(); ++k) {
        lay.shell_radii_km.push_back(spec.shell_geometry(k).radius_km);
        lay.counts.push_back(spec.shells[static_cast<std::size_t>(k - 1)].num_satellites);
    }
    if (obs.is_earth_surface()) {
        lay.observer = {0.0, 0.0, lay.earth.radius_km};
    } else {
        const int i = obs.shell_index();
        lay.observer = {0.0, 0.0, lay.shell_radii_km[static_cast<std::size_t>(i - 1)]};
        lay.counts[static_cast<std::size_t>(i - 1)] -= 1;
    }
    return lay;
}

double run_trial(const ExperimentLayout& lay, Realization& work, SamplerKind sampler,
                 std::mt19937_64& rng, const Basis& basis) {
    for (std::size_t k = 0; k < lay.shell_radii_km.size(); ++k) {
        sample_shell_into(work.shell_points[k], lay.shell_radii_km[k], lay.counts[k], sampler,
                          basis, rng);
    }
    work.observer = lay.observer;
    return nearest_visible_distance(work, lay.earth);
}

}  // namespace

std::uint64_t trial_stream_seed(std::uint64_t seed, std::int64_t trial_index) {
    const std::uint64_t mixed = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial_index)));
    return splitmix64(mixed + seed);
}

double EmpiricalCdf::eval(double d_km) const {
    if (n_total <= 0) throw std::invalid_argument("empirical CDF is empty");
    const auto it = std::upper_bound(finite_distances_km.begin(), finite_distances_km.end(), d_km);
    return static_cast<double>(it - finite_distances_km.begin()) / static_cast<double>(n_total);
}

double EmpiricalCdf::finite_fraction() const {
    if (n_total <= 0) throw std::invalid_argument("empirical CDF is empty");
    return 1.0 - static_cast<double>(n_infinite) / static_cast<double>(n_total);
}

std::vector<Vec3> sample_shell(const ShellGeometry& shell, int n, SamplerKind sampler,
                               const Vec3& axis, std::mt19937_64& rng) {
    if (n < 0) throw std::invalid_argument("point count must be nonnegative");
    std::vector<Vec3> out;
    sample_shell_into(out, shell.radius_km, n, sampler, basis_about(axis), rng);
    return out;
}

Realization sample_realization(const ConstellationSpec& spec, const ObservationPoint& obs,
                               SamplerKind sampler, std::mt19937_64& rng) {
    const ExperimentLayout lay = layout_for(spec, obs);
    Realization real;
    real.observation = obs;
    real.observer = lay.observer;
    real.shell_points.resize(lay.shell_radii_km.size());
    const Basis basis = basis_about({0.0, 0.0, 1.0});
    for (std::size_t k = 0; k < lay.shell_radii_km.size(); ++k) {
        sample_shell_into(real.shell_points[k], lay.shell_radii_km[k], lay.counts[k], sampler,
                          basis, rng);
    }
    return real;
}

double nearest_visible_distance(const Realization& realization, const EarthGeometry& earth) {
    double best_sq = kInf;
    for (const std::vector<Vec3>& points : realization.shell_points) {
        for (const Vec3& p : points) {
            if (!segment_clears_earth(realization.observer, p, earth)) continue;
            const Vec3 diff = p - realization.observer;
            best_sq = std::min(best_sq, dot(diff, diff));
        }
    }
    return best_sq == kInf ? kInf : std::sqrt(best_sq);
}

EmpiricalCdf run_experiment(const ConstellationSpec& spec, const ObservationPoint& obs,
                            const SimulationConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
    const ExperimentLayout lay = layout_for(spec, obs);

    const std::int64_t trials = config.trials;
    int workers = config.workers;
    if (workers <= 0) {
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    workers = static_cast<int>(std::min<std::int64_t>(workers, trials));

    std::vector<double> results(static_cast<std::size_t>(trials));
    const Basis basis = basis_about({0.0, 0.0, 1.0});

    const auto run_range = [&](std::int64_t begin, std::int64_t end) {
        Realization work;
        work.observation = obs;
        work.shell_points.resize(lay.shell_radii_km.size());
        for (std::size_t k = 0; k < lay.counts.size(); ++k) {
            work.shell_points[k].reserve(static_cast<std::size_t>(lay.counts[k]));
        }
        for (std::int64_t t = begin; t < end; ++t) {
            std::mt19937_64 rng(trial_stream_seed(config.seed, t));
            results[static_cast<std::size_t>(t)] = run_trial(lay, work, config.sampler, rng, basis);
        }
    };

    if (workers == 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        const std::int64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::int64_t begin = static_cast<std::int64_t>(w) * chunk;
            const std::int64_t end = std::min(trials, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    run_range(begin, end);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (std::thread& th : pool) th.join();
        for (const std::exception_ptr& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    EmpiricalCdf emp;
    emp.n_total = trials;
    emp.finite_distances_km.reserve(static_cast<std::size_t>(trials));
    for (double d : results) {
        if (d == kInf) {
            ++emp.n_infinite;
        } else {
            emp.finite_distances_km.push_back(d);
        }
    }
    std::sort(emp.finite_distances_km.begin(), emp.finite_distances_km.end());
    return emp;
}

}  // namespace leodist
