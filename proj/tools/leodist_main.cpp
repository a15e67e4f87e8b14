#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leodist/analytic.hpp"
#include "leodist/constellation.hpp"
#include "leodist/montecarlo.hpp"
#include "leodist/validation.hpp"

namespace {

using namespace leodist;

// Locale-independent formatting; CSV output must not depend on the host.
std::string format_number(double value) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

struct SpecSource {
    std::string preset_name;
    std::string config_path;

    ConstellationSpec resolve() const {
        if (!preset_name.empty()) return preset(preset_name);
        return load_config_file(config_path);
    }
};

struct GridOptions {
    std::optional<double> dmin;
    std::optional<double> dmax;
    int steps = 200;

    std::vector<double> resolve(const DistanceDistribution& dist) const {
        if (steps < 1) throw std::invalid_argument("steps must be at least 1");
        const double lo = dmin.value_or(0.9 * dist.min_onset_km());
        const double hi = dmax.value_or(1.05 * dist.max_distance_km());
        if (!(hi > lo)) throw std::invalid_argument("grid needs dmax > dmin");
        std::vector<double> grid;
        grid.reserve(static_cast<std::size_t>(steps) + 1);
        for (int i = 0; i <= steps; ++i) {
            grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps));
        }
        return grid;
    }
};

ObservationPoint parse_observer(const std::string& text) {
    if (text == "earth") return ObservationPoint::earth_surface();
    if (text.rfind("shell:", 0) == 0) {
        const std::string index_part = text.substr(6);
        int index = 0;
        const auto res =
            std::from_chars(index_part.data(), index_part.data() + index_part.size(), index);
        if (res.ec == std::errc() && res.ptr == index_part.data() + index_part.size()) {
            return ObservationPoint::on_shell(index);
        }
    }
    throw std::invalid_argument("observer must be \"earth\" or \"shell:I\" (1-based), got \"" +
                                text + "\"");
}

SamplerKind parse_sampler(const std::string& text) {
    if (text == "colatitude") return SamplerKind::ColatitudeUniform;
    if (text == "area") return SamplerKind::AreaUniform;
    throw std::invalid_argument("sampler must be \"colatitude\" or \"area\", got \"" + text + "\"");
}

void add_spec_options(CLI::App* cmd, SpecSource& source) {
    auto* p = cmd->add_option("--preset", source.preset_name, "named preset (see `presets`)");
    auto* c = cmd->add_option("--config", source.config_path, "path to a JSON constellation config");
    p->excludes(c);
    c->excludes(p);
}

void require_spec_source(const SpecSource& source) {
    if (source.preset_name.empty() && source.config_path.empty()) {
        throw std::invalid_argument("one of --preset or --config is required");
    }
}

void add_grid_options(CLI::App* cmd, GridOptions& grid) {
    cmd->add_option("--dmin", grid.dmin, "grid start in km (default 0.9 x smallest onset)");
    cmd->add_option("--dmax", grid.dmax, "grid end in km (default 1.05 x largest LoS limit)");
    cmd->add_option("--steps", grid.steps, "number of grid intervals")->capture_default_str();
}

int cmd_cdf(const SpecSource& source, const std::string& obs_text, const GridOptions& grid_opts,
            bool per_shell) {
    require_spec_source(source);
    const ConstellationSpec spec = source.resolve();
    const ObservationPoint obs = parse_observer(obs_text);
    const DistanceDistribution dist = DistanceDistribution::build(spec, obs);
    const std::vector<double> grid = grid_opts.resolve(dist);
    const std::vector<SweepRow> rows = sweep_report(spec, obs, grid);

    std::string header = "d_km,cdf";
    if (per_shell) {
        for (std::size_t k = 1; k <= dist.shells().size(); ++k) {
            header += ",ccdf_shell_" + std::to_string(k);
        }
    }
    std::cout << header << "\n";
    for (const SweepRow& row : rows) {
        std::cout << format_number(row.d_km) << ',' << format_number(row.cdf);
        if (per_shell) {
            for (double c : row.shell_ccdfs) std::cout << ',' << format_number(c);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_simulate(const SpecSource& source, const std::string& obs_text,
                 const GridOptions& grid_opts, const SimulationConfig& sim) {
    require_spec_source(source);
    const ConstellationSpec spec = source.resolve();
    const ObservationPoint obs = parse_observer(obs_text);
    const DistanceDistribution dist = DistanceDistribution::build(spec, obs);
    const std::vector<double> grid = grid_opts.resolve(dist);
    const EmpiricalCdf emp = run_experiment(spec, obs, sim);

    std::cout << "d_km,cdf_analytic,cdf_empirical\n";
    for (double d : grid) {
        std::cout << format_number(d) << ',' << format_number(dist.cdf(d)) << ','
                  << format_number(emp.eval(d)) << "\n";
    }
    return 0;
}

int cmd_validate(const SpecSource& source, const std::string& obs_text,
                 const SimulationConfig& sim, double threshold) {
    require_spec_source(source);
    const ConstellationSpec spec = source.resolve();
    const ObservationPoint obs = parse_observer(obs_text);
    const EmpiricalCdf emp = run_experiment(spec, obs, sim);
    const KsReport ks = ks_compare(emp, spec, obs, threshold);
    const InfiniteMassCheck inf = check_infinite_mass(emp, spec, obs);

    std::cout << "trials:                 " << sim.trials << "\n";
    std::cout << "sampler:                "
              << (sim.sampler == SamplerKind::ColatitudeUniform ? "colatitude" : "area") << "\n";
    std::cout << "ks statistic:           " << format_number(ks.statistic) << "\n";
    std::cout << "ks threshold:           " << format_number(ks.threshold) << "\n";
    std::cout << "infinite fraction:      " << format_number(inf.observed_fraction)
              << " (expected " << format_number(inf.expected_fraction) << ", bound +/- "
              << format_number(inf.bound) << ")\n";
    const bool pass = ks.pass && inf.pass;
    std::cout << "result:                 " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass && sim.sampler == SamplerKind::AreaUniform) {
        std::cout << "note: the area-uniform sampler follows a different placement law than the\n"
                     "analytic curves assume; a mismatch against them is expected.\n";
    }
    return pass ? 0 : 1;
}

int cmd_presets(const std::string& name) {
    if (!name.empty()) {
        const ConstellationSpec spec = preset(name);
        std::cout << spec.name << " (" << spec.num_shells() << " shells)\n";
        for (int k = 1; k <= spec.num_shells(); ++k) {
            const ShellSpec& s = spec.shells[static_cast<std::size_t>(k - 1)];
            std::cout << "  shell " << k << ": altitude " << format_number(s.altitude_km)
                      << " km, " << s.num_satellites << " satellites\n";
        }
        return 0;
    }
    for (const std::string& n : preset_names()) {
        const ConstellationSpec spec = preset(n);
        std::cout << n << ": " << spec.num_shells() << " shells, altitudes [";
        for (int k = 0; k < spec.num_shells(); ++k) {
            std::cout << (k ? " " : "") << format_number(spec.shells[static_cast<std::size_t>(k)].altitude_km);
        }
        std::cout << "] km, counts [";
        for (int k = 0; k < spec.num_shells(); ++k) {
            std::cout << (k ? " " : "") << spec.shells[static_cast<std::size_t>(k)].num_satellites;
        }
        std::cout << "]\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contact and nearest-neighbor distance distributions for multi-shell "
                 "satellite constellations"};
    app.require_subcommand(1);

    SpecSource source;
    std::string obs_text;
    GridOptions grid;
    bool per_shell = false;
    SimulationConfig sim;
    sim.trials = 100000;
    std::string sampler_text = "colatitude";
    double threshold = 0.01;
    std::string preset_name;

    CLI::App* cdf = app.add_subcommand("cdf", "print the analytic CDF as CSV");
    add_spec_options(cdf, source);
    cdf->add_option("--obs", obs_text, "observer: earth | shell:I")->required();
    add_grid_options(cdf, grid);
    cdf->add_flag("--per-shell", per_shell, "append one CCDF column per shell");

    CLI::App* simulate = app.add_subcommand("simulate", "print analytic and simulated CDFs as CSV");
    add_spec_options(simulate, source);
    simulate->add_option("--obs", obs_text, "observer: earth | shell:I")->required();
    add_grid_options(simulate, grid);
    simulate->add_option("--trials", sim.trials, "number of Monte-Carlo trials")
        ->capture_default_str();
    simulate->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--sampler", sampler_text, "placement law")
        ->check(CLI::IsMember({"colatitude", "area"}))
        ->capture_default_str();
    simulate->add_option("--workers", sim.workers, "worker threads (0 = auto)")
        ->capture_default_str();

    CLI::App* validate_cmd = app.add_subcommand("validate", "compare simulation against the "
                                                            "analytic distribution");
    add_spec_options(validate_cmd, source);
    validate_cmd->add_option("--obs", obs_text, "observer: earth | shell:I")->required();
    validate_cmd->add_option("--trials", sim.trials, "number of Monte-Carlo trials")
        ->capture_default_str();
    validate_cmd->add_option("--seed", sim.seed, "RNG seed")->capture_default_str();
    validate_cmd->add_option("--sampler", sampler_text, "placement law")
        ->check(CLI::IsMember({"colatitude", "area"}))
        ->capture_default_str();
    validate_cmd->add_option("--workers", sim.workers, "worker threads (0 = auto)")
        ->capture_default_str();
    validate_cmd->add_option("--threshold", threshold, "KS pass threshold")->capture_default_str();

    CLI::App* presets_cmd = app.add_subcommand("presets", "list the bundled presets");
    presets_cmd->add_option("--name", preset_name, "show one preset in detail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        sim.sampler = parse_sampler(sampler_text);
        if (app.got_subcommand(cdf)) return cmd_cdf(source, obs_text, grid, per_shell);
        if (app.got_subcommand(simulate)) return cmd_simulate(source, obs_text, grid, sim);
        if (app.got_subcommand(validate_cmd)) return cmd_validate(source, obs_text, sim, threshold);
        if (app.got_subcommand(presets_cmd)) return cmd_presets(preset_name);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
