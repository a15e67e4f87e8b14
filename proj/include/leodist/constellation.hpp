#pragma once

#include <string>
#include <vector>

#include "leodist/geometry.hpp"

namespace leodist {

struct ShellSpec {
    double altitude_km = 0.0;
    int num_satellites = 0;

    bool operator==(const ShellSpec&) const = default;
};

// Multi-shell constellation description. Shell order defines the 1-based
// indices used at every user-facing surface; shells need not be sorted by
// altitude nor have distinct altitudes.
struct ConstellationSpec {
    std::string name;
    double earth_radius_km = 6371.0;
    std::vector<ShellSpec> shells;

    bool operator==(const ConstellationSpec&) const = default;

    int num_shells() const { return static_cast<int>(shells.size()); }
    EarthGeometry earth() const { return EarthGeometry(earth_radius_km); }
    // 1-based index.
    ShellGeometry shell_geometry(int shell_index) const;
};

// Observer location: on the Earth surface, or one of the process points on
// a shell (1-based index).
class ObservationPoint {
public:
    static ObservationPoint earth_surface() { return ObservationPoint(0); }
    static ObservationPoint on_shell(int shell_index);

    bool is_earth_surface() const { return shell_index_ == 0; }
    int shell_index() const;

    bool operator==(const ObservationPoint&) const = default;

private:
    explicit ObservationPoint(int shell_index) : shell_index_(shell_index) {}
    int shell_index_;  // 0 means earth surface
};

// Throws std::invalid_argument describing the first violated invariant.
void validate(const ConstellationSpec& spec);

// Additionally requires the observer's shell to exist and, for a shell
// observer, to hold at least one satellite.
void validate_observer(const ConstellationSpec& spec, const ObservationPoint& obs);

// Parses the JSON config schema:
//   { "name": string (optional),
//     "earth_radius_km": number (optional, default 6371.0),
//     "shells": [ { "altitude_km": number, "num_satellites": integer }, ... ] }
// Unknown keys are a hard error.
ConstellationSpec parse_config(const std::string& json_text);
ConstellationSpec load_config_file(const std::string& path);

// Emits the schema accepted by parse_config; round-trips to an equal spec.
std::string serialize(const ConstellationSpec& spec);

// Named parameter sets used by the bundled benchmark scenarios.
ConstellationSpec preset(const std::string& name);
const std::vector<std::string>& preset_names();

}  // namespace leodist
