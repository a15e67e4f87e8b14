#include "leodist/constellation.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace leodist {

namespace {

using nlohmann::json;

constexpr int kMaxSatellitesPerShell = 1'000'000;

[[noreturn]] void fail(const std::string& message) { throw std::invalid_argument(message); }

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const char* where) {
    for (const auto& [key, value] : object.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) { ok = true; break; }
        }
        if (!ok) fail(std::string("unknown key \"") + key + "\" in " + where);
    }
}

}  // namespace

ShellGeometry ConstellationSpec::shell_geometry(int shell_index) const {
    if (shell_index < 1 || shell_index > num_shells()) {
        fail("shell index out of range: " + std::to_string(shell_index) + " (constellation has " +
             std::to_string(num_shells()) + " shells)");
    }
    return ShellGeometry(shells[static_cast<std::size_t>(shell_index - 1)].altitude_km, earth());
}

ObservationPoint ObservationPoint::on_shell(int shell_index) {
    if (shell_index < 1) fail("shell index must be 1-based and positive");
    return ObservationPoint(shell_index);
}

int ObservationPoint::shell_index() const {
    if (is_earth_surface()) fail("earth-surface observer has no shell index");
    return shell_index_;
}

void validate(const ConstellationSpec& spec) {
    if (!(std::isfinite(spec.earth_radius_km) && spec.earth_radius_km > 0.0)) {
        fail("earth_radius_km must be positive");
    }
    if (spec.shells.empty()) fail("constellation must have at least one shell");
    for (std::size_t i = 0; i < spec.shells.size(); ++i) {
        const ShellSpec& s = spec.shells[i];
        const std::string where = "shell " + std::to_string(i + 1);
        if (!(std::isfinite(s.altitude_km) && s.altitude_km > 0.0)) {
            fail(where + ": altitude must be positive");
        }
        if (s.num_satellites < 0) fail(where + ": num_satellites must be nonnegative");
        if (s.num_satellites > kMaxSatellitesPerShell) {
            fail(where + ": num_satellites exceeds the sanity bound of " +
                 std::to_string(kMaxSatellitesPerShell));
        }
    }
}

void validate_observer(const ConstellationSpec& spec, const ObservationPoint& obs) {
    validate(spec);
    if (obs.is_earth_surface()) return;
    const int i = obs.shell_index();
    if (i < 1 || i > spec.num_shells()) {
        fail("shell index out of range: observer on shell " + std::to_string(i) +
             " but constellation has " + std::to_string(spec.num_shells()) + " shells");
    }
    if (spec.shells[static_cast<std::size_t>(i - 1)].num_satellites < 1) {
        fail("observer shell " + std::to_string(i) + " has no satellites");
    }
}

ConstellationSpec parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed config: ") + e.what());
    }
    if (!root.is_object()) fail("config root must be a JSON object");
    reject_unknown_keys(root, {"name", "earth_radius_km", "shells"}, "config root");

    ConstellationSpec spec;
    if (root.contains("name")) {
        if (!root["name"].is_string()) fail("\"name\" must be a string");
        spec.name = root["name"].get<std::string>();
    }
    if (root.contains("earth_radius_km")) {
        if (!root["earth_radius_km"].is_number()) fail("\"earth_radius_km\" must be a number");
        spec.earth_radius_km = root["earth_radius_km"].get<double>();
    }
    if (!root.contains("shells")) fail("config is missing \"shells\"");
    const json& shells = root["shells"];
    if (!shells.is_array()) fail("\"shells\" must be an array");
    for (const json& item : shells) {
        if (!item.is_object()) fail("each shell must be an object");
        reject_unknown_keys(item, {"altitude_km", "num_satellites"}, "shell entry");
        if (!item.contains("altitude_km") || !item["altitude_km"].is_number()) {
            fail("shell entry needs a numeric \"altitude_km\"");
        }
        if (!item.contains("num_satellites") || !item["num_satellites"].is_number_integer()) {
            fail("shell entry needs an integer \"num_satellites\"");
        }
        ShellSpec s;
        s.altitude_km = item["altitude_km"].get<double>();
        s.num_satellites = item["num_satellites"].get<int>();
        spec.shells.push_back(s);
    }
    validate(spec);
    return spec;
}

ConstellationSpec load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize(const ConstellationSpec& spec) {
    json root;
    if (!spec.name.empty()) root["name"] = spec.name;
    root["earth_radius_km"] = spec.earth_radius_km;
    root["shells"] = json::array();
    for (const ShellSpec& s : spec.shells) {
        root["shells"].push_back({{"altitude_km", s.altitude_km}, {"num_satellites", s.num_satellites}});
    }
    return root.dump(2);
}

namespace {

ConstellationSpec make_preset(const char* name, std::vector<double> altitudes, std::vector<int> counts) {
    ConstellationSpec spec;
    spec.name = name;
    for (std::size_t i = 0; i < altitudes.size(); ++i) {
        spec.shells.push_back(ShellSpec{altitudes[i], counts[i]});
    }
    validate(spec);
    return spec;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "fig3-circle", "fig3-square", "fig3-diamond", "fig4",
        "leosat", "oneweb", "amazon", "spacex",
    };
    return names;
}

ConstellationSpec preset(const std::string& name) {
    if (name == "fig3-circle") {
        return make_preset("fig3-circle", {1110, 1150, 1275, 1325}, {50, 40, 25, 15});
    }
    if (name == "fig3-square") {
        return make_preset("fig3-square", {1110, 1150, 1275, 1325, 1500, 1700},
                           {75, 65, 55, 45, 25, 15});
    }
    if (name == "fig3-diamond") {
        return make_preset("fig3-diamond", {1110, 1150, 1275, 1325}, {105, 85, 60, 35});
    }
    if (name == "fig4") {
        return make_preset("fig4", {1000, 1325, 1625, 2000}, {500, 400, 325, 280});
    }
    if (name == "leosat") return make_preset("leosat", {1400}, {100});
    if (name == "oneweb") return make_preset("oneweb", {1200}, {74});
    if (name == "amazon") return make_preset("amazon", {590, 610, 630}, {784, 1296, 1156});
    if (name == "spacex") {
        return make_preset("spacex", {550, 1110, 1130, 1275, 1325}, {1584, 1600, 400, 374, 450});
    }
    std::string available;
    for (const std::string& n : preset_names()) {
        if (!available.empty()) available += ", ";
        available += n;
    }
    fail("unknown preset \"" + name + "\"; available presets: " + available);
}

}  // namespace leodist
