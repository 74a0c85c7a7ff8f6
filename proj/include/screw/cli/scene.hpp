#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "screw/dynamics.hpp"
#include "screw/rigid_map.hpp"
#include "screw/sim.hpp"

namespace screw::cli {

/// Malformed scene input. The message names the offending field (or the
/// line/column for JSON syntax errors).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ForceEntry {
    Vec3 point;
    Vec3 vector;
    friend bool operator==(const ForceEntry&, const ForceEntry&) = default;
};

struct MassEntry {
    double m;
    Vec3 position;
    std::optional<Vec3> velocity;
    friend bool operator==(const MassEntry&, const MassEntry&) = default;
};

struct VelocityAt {
    Vec3 point;
    Vec3 value;
    friend bool operator==(const VelocityAt&, const VelocityAt&) = default;
};

struct MomentAtOrigin {
    Vec3 value;
    friend bool operator==(const MomentAtOrigin&, const MomentAtOrigin&) = default;
};

/// A twist as written: omega plus either the velocity at a named point or the
/// raw value at the origin. Both normalize to the same Screw.
struct TwistEntry {
    Vec3 omega;
    std::variant<VelocityAt, MomentAtOrigin> field;
    friend bool operator==(const TwistEntry&, const TwistEntry&) = default;
};

struct RigidMapEntry {
    std::array<double, 9> rotation;  // row-major
    Vec3 translation;
    friend bool operator==(const RigidMapEntry&, const RigidMapEntry&) = default;
};

struct WrenchEntry {
    Vec3 force;
    Vec3 moment_at_origin;
    friend bool operator==(const WrenchEntry&, const WrenchEntry&) = default;
};

struct SimEntry {
    double dt;
    int steps;
    std::optional<WrenchEntry> wrench;
    std::optional<std::string> integrator;  // "midpoint" | "euler"
    friend bool operator==(const SimEntry&, const SimEntry&) = default;
};

struct Scene {
    int version = 1;
    std::optional<std::vector<ForceEntry>> forces;
    std::optional<std::vector<MassEntry>> masses;
    std::optional<std::vector<TwistEntry>> twists;
    std::optional<RigidMapEntry> rigid_map;
    std::optional<SimEntry> sim;
    friend bool operator==(const Scene&, const Scene&) = default;
};

Scene parse_scene(const nlohmann::json& doc);
Scene parse_scene_text(const std::string& text);
Scene load_scene(const std::filesystem::path& path);
nlohmann::json to_json(const Scene& scene);

// Conversion to library values. Each throws ParseError when the section is
// missing and the library's domain errors for invalid contents.
ForceSystem force_system(const Scene& scene);
MassDistribution mass_distribution(const Scene& scene);
std::vector<Twist> twists(const Scene& scene);
RigidMap rigid_map(const Scene& scene);
sim::SimConfig sim_config(const Scene& scene);

Twist to_twist(const TwistEntry& entry);

}  // namespace screw::cli
