#include "screw/cli/scene.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace screw::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ParseError(field + ": " + message);
}

void check_keys(const json& obj, const std::string& field, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        fail(field, "expected an object");
    }
    const std::set<std::string> known(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) {
            fail(field.empty() ? key : field + "." + key, "unknown key");
        }
    }
}

const json& require(const json& obj, const std::string& field, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(field.empty() ? std::string(key) : field + "." + key, "missing required key");
    }
    return *it;
}

std::string join(const std::string& field, const char* key) {
    return field.empty() ? std::string(key) : field + "." + key;
}

double number(const json& v, const std::string& field) {
    if (!v.is_number()) {
        fail(field, "expected a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        fail(field, "expected a finite number");
    }
    return x;
}

template <std::size_t N>
std::array<double, N> numbers(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != N) {
        fail(field, "expected an array of " + std::to_string(N) + " numbers");
    }
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = number(v[i], field + "[" + std::to_string(i) + "]");
    }
    return out;
}

Vec3 vec3(const json& v, const std::string& field) {
    const auto a = numbers<3>(v, field);
    return Vec3(a[0], a[1], a[2]);
}

json vec3_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

const json& array_section(const json& doc, const char* key) {
    const json& v = doc.at(key);
    if (!v.is_array()) {
        fail(key, "expected an array");
    }
    return v;
}

std::string indexed(const char* key, std::size_t i) { return std::string(key) + "[" + std::to_string(i) + "]"; }

WrenchEntry parse_wrench(const json& v, const std::string& field) {
    check_keys(v, field, {"force", "moment_at_origin"});
    return {vec3(require(v, field, "force"), join(field, "force")),
            vec3(require(v, field, "moment_at_origin"), join(field, "moment_at_origin"))};
}

}  // namespace

Scene parse_scene(const json& doc) {
    check_keys(doc, "", {"version", "forces", "masses", "twists", "rigid_map", "sim"});
    Scene scene;

    const json& version = require(doc, "", "version");
    if (!version.is_number_integer() || version.get<int>() != 1) {
        fail("version", "expected 1");
    }
    scene.version = 1;

    if (doc.contains("forces")) {
        std::vector<ForceEntry> forces;
        const json& list = array_section(doc, "forces");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string f = indexed("forces", i);
            check_keys(list[i], f, {"point", "vector"});
            forces.push_back({vec3(require(list[i], f, "point"), join(f, "point")),
                              vec3(require(list[i], f, "vector"), join(f, "vector"))});
        }
        scene.forces = std::move(forces);
    }

    if (doc.contains("masses")) {
        std::vector<MassEntry> masses;
        const json& list = array_section(doc, "masses");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string f = indexed("masses", i);
            check_keys(list[i], f, {"m", "position", "velocity"});
            MassEntry e{number(require(list[i], f, "m"), join(f, "m")),
                        vec3(require(list[i], f, "position"), join(f, "position")), std::nullopt};
            if (!(e.m > 0.0)) {
                fail(join(f, "m"), "mass must be positive");
            }
            if (list[i].contains("velocity")) {
                e.velocity = vec3(list[i]["velocity"], join(f, "velocity"));
            }
            masses.push_back(e);
        }
        scene.masses = std::move(masses);
    }

    if (doc.contains("twists")) {
        std::vector<TwistEntry> entries;
        const json& list = array_section(doc, "twists");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string f = indexed("twists", i);
            check_keys(list[i], f, {"omega", "v_at", "moment_at_origin"});
            const Vec3 omega = vec3(require(list[i], f, "omega"), join(f, "omega"));
            const bool has_v_at = list[i].contains("v_at");
            const bool has_moment = list[i].contains("moment_at_origin");
            if (has_v_at == has_moment) {
                fail(f, "exactly one of v_at or moment_at_origin is required");
            }
            if (has_v_at) {
                const json& v = list[i]["v_at"];
                const std::string vf = join(f, "v_at");
                if (!v.is_array() || v.size() != 2) {
                    fail(vf, "expected [point, value]");
                }
                entries.push_back({omega, VelocityAt{vec3(v[0], vf + "[0]"), vec3(v[1], vf + "[1]")}});
            } else {
                entries.push_back(
                    {omega, MomentAtOrigin{vec3(list[i]["moment_at_origin"], join(f, "moment_at_origin"))}});
            }
        }
        scene.twists = std::move(entries);
    }

    if (doc.contains("rigid_map")) {
        const json& v = doc["rigid_map"];
        check_keys(v, "rigid_map", {"rotation", "translation"});
        scene.rigid_map = RigidMapEntry{numbers<9>(require(v, "rigid_map", "rotation"), "rigid_map.rotation"),
                                        vec3(require(v, "rigid_map", "translation"), "rigid_map.translation")};
    }

    if (doc.contains("sim")) {
        const json& v = doc["sim"];
        check_keys(v, "sim", {"dt", "steps", "wrench", "integrator"});
        SimEntry e{number(require(v, "sim", "dt"), "sim.dt"), 0, std::nullopt, std::nullopt};
        const json& steps = require(v, "sim", "steps");
        if (!steps.is_number_integer()) {
            fail("sim.steps", "expected an integer");
        }
        e.steps = steps.get<int>();
        if (!(e.dt > 0.0)) {
            fail("sim.dt", "must be positive");
        }
        if (e.steps < 1) {
            fail("sim.steps", "must be at least 1");
        }
        if (v.contains("wrench")) {
            e.wrench = parse_wrench(v["wrench"], "sim.wrench");
        }
        if (v.contains("integrator")) {
            if (!v["integrator"].is_string()) {
                fail("sim.integrator", "expected a string");
            }
            const auto name = v["integrator"].get<std::string>();
            if (name != "midpoint" && name != "euler") {
                fail("sim.integrator", "expected \"midpoint\" or \"euler\"");
            }
            e.integrator = name;
        }
        scene.sim = e;
    }
    return scene;
}

Scene parse_scene_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_scene(doc);
}

Scene load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string() + ": cannot open file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scene_text(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

json to_json(const Scene& scene) {
    json doc = json::object();
    doc["version"] = scene.version;
    if (scene.forces) {
        json list = json::array();
        for (const auto& f : *scene.forces) {
            list.push_back({{"point", vec3_json(f.point)}, {"vector", vec3_json(f.vector)}});
        }
        doc["forces"] = list;
    }
    if (scene.masses) {
        json list = json::array();
        for (const auto& m : *scene.masses) {
            json e = {{"m", m.m}, {"position", vec3_json(m.position)}};
            if (m.velocity) {
                e["velocity"] = vec3_json(*m.velocity);
            }
            list.push_back(e);
        }
        doc["masses"] = list;
    }
    if (scene.twists) {
        json list = json::array();
        for (const auto& t : *scene.twists) {
            json e = {{"omega", vec3_json(t.omega)}};
            if (const auto* v = std::get_if<VelocityAt>(&t.field)) {
                e["v_at"] = json::array({vec3_json(v->point), vec3_json(v->value)});
            } else {
                e["moment_at_origin"] = vec3_json(std::get<MomentAtOrigin>(t.field).value);
            }
            list.push_back(e);
        }
        doc["twists"] = list;
    }
    if (scene.rigid_map) {
        doc["rigid_map"] = {{"rotation", scene.rigid_map->rotation},
                            {"translation", vec3_json(scene.rigid_map->translation)}};
    }
    if (scene.sim) {
        json e = {{"dt", scene.sim->dt}, {"steps", scene.sim->steps}};
        if (scene.sim->wrench) {
            e["wrench"] = {{"force", vec3_json(scene.sim->wrench->force)},
                           {"moment_at_origin", vec3_json(scene.sim->wrench->moment_at_origin)}};
        }
        if (scene.sim->integrator) {
            e["integrator"] = *scene.sim->integrator;
        }
        doc["sim"] = e;
    }
    return doc;
}

ForceSystem force_system(const Scene& scene) {
    if (!scene.forces) {
        fail("forces", "section required by this command");
    }
    ForceSystem fs;
    for (const auto& f : *scene.forces) {
        fs.forces.push_back({Point{f.point}, f.vector});
    }
    return fs;
}

MassDistribution mass_distribution(const Scene& scene) {
    if (!scene.masses) {
        fail("masses", "section required by this command");
    }
    std::vector<Particle> particles;
    for (const auto& m : *scene.masses) {
        particles.push_back({m.m, Point{m.position}, m.velocity});
    }
    return MassDistribution(std::move(particles));
}

Twist to_twist(const TwistEntry& entry) {
    if (const auto* v = std::get_if<VelocityAt>(&entry.field)) {
        return {from_motor(Point{v->point}, entry.omega, v->value)};
    }
    return {Screw(entry.omega, std::get<MomentAtOrigin>(entry.field).value)};
}

std::vector<Twist> twists(const Scene& scene) {
    if (!scene.twists) {
        fail("twists", "section required by this command");
    }
    std::vector<Twist> out;
    for (const auto& t : *scene.twists) {
        out.push_back(to_twist(t));
    }
    return out;
}

RigidMap rigid_map(const Scene& scene) {
    if (!scene.rigid_map) {
        fail("rigid_map", "section required by this command");
    }
    const auto& r = scene.rigid_map->rotation;
    Mat3 rot;
    rot << r[0], r[1], r[2], r[3], r[4], r[5], r[6], r[7], r[8];
    return RigidMap(rot, scene.rigid_map->translation);
}

sim::SimConfig sim_config(const Scene& scene) {
    if (!scene.sim) {
        fail("sim", "section required by this command");
    }
    sim::SimConfig c;
    c.dt = scene.sim->dt;
    c.steps = scene.sim->steps;
    if (scene.sim->wrench) {
        c.wrench = Wrench{Screw(scene.sim->wrench->force, scene.sim->wrench->moment_at_origin)};
    }
    if (scene.sim->integrator && *scene.sim->integrator == "euler") {
        c.integrator = sim::Integrator::Euler;
    }
    return c;
}

}  // namespace screw::cli
