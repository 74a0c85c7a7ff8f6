#include "screw/cli/app.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "format.hpp"
#include "screw/cli/scene.hpp"
#include "screw/kinematics.hpp"
#include "screw/reduction.hpp"

namespace screw::cli {

namespace {

Record vec(const Vec3& v) { return Record::array({v.x(), v.y(), v.z()}); }

Record axis_record(const ScrewAxis& axis) {
    if (const auto* line = std::get_if<AxisLine>(&axis)) {
        return Record{{"type", "line"}, {"point", vec(line->point.coords)}, {"direction", vec(line->direction)}};
    }
    return Record{{"type", "degenerate"}};
}

Record pitch_record(const Pitch& p) {
    if (const auto* f = std::get_if<FinitePitch>(&p)) {
        return f->value;
    }
    if (std::holds_alternative<InfinitePitch>(p)) {
        return "infinite";
    }
    return "zero-screw";
}

Record screw_record(const Screw& s) {
    return Record{{"resultant", vec(s.resultant())}, {"moment_at_origin", vec(s.moment_at_origin())}};
}

Record reduce(const Scene& scene) {
    const CentralAxisReport report = central_axis_report(force_system(scene));
    const AppliedVectorPair pair = decompose_two_applied(report.wrench.screw);
    Record r;
    r["command"] = "reduce";
    r["resultant"] = vec(report.resultant);
    r["moment_at_origin"] = vec(report.wrench.screw.moment_at_origin());
    r["invariant"] = vec(report.invariant);
    r["scalar_invariant"] = scalar_invariant(report.wrench.screw);
    r["pitch"] = pitch_record(report.pitch);
    r["axis"] = axis_record(report.axis);
    r["pair"] = Record::array({
        Record{{"point", vec(pair.first.point.coords)}, {"vector", vec(pair.first.force)}},
        Record{{"point", vec(pair.second.point.coords)}, {"vector", vec(pair.second.force)}},
    });
    return r;
}

Record compose(const Scene& scene) {
    const Twist k = compose_chain(MotionChain(twists(scene)));
    const Vec3 invariant = vector_invariant(k.screw);
    Record r;
    r["command"] = "compose";
    r["resultant"] = vec(k.omega());
    r["moment_at_origin"] = vec(k.screw.moment_at_origin());
    r["invariant"] = vec(invariant);
    r["axial_speed"] = invariant.norm();
    r["pitch"] = pitch_record(pitch(k.screw));
    r["axis"] = axis_record(instantaneous_axis(k));
    return r;
}

Record exp_record(const Scene& scene, double t) {
    // A chain is integrated through its composed twist.
    const RigidMap g = exp(compose_chain(MotionChain(twists(scene))).screw, t);
    Record rotation = Record::array();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            rotation.push_back(g.rotation()(i, j));
        }
    }
    Record r;
    r["command"] = "exp";
    r["t"] = t;
    r["rigid_map"] = Record{{"rotation", rotation}, {"translation", vec(g.translation())}};
    return r;
}

Record log_record(const Scene& scene) {
    const ChaslesDecomposition c = log(rigid_map(scene));
    Record r;
    r["command"] = "log";
    r["angle"] = c.angle;
    r["slide"] = c.slide;
    r["axis"] = axis_record(c.axis);
    r["pure_translation"] = c.pure_translation ? vec(*c.pure_translation) : Record(nullptr);
    r["screw"] = screw_record(c.screw());
    return r;
}

Record reciprocal(const Scene& scene) {
    std::vector<Screw> w;
    for (const auto& k : twists(scene)) {
        w.push_back(k.screw);
    }
    const auto basis = reciprocal_subspace(w, Frame::identity());
    Record list = Record::array();
    for (const auto& z : basis) {
        list.push_back(screw_record(z));
    }
    Record r;
    r["command"] = "reciprocal";
    r["rank"] = static_cast<int>(6 - basis.size());
    r["dimension"] = static_cast<int>(basis.size());
    r["basis"] = list;
    return r;
}

void simulate(const Scene& scene, int every, std::ostream& out, std::ostream& err, OutputMode mode) {
    const sim::SimConfig config = sim_config(scene);
    config.validate();
    sim::BodyState state = sim::BodyState::from_distribution(mass_distribution(scene));
    for (int i = 0; i < config.steps; ++i) {
        bool reorthonormalized = false;
        const sim::BodyState next = sim::step(state, config.wrench, config.dt, config.integrator, reorthonormalized);
        if ((i + 1) % every == 0 || i + 1 == config.steps) {
            const sim::StepDiagnostics d = sim::diagnose(state, next, config.wrench, config.dt);
            Record row;
            row["step"] = i + 1;
            row["time"] = config.dt * (i + 1);
            row["kinetic_energy"] = d.kinetic_energy;
            row["power"] = d.power;
            row["energy_rate"] = d.energy_rate;
            row["inertia_rate_form"] = d.inertia_rate_form;
            row["moving_frame_residual"] = d.moving_frame_residual;
            row["center"] = vec(next.center.coords);
            row["angular_momentum"] = vec(next.angular_momentum_at_center);
            emit_row(out, row, mode);
        }
        if (reorthonormalized) {
            err << "step " << i + 1 << ": orientation re-orthonormalized\n";
        }
        state = next;
    }
}

int run_selfcheck(std::ostream& out) {
    bool ok = true;
    for (const auto& c : selfcheck()) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (worst " << c.worst << ", tolerance " << c.tolerance
            << ")\n";
        ok = ok && c.passed;
    }
    return ok ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Screw theory toolkit: reductions, twists, rigid maps and rigid-body simulation", "screwcli"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--json", machine, "Machine-readable JSON output (12 significant digits)");

    std::string scene_path;
    double t = 1.0;
    int every = 1;

    auto* reduce_cmd = app.add_subcommand("reduce", "Central axis and two-vector reduction of the forces");
    auto* compose_cmd = app.add_subcommand("compose", "Sum of the twists of a motion chain");
    auto* exp_cmd = app.add_subcommand("exp", "Rigid map obtained by integrating the composed twist");
    auto* log_cmd = app.add_subcommand("log", "Chasles decomposition of the rigid map");
    auto* reciprocal_cmd = app.add_subcommand("reciprocal", "Basis of the screws reciprocal to the twists");
    auto* simulate_cmd = app.add_subcommand("simulate", "Run the rigid-body simulator");
    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "Run the embedded identity suite");

    for (auto* cmd : {reduce_cmd, compose_cmd, exp_cmd, log_cmd, reciprocal_cmd, simulate_cmd}) {
        cmd->add_option("scene", scene_path, "Scene file (JSON)")->required();
        cmd->fallthrough();
    }
    exp_cmd->add_option("-t,--t", t, "Flow parameter")->default_val(1.0);
    simulate_cmd->add_option("--every", every, "Report every N-th step")->default_val(1)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kMalformedInput;
    }

    const OutputMode mode = machine ? OutputMode::Machine : OutputMode::Human;
    try {
        if (*selfcheck_cmd) {
            return run_selfcheck(out);
        }
        const Scene scene = load_scene(scene_path);
        if (*reduce_cmd) {
            emit(out, reduce(scene), mode);
        } else if (*compose_cmd) {
            emit(out, compose(scene), mode);
        } else if (*exp_cmd) {
            emit(out, exp_record(scene, t), mode);
        } else if (*log_cmd) {
            emit(out, log_record(scene), mode);
        } else if (*reciprocal_cmd) {
            emit(out, reciprocal(scene), mode);
        } else if (*simulate_cmd) {
            simulate(scene, every, out, err, mode);
        }
    } catch (const ParseError& e) {
        err << "malformed input: " << e.what() << "\n";
        return kMalformedInput;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return kDomainError;
    }
    return kSuccess;
}

}  // namespace screw::cli
