#include "screw/sim.hpp"

#include <cmath>

namespace screw::sim {

namespace {

void check_inertia(const Mat3& body_inertia) {
    const Eigen::SelfAdjointEigenSolver<Mat3> eig(body_inertia, Eigen::EigenvaluesOnly);
    const auto& values = eig.eigenvalues();
    const double largest = values.cwiseAbs().maxCoeff();
    if (!(values.minCoeff() >= 1e-12 * largest)) {
        throw SingularInertia("inertia at the center of mass is not invertible");
    }
}

Mat3 rotate(const Vec3& rotation_vector, const Mat3& orientation) {
    return exp(Twist::rotation_about(Point::origin(), rotation_vector).screw).rotation() * orientation;
}

Mat3 project_to_rotation(const Mat3& r) {
    const Eigen::JacobiSVD<Mat3> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
}

struct Rates {
    Vec3 force;
    Vec3 torque;  // about the center
    Vec3 velocity;
    Vec3 omega;
};

Rates rates(const BodyState& s, const Wrench& wrench) {
    Rates r;
    r.force = wrench.force();
    r.velocity = s.linear_momentum / s.mass;
    if (s.is_particle()) {
        r.torque = Vec3::Zero();
        r.omega = Vec3::Zero();
    } else {
        r.torque = wrench.moment_at(s.center);
        r.omega = s.angular_velocity();
    }
    return r;
}

BodyState advance(const BodyState& s, const Rates& r, double dt) {
    BodyState out = s;
    out.linear_momentum = s.linear_momentum + r.force * dt;
    out.angular_momentum_at_center = s.angular_momentum_at_center + r.torque * dt;
    out.center = s.center + r.velocity * dt;
    out.orientation = rotate(r.omega * dt, s.orientation);
    return out;
}

}  // namespace

BodyState BodyState::from_distribution(const MassDistribution& md) {
    const InertiaOperator inertia = inertia_of(md);
    BodyState s;
    s.mass = inertia.total_mass;
    s.center = inertia.center;
    s.body_inertia = inertia.at_center;
    if (md.has_velocities()) {
        const MomentumScrew l = momentum_screw(md);
        s.linear_momentum = l.linear();
        s.angular_momentum_at_center = l.angular_at(s.center);
    }
    return s;
}

Vec3 BodyState::angular_velocity() const {
    if (is_particle()) {
        return Vec3::Zero();
    }
    check_inertia(body_inertia);
    // omega = R I_body^{-1} R^T L
    const Vec3 body_l = orientation.transpose() * angular_momentum_at_center;
    return orientation * body_inertia.ldlt().solve(body_l);
}

Twist BodyState::twist() const {
    return {from_motor(center, angular_velocity(), linear_momentum / mass)};
}

MomentumScrew BodyState::momentum() const {
    return {from_motor(center, linear_momentum, angular_momentum_at_center)};
}

double BodyState::kinetic_energy() const {
    return 0.5 * linear_momentum.squaredNorm() / mass + 0.5 * angular_velocity().dot(angular_momentum_at_center);
}

void SimConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidArgument("dt must be positive");
    }
    if (steps < 1) {
        throw InvalidArgument("steps must be at least 1");
    }
}

BodyState step(const BodyState& state, const Wrench& wrench, double dt, Integrator integrator,
               bool& reorthonormalized) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidArgument("dt must be positive");
    }
    if (!(state.mass > 0.0)) {
        throw SingularInertia("body mass must be positive");
    }
    if (!state.is_particle()) {
        check_inertia(state.body_inertia);
    }

    const Rates start = rates(state, wrench);
    BodyState next;
    if (integrator == Integrator::Euler) {
        next = advance(state, start, dt);
    } else {
        const BodyState half = advance(state, start, 0.5 * dt);
        next = advance(state, rates(half, wrench), dt);
    }

    reorthonormalized = false;
    if (orthonormality_defect(next.orientation) > 1e-8) {
        next.orientation = project_to_rotation(next.orientation);
        reorthonormalized = true;
    }
    if (next.is_particle()) {
        next.angular_momentum_at_center = Vec3::Zero();
    }
    return next;
}

BodyState step(const BodyState& state, const Wrench& wrench, double dt, Integrator integrator) {
    bool ignored = false;
    return step(state, wrench, dt, integrator, ignored);
}

StepDiagnostics diagnose(const BodyState& before, const BodyState& after, const Wrench& applied, double dt) {
    // A particle only feels the force, acting at its position.
    const Wrench wrench =
        before.is_particle() ? Wrench{from_applied_vector(before.center, applied.force())} : applied;
    StepDiagnostics d;
    const Twist k = before.twist();
    const MomentumScrew l0 = before.momentum();
    const MomentumScrew l1 = after.momentum();

    d.kinetic_energy = after.kinetic_energy();
    d.power = power(k, wrench);
    d.energy_rate = (after.kinetic_energy() - before.kinetic_energy()) / dt;

    const Vec3 omega_bar = 0.5 * (before.angular_velocity() + after.angular_velocity());
    const Mat3 inertia_rate = (after.world_inertia() - before.world_inertia()) / dt;
    d.inertia_rate_form = omega_bar.dot(inertia_rate * omega_bar);

    // Relative derivative of l along body points, against d + [k, l].
    const Screw expected = moving_frame_derivative(l0, k, wrench);
    const Vec3& omega = k.omega();
    double residual = ((l1.linear() - l0.linear()) / dt - omega.cross(l0.linear()) - expected.resultant()).norm();
    for (const Vec3& offset : {Vec3(Vec3::Zero()), Vec3(Vec3::UnitX())}) {
        const Point q0 = before.center + before.orientation * offset;
        const Point q1 = after.center + after.orientation * offset;
        const Vec3 relative = (l1.angular_at(q1) - l0.angular_at(q0)) / dt - omega.cross(l0.angular_at(q0));
        residual = std::max(residual, (relative - expected.evaluate(q0)).norm());
    }
    d.moving_frame_residual = residual;
    return d;
}

Trajectory run(const SimConfig& config, const BodyState& initial) {
    config.validate();
    Trajectory out;
    out.states.reserve(static_cast<std::size_t>(config.steps) + 1);
    out.diagnostics.reserve(static_cast<std::size_t>(config.steps));
    out.states.push_back(initial);
    for (int i = 0; i < config.steps; ++i) {
        const BodyState& current = out.states.back();
        bool reorthonormalized = false;
        BodyState next = step(current, config.wrench, config.dt, config.integrator, reorthonormalized);
        StepDiagnostics d = diagnose(current, next, config.wrench, config.dt);
        d.time = config.dt * (i + 1);
        d.reorthonormalized = reorthonormalized;
        out.diagnostics.push_back(d);
        out.states.push_back(std::move(next));
    }
    return out;
}

}  // namespace screw::sim
