#pragma once

#include <vector>

#include "screw/dynamics.hpp"
#include "screw/rigid_map.hpp"

namespace screw::sim {

enum class Integrator { Midpoint, Euler };

/// State of a free rigid body. `body_inertia` is I_C expressed in the body
/// frame; the world inertia is R I_body R^T.
///
/// A body whose inertia is identically zero is a point particle: it carries
/// no angular momentum about its center and only the force resultant acts.
struct BodyState {
    Mat3 orientation = Mat3::Identity();
    Point center;
    Vec3 linear_momentum = Vec3::Zero();
    Vec3 angular_momentum_at_center = Vec3::Zero();
    double mass = 1.0;
    Mat3 body_inertia = Mat3::Identity();

    /// Body at identity orientation built from a mass distribution. Uses
    /// particle velocities when present, otherwise starts at rest.
    static BodyState from_distribution(const MassDistribution& md);

    bool is_particle() const { return body_inertia.isZero(0.0); }
    Mat3 world_inertia() const { return orientation * body_inertia * orientation.transpose(); }
    /// Throws SingularInertia for a degenerate (but not vanishing) inertia.
    Vec3 angular_velocity() const;
    Twist twist() const;
    MomentumScrew momentum() const;
    double kinetic_energy() const;
};

struct SimConfig {
    double dt = 1e-3;
    int steps = 1;
    Wrench wrench{};  // constant over the run; zero by default
    Integrator integrator = Integrator::Midpoint;

    /// Throws InvalidArgument unless dt > 0 and steps >= 1.
    void validate() const;
};

struct StepDiagnostics {
    double time = 0.0;
    double kinetic_energy = 0.0;
    double power = 0.0;              // <k, d>
    double energy_rate = 0.0;        // (T_{n+1} - T_n) / dt
    double inertia_rate_form = 0.0;  // omega . (dI_C/dt)(omega), finite differences
    double moving_frame_residual = 0.0;
    bool reorthonormalized = false;
};

struct Trajectory {
    std::vector<BodyState> states;  // initial state first; steps + 1 entries
    std::vector<StepDiagnostics> diagnostics;  // one per step
};

/// Advances the body by dt under a constant wrench. Throws InvalidArgument
/// for dt <= 0 and SingularInertia for a degenerate inertia.
BodyState step(const BodyState& state, const Wrench& wrench, double dt,
               Integrator integrator = Integrator::Midpoint);

/// Same as step() and also reports whether the orientation had to be
/// projected back onto the rotation group.
BodyState step(const BodyState& state, const Wrench& wrench, double dt, Integrator integrator,
               bool& reorthonormalized);

/// Diagnostics for the step taking `before` to `after`.
///
/// The moving-frame residual compares the derivative of l relative to the
/// body frame, estimated by forward differences at the center and at the body
/// point C + R e_x, against d + [k, l] at the start of the step. It is O(dt).
StepDiagnostics diagnose(const BodyState& before, const BodyState& after, const Wrench& wrench, double dt);

Trajectory run(const SimConfig& config, const BodyState& initial);

}  // namespace screw::sim
