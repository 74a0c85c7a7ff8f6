#pragma once

#include <optional>
#include <vector>

#include "screw/kinematics.hpp"
#include "screw/lie.hpp"

namespace screw {

struct AppliedForce {
    Point point;
    Vec3 force;
};

struct ForceSystem {
    std::vector<AppliedForce> forces;
};

struct Particle {
    double mass;
    Point position;
    std::optional<Vec3> velocity;
};

/// Point masses. Continua are represented only through such discretizations.
class MassDistribution {
public:
    /// Throws InvalidArgument for non-positive or non-finite masses.
    explicit MassDistribution(std::vector<Particle> particles);

    const std::vector<Particle>& particles() const noexcept { return particles_; }
    double total_mass() const;
    bool has_velocities() const;

private:
    std::vector<Particle> particles_;
};

/// Moment field of a force system: resultant F, value M(P).
struct Wrench {
    Screw screw;

    const Vec3& force() const noexcept { return screw.resultant(); }
    Vec3 moment_at(const Point& p) const { return screw.evaluate(p); }
};

/// Angular momentum field: resultant is the linear momentum, value L(Q).
/// L is always taken as in the inertial frame.
struct MomentumScrew {
    Screw screw;

    const Vec3& linear() const noexcept { return screw.resultant(); }
    Vec3 angular_at(const Point& q) const { return screw.evaluate(q); }
};

/// Mass, center of mass and the inertia map I_C at the center of mass.
struct InertiaOperator {
    double total_mass = 0.0;
    Point center;
    Mat3 at_center = Mat3::Zero();

    Vec3 apply_at_center(const Vec3& eta) const { return at_center * eta; }
    /// I_Q(eta) by Huygens-Steiner: I_C(eta) + M (C-Q) x [eta x (C-Q)].
    Vec3 apply_at(const Point& q, const Vec3& eta) const;
};

inline Vec3 apply_at(const InertiaOperator& inertia, const Point& q, const Vec3& eta) {
    return inertia.apply_at(q, eta);
}

Wrench wrench_of(const ForceSystem& fs);

/// Throws MissingVelocities unless every particle carries a velocity.
MomentumScrew momentum_screw(const MassDistribution& md);

/// Throws EmptyDistribution when there are no particles.
InertiaOperator inertia_of(const MassDistribution& md);

/// Linear in k: resultant M v(C), value at C equal to I_C(omega).
MomentumScrew momentum_from_twist(const InertiaOperator& inertia, const Twist& k);

/// (1/2) <k, l>
double kinetic_energy(const Twist& k, const MomentumScrew& l);

/// <k, d>
double power(const Twist& k, const Wrench& d);

/// Basis of { z : <z, w> = 0 for all w in W }, of dimension 6 - rank(W).
/// Singular values below 1e-10 times the largest count as zero. The basis is
/// returned in reduced row echelon form with respect to the frame coordinates.
std::vector<Screw> reciprocal_subspace(const std::vector<Screw>& w, const Frame& frame);

/// (l_after - l_before) / h - d, with both momenta taken about fixed poles.
/// Vanishes up to O(h) when the cardinal equation dl/dt = d holds.
Screw cardinal_derivative(const MomentumScrew& before, const MomentumScrew& after, double h,
                          const Wrench& d);

/// d + [k, l]: the derivative of l relative to the frame moving with k.
/// Its resultant is F - omega x P.
Screw moving_frame_derivative(const MomentumScrew& l, const Twist& k, const Wrench& d);

}  // namespace screw
