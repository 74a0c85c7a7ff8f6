#pragma once

#include <utility>
#include <vector>

#include "screw/screw.hpp"

namespace screw {

/// Velocity field of a rigid motion: resultant is the angular velocity, the
/// field value at P the velocity of the body point at P.
struct Twist {
    Screw screw;

    const Vec3& omega() const noexcept { return screw.resultant(); }
    Vec3 velocity_at(const Point& p) const { return screw.evaluate(p); }

    static Twist rotation_about(const Point& on_axis, const Vec3& omega) {
        return {from_applied_vector(on_axis, omega)};
    }
    static Twist translation(const Vec3& v) { return {from_free_vector(v)}; }
};

/// Relative twists K(i) -> K(i+1). All twists are taken at the same instant
/// and expressed in the ground frame; no transformation is applied.
class MotionChain {
public:
    /// Throws InvalidArgument for an empty list.
    explicit MotionChain(std::vector<Twist> relative_twists);

    const std::vector<Twist>& twists() const noexcept { return twists_; }

private:
    std::vector<Twist> twists_;
};

/// Twist of the last frame relative to the first: the screw sum.
Twist compose_chain(const MotionChain& chain);

ScrewAxis instantaneous_axis(const Twist& k);

inline Vec3 point_velocity(const Twist& k, const Point& p) { return k.velocity_at(p); }

/// Two opposite pure rotations of angular speed `omega_magnitude` whose sum is
/// the translation twist v. The first axis passes through `pivot`.
/// Throws InvalidArgument if omega_magnitude <= 0.
std::pair<Twist, Twist> rotation_couple(const Vec3& v, const Point& pivot = Point::origin(),
                                        double omega_magnitude = 1.0);

}  // namespace screw
