#include "screw/kinematics.hpp"

#include <cmath>

namespace screw {

MotionChain::MotionChain(std::vector<Twist> relative_twists) : twists_(std::move(relative_twists)) {
    if (twists_.empty()) {
        throw InvalidArgument("motion chain must contain at least one twist");
    }
}

Twist compose_chain(const MotionChain& chain) {
    Screw sum;
    for (const auto& k : chain.twists()) {
        sum += k.screw;
    }
    return {sum};
}

ScrewAxis instantaneous_axis(const Twist& k) { return screw_axis(k.screw); }

namespace {

Vec3 any_unit_orthogonal(const Vec3& v) {
    const Vec3 ref = std::abs(v.x()) <= std::abs(v.y()) && std::abs(v.x()) <= std::abs(v.z())
                         ? Vec3::UnitX()
                         : (std::abs(v.y()) <= std::abs(v.z()) ? Vec3::UnitY() : Vec3::UnitZ());
    return v.cross(ref).normalized();
}

}  // namespace

std::pair<Twist, Twist> rotation_couple(const Vec3& v, const Point& pivot, double omega_magnitude) {
    if (!(omega_magnitude > 0.0)) {
        throw InvalidArgument("rotation couple needs a positive angular speed");
    }
    // w x (q2 - q1) = v with w orthogonal to v  =>  q2 - q1 = (v x w) / |w|^2
    const Vec3 w = omega_magnitude * (v.isZero(0.0) ? Vec3::UnitZ() : any_unit_orthogonal(v));
    const Point second = pivot + v.cross(w) / w.squaredNorm();
    return {Twist::rotation_about(pivot, w), Twist::rotation_about(second, -w)};
}

}  // namespace screw
