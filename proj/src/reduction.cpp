#include "screw/reduction.hpp"

#include <cmath>

namespace screw {

namespace {

// Unit vector orthogonal to n obtained by projecting e_x (or e_y when n is
// close to e_x) onto the plane orthogonal to n.
Vec3 reference_orthogonal(const Vec3& n) {
    const Vec3 unit = n.normalized();
    const Vec3 ref = std::abs(unit.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    return (ref - ref.dot(unit) * unit).normalized();
}

}  // namespace

AppliedVectorPair decompose_two_applied(const Screw& s, double arm) {
    if (!(arm > 0.0) || !std::isfinite(arm)) {
        throw InvalidArgument("arm length must be positive");
    }
    const Vec3 invariant = vector_invariant(s);

    if (has_zero_resultant(s)) {
        if (invariant.isZero(0.0)) {
            throw ZeroScrew("the zero screw has no two-vector reduction");
        }
        // (q, w) + (q + a, -w) has constant value w x a.
        const Vec3 a = arm * reference_orthogonal(invariant);
        const Vec3 w = a.cross(invariant) / a.squaredNorm();
        const Point q = Point::origin();
        return {{q, w}, {q + a, -w}};
    }

    const Vec3& r = s.resultant();
    const Point q = std::get<AxisLine>(screw_axis(s)).point;
    const Vec3 half = 0.5 * r;

    if (invariant.norm() <= 1e-12 * std::max(1.0, r.norm())) {
        const Vec3 along = arm * r.normalized();
        return {{q, half}, {q + along, half}};
    }

    // (q - a/2, r/2 + w) + (q + a/2, r/2 - w) = applied(q, r) + free(w x a)
    const Vec3 w = 0.5 * r.norm() * reference_orthogonal(r);
    const Vec3 a = invariant.cross(w) / w.squaredNorm();
    return {{q - 0.5 * a, half + w}, {q + 0.5 * a, half - w}};
}

CentralAxisReport central_axis_report(const ForceSystem& fs) {
    const Wrench d = wrench_of(fs);
    return {screw_axis(d.screw), pitch(d.screw), vector_invariant(d.screw), d.force(), d};
}

}  // namespace screw
