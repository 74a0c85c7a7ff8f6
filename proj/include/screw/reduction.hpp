#pragma once

#include "screw/dynamics.hpp"

namespace screw {

struct AppliedVectorPair {
    AppliedForce first;
    AppliedForce second;

    Screw screw() const {
        return from_applied_vector(first.point, first.force) + from_applied_vector(second.point, second.force);
    }
};

/// Two applied vectors generating s.
///
/// - zero resultant: an opposite pair (q, w), (q + a, -w) with w x a = s,
///   a of length `arm` and q the global origin;
/// - zero invariant: r/2 at the axis point and again `arm` further along the
///   axis;
/// - otherwise legs r/2 + w and r/2 - w placed at q -/+ a/2 on the axis, with
///   |w| = |r|/2 so the two resultants are equal in magnitude and
///   perpendicular. The arm is then fixed by the invariant.
///
/// The free direction (w, or a for a couple) is the projection of a fixed
/// reference axis onto the plane orthogonal to the screw.
/// Throws ZeroScrew for the zero screw and InvalidArgument for arm <= 0.
AppliedVectorPair decompose_two_applied(const Screw& s, double arm = 1.0);

struct CentralAxisReport {
    ScrewAxis axis;
    Pitch pitch;
    Vec3 invariant;
    Vec3 resultant;
    Wrench wrench;
};

CentralAxisReport central_axis_report(const ForceSystem& fs);

}  // namespace screw
