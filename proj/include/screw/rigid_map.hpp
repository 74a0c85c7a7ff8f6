#pragma once

#include <optional>

#include "screw/screw.hpp"

namespace screw {

/// Orientation-preserving isometry P -> R (P - O) + O + t, O the global origin.
class RigidMap {
public:
    RigidMap() : rotation_(Mat3::Identity()), translation_(Vec3::Zero()) {}

    /// Throws InvalidRotation unless R^T R = I and det R = 1 within 1e-10.
    RigidMap(const Mat3& rotation, const Vec3& translation);

    static RigidMap identity() { return RigidMap{}; }
    static RigidMap translation(const Vec3& t) { return RigidMap(Mat3::Identity(), t); }

    const Mat3& rotation() const noexcept { return rotation_; }
    const Vec3& translation() const noexcept { return translation_; }

    Point apply(const Point& p) const { return Point{rotation_ * p.coords + translation_}; }

private:
    struct Unchecked {};
    RigidMap(Unchecked, const Mat3& r, const Vec3& t) : rotation_(r), translation_(t) {}

    friend RigidMap compose(const RigidMap& g2, const RigidMap& g1);
    friend RigidMap exp(const Screw& s, double t);

    Mat3 rotation_;
    Vec3 translation_;
};

/// Largest entry of |R^T R - I| and |det R - 1|; what the RigidMap constructor checks.
double orthonormality_defect(const Mat3& r);

/// g2 after g1.
RigidMap compose(const RigidMap& g2, const RigidMap& g1);
inline Point apply(const RigidMap& g, const Point& p) { return g.apply(p); }

/// Flow of the screw field for parameter t: rotation by |r| t about the screw
/// axis together with translation t * invariant along it. Closed form valid
/// for every screw, including a vanishing resultant.
RigidMap exp(const Screw& s, double t = 1.0);

/// Rotation about an axis followed by a slide along it. A map with no rotation
/// (angle below 1e-8) is reported as pure_translation with a degenerate axis.
struct ChaslesDecomposition {
    ScrewAxis axis = DegenerateAxis{};
    double angle = 0.0;  // [0, pi]
    double slide = 0.0;
    std::optional<Vec3> pure_translation;

    /// The screw whose flow at parameter 1 is the decomposed map.
    Screw screw() const;
};

/// Throws InvalidRotation when the map fails the orthonormality check.
ChaslesDecomposition log(const RigidMap& g);

}  // namespace screw
