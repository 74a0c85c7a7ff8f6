#include "screw/lie.hpp"

#include <cmath>

namespace screw {

Frame::Frame(const Point& origin, const Mat3& basis) : origin_(origin), basis_(basis) {
    if (!is_finite(origin.coords) || !basis.allFinite()) {
        throw InvalidFrame("frame has non-finite entries");
    }
    if ((basis.transpose() * basis - Mat3::Identity()).cwiseAbs().maxCoeff() > 1e-12) {
        throw InvalidFrame("frame basis is not orthonormal");
    }
    if (std::abs(basis.col(0).cross(basis.col(1)).dot(basis.col(2)) - 1.0) > 1e-12) {
        throw InvalidFrame("frame basis is not right-handed");
    }
}

double klein_product(const Screw& s1, const Screw& s2) {
    return s1.resultant().dot(s2.moment_at_origin()) + s2.resultant().dot(s1.moment_at_origin());
}

Screw commutator(const Screw& s1, const Screw& s2) {
    const Vec3& r1 = s1.resultant();
    const Vec3& r2 = s2.resultant();
    return Screw(-r1.cross(r2), r2.cross(s1.moment_at_origin()) - r1.cross(s2.moment_at_origin()));
}

double killing_form(const Screw& x, const Screw& y) { return -4.0 * x.resultant().dot(y.resultant()); }

Mat6 ad(const Screw& s, const Frame& frame) {
    const Screw6 c = to_frame(s, frame);
    const Mat3 ra = -skew(c.a);
    Mat6 m = Mat6::Zero();
    m.topLeftCorner<3, 3>() = ra;
    m.bottomRightCorner<3, 3>() = ra;
    m.bottomLeftCorner<3, 3>() = -skew(c.b);
    return m;
}

std::array<Screw, 6> basis_screws(const Frame& frame) {
    std::array<Screw, 6> out;
    for (int i = 0; i < 3; ++i) {
        out[i] = from_applied_vector(frame.origin(), frame.axis(i));
        out[i + 3] = from_free_vector(frame.axis(i));
    }
    return out;
}

Screw6 to_frame(const Screw& s, const Frame& frame) {
    const Mat3& e = frame.basis();
    return {e.transpose() * s.resultant(), e.transpose() * s.evaluate(frame.origin())};
}

Screw from_frame(const Screw6& v, const Frame& frame) {
    const Mat3& e = frame.basis();
    return from_motor(frame.origin(), e * v.a, e * v.b);
}

Dual6 to_dual(const Screw& s, const Frame& frame) {
    const Screw6 c = to_frame(s, frame);
    return {c.b, c.a};
}

}  // namespace screw
