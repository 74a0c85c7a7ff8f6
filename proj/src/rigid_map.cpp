#include "screw/rigid_map.hpp"

#include <cmath>
#include <numbers>

namespace screw {

double orthonormality_defect(const Mat3& r) {
    const double ortho = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
    return std::max(ortho, std::abs(r.determinant() - 1.0));
}

RigidMap::RigidMap(const Mat3& rotation, const Vec3& translation)
    : rotation_(rotation), translation_(translation) {
    if (!rotation.allFinite() || !is_finite(translation)) {
        throw InvalidRotation("rigid map has non-finite entries");
    }
    if (orthonormality_defect(rotation) > 1e-10) {
        throw InvalidRotation("rotation matrix is not special orthogonal");
    }
}

RigidMap compose(const RigidMap& g2, const RigidMap& g1) {
    return RigidMap(RigidMap::Unchecked{}, g2.rotation_ * g1.rotation_,
                    g2.rotation_ * g1.translation_ + g2.translation_);
}

namespace {

// Coefficients of exp(W) = I + a W + b W^2 and of
// int_0^1 exp(sW) ds = I + b W + c W^2, where |W| = theta.
struct ExpCoefficients {
    double a, b, c;
};

ExpCoefficients exp_coefficients(double theta) {
    const double t2 = theta * theta;
    if (theta < 1e-4) {
        return {1.0 - t2 / 6.0 + t2 * t2 / 120.0,
                0.5 - t2 / 24.0 + t2 * t2 / 720.0,
                1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0};
    }
    return {std::sin(theta) / theta,
            (1.0 - std::cos(theta)) / t2,
            (theta - std::sin(theta)) / (t2 * theta)};
}

}  // namespace

RigidMap exp(const Screw& s, double t) {
    // dP/dt = m + w x P  =>  P(t) = e^{tW} P0 + (int_0^t e^{sW} ds) m
    const Vec3 w = t * s.resultant();
    const Mat3 W = skew(w);
    const Mat3 W2 = W * W;
    const auto k = exp_coefficients(w.norm());
    const Mat3 rot = Mat3::Identity() + k.a * W + k.b * W2;
    const Mat3 integral = Mat3::Identity() + k.b * W + k.c * W2;
    return RigidMap(RigidMap::Unchecked{}, rot, integral * (t * s.moment_at_origin()));
}

Screw ChaslesDecomposition::screw() const {
    if (pure_translation) {
        return from_free_vector(*pure_translation);
    }
    if (const auto* line = std::get_if<AxisLine>(&axis)) {
        return from_motor(line->point, angle * line->direction, slide * line->direction);
    }
    // Degenerate axis with no stored translation: identity.
    return Screw::zero();
}

ChaslesDecomposition log(const RigidMap& g) {
    const Mat3& r = g.rotation();
    if (!r.allFinite() || orthonormality_defect(r) > 1e-10) {
        throw InvalidRotation("rotation matrix is not special orthogonal");
    }
    const Vec3& t = g.translation();

    // axial = sin(theta) * u
    const Vec3 axial(0.5 * (r(2, 1) - r(1, 2)), 0.5 * (r(0, 2) - r(2, 0)), 0.5 * (r(1, 0) - r(0, 1)));
    const double cos_theta = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
    const double theta = std::atan2(axial.norm(), cos_theta);

    ChaslesDecomposition out;
    if (theta < 1e-8) {
        out.pure_translation = t;
        return out;
    }

    Vec3 u;
    if (cos_theta > 0.0) {
        u = axial.normalized();
    } else {
        // (R + R^T)/2 - cos(theta) I = (1 - cos(theta)) u u^T; take the
        // best-conditioned column.
        const Mat3 sym = 0.5 * (r + r.transpose()) - cos_theta * Mat3::Identity();
        Eigen::Index k = 0;
        sym.diagonal().maxCoeff(&k);
        u = sym.col(k).normalized();
        if (u.dot(axial) < 0.0) {
            u = -u;
        }
    }

    const double slide = u.dot(t);
    const Vec3 t_perp = t - slide * u;
    // Fixed point of the planar part: (I - R) q = t_perp with q orthogonal to u.
    const double cot_half = 1.0 / std::tan(0.5 * theta);
    const Vec3 q = 0.5 * (t_perp + cot_half * u.cross(t_perp));

    out.axis = AxisLine{Point{q}, u};
    out.angle = theta;
    out.slide = slide;
    return out;
}

}  // namespace screw
