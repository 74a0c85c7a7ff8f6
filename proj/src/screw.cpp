#include "screw/screw.hpp"

#include <cmath>
#include <numbers>

namespace screw {

Screw::Screw(const Vec3& resultant, const Vec3& moment_at_origin)
    : resultant_(resultant), moment_(moment_at_origin) {
    if (!is_finite(resultant_) || !is_finite(moment_)) {
        throw InvalidArgument("screw components must be finite");
    }
}

Screw add(const Screw& a, const Screw& b) { return a + b; }

Screw scale(double k, const Screw& s) { return k * s; }

bool approx_equal(const Screw& a, const Screw& b, double tol) {
    return screw::approx_equal(a.resultant(), b.resultant(), tol) &&
           screw::approx_equal(a.moment_at_origin(), b.moment_at_origin(), tol);
}

Screw from_free_vector(const Vec3& v) { return Screw(Vec3::Zero(), v); }

Screw from_applied_vector(const Point& q, const Vec3& w) {
    // w x (O - q) = q x w
    return Screw(w, q.coords.cross(w));
}

Screw from_motor(const Point& q, const Vec3& resultant, const Vec3& value_at_q) {
    return Screw(resultant, value_at_q + resultant.cross(Point::origin() - q));
}

double scalar_invariant(const Screw& s) { return s.moment_at_origin().dot(s.resultant()); }

double resultant_threshold(const Screw& s) {
    return 1e-9 * std::max(1.0, s.moment_at_origin().norm());
}

bool has_zero_resultant(const Screw& s) { return s.resultant().norm() <= resultant_threshold(s); }

Vec3 vector_invariant(const Screw& s) {
    if (has_zero_resultant(s)) {
        return s.moment_at_origin();
    }
    const Vec3& r = s.resultant();
    return (s.moment_at_origin().dot(r) / r.squaredNorm()) * r;
}

double amplitude(const Screw& s) { return s.resultant().norm(); }

ScrewAxis screw_axis(const Screw& s) {
    if (has_zero_resultant(s)) {
        return DegenerateAxis{};
    }
    const Vec3& r = s.resultant();
    const double rr = r.squaredNorm();
    // Q = A + (r x s(A)) / r.r with A the global origin.
    Point q{r.cross(s.moment_at_origin()) / rr};
    return AxisLine{q, r / std::sqrt(rr)};
}

Pitch pitch(const Screw& s) {
    if (has_zero_resultant(s)) {
        if (s.moment_at_origin().isZero(0.0)) {
            return ZeroScrewPitch{};
        }
        return InfinitePitch{};
    }
    const Vec3& r = s.resultant();
    return FinitePitch{2.0 * std::numbers::pi * scalar_invariant(s) / r.squaredNorm()};
}

}  // namespace screw
