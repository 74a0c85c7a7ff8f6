#pragma once

#include <array>

#include "screw/screw.hpp"

namespace screw {

/// Origin plus a positively oriented orthonormal basis.
class Frame {
public:
    /// Columns of `basis` are e1, e2, e3. Throws InvalidFrame unless the basis
    /// is orthonormal and right-handed within 1e-12.
    Frame(const Point& origin, const Mat3& basis);

    static Frame identity() { return Frame(Point::origin(), Mat3::Identity()); }

    const Point& origin() const noexcept { return origin_; }
    const Mat3& basis() const noexcept { return basis_; }
    Vec3 axis(int i) const { return basis_.col(i); }

private:
    Point origin_;
    Mat3 basis_;
};

/// Frame coordinates of a screw: a = resultant, b = value at the frame origin.
struct Screw6 {
    Vec3 a = Vec3::Zero();
    Vec3 b = Vec3::Zero();

    Vec6 stacked() const {
        Vec6 v;
        v << a, b;
        return v;
    }
    static Screw6 from_stacked(const Vec6& v) { return {v.head<3>(), v.tail<3>()}; }
};

/// Coefficients of a dual element on the dual basis <m_i,.>, <f_i,.>.
/// Deliberately a separate type from Screw6.
struct Dual6 {
    Vec3 c = Vec3::Zero();
    Vec3 d = Vec3::Zero();

    Vec6 stacked() const {
        Vec6 v;
        v << c, d;
        return v;
    }
};

inline double pairing(const Dual6& z, const Screw6& s) { return z.c.dot(s.a) + z.d.dot(s.b); }

/// Klein form <s1, s2> = r1 . s2(P) + r2 . s1(P), any P.
double klein_product(const Screw& s1, const Screw& s2);

/// Lie bracket of the two vector fields:
///   [s1, s2](P) = r2 x s1(P) - r1 x s2(P),  resultant -r1 x r2.
/// This is the vector-field bracket itself, not its negative.
Screw commutator(const Screw& s1, const Screw& s2);

/// Killing form trace(ad_x ad_y) in closed form, -4 x.y on the resultants.
double killing_form(const Screw& x, const Screw& y);

/// Matrix of s' -> [s, s'] acting on to_frame(s', frame).stacked().
Mat6 ad(const Screw& s, const Frame& frame);

/// f1, f2, f3, m1, m2, m3: f_i = e_i applied at the origin, m_i = free e_i.
std::array<Screw, 6> basis_screws(const Frame& frame);

Screw6 to_frame(const Screw& s, const Frame& frame);
Screw from_frame(const Screw6& v, const Frame& frame);

/// Coordinates of <s, .> in the dual basis: the (a, b) -> (b, a) swap.
Dual6 to_dual(const Screw& s, const Frame& frame);

}  // namespace screw
