#pragma once

#include <variant>

#include "screw/error.hpp"
#include "screw/vec.hpp"

namespace screw {

// A screw is a vector field s on Euclidean space obeying
//
//     s(P) - s(Q) = r x (P - Q)
//
// for a unique vector r, the resultant. It is stored as the pair
// (resultant, value at the global origin); everything public is phrased in
// terms of evaluate(), so the choice of origin is never observable.
class Screw {
public:
    Screw() : resultant_(Vec3::Zero()), moment_(Vec3::Zero()) {}

    /// Throws InvalidArgument on non-finite components.
    Screw(const Vec3& resultant, const Vec3& moment_at_origin);

    static Screw zero() { return Screw{}; }

    const Vec3& resultant() const noexcept { return resultant_; }
    const Vec3& moment_at_origin() const noexcept { return moment_; }

    Vec3 evaluate(const Point& p) const { return moment_ + resultant_.cross(p.coords); }

    friend Screw operator+(const Screw& a, const Screw& b) {
        return Screw(a.resultant_ + b.resultant_, a.moment_ + b.moment_);
    }
    friend Screw operator-(const Screw& a, const Screw& b) {
        return Screw(a.resultant_ - b.resultant_, a.moment_ - b.moment_);
    }
    friend Screw operator-(const Screw& a) { return Screw(-a.resultant_, -a.moment_); }
    friend Screw operator*(double k, const Screw& s) { return Screw(k * s.resultant_, k * s.moment_); }
    friend Screw operator*(const Screw& s, double k) { return k * s; }
    Screw& operator+=(const Screw& o) { return *this = *this + o; }

    /// Exact representation equality; use approx_equal for computed results.
    friend bool operator==(const Screw& a, const Screw& b) {
        return a.resultant_ == b.resultant_ && a.moment_ == b.moment_;
    }

private:
    Vec3 resultant_;
    Vec3 moment_;
};

inline Vec3 evaluate(const Screw& s, const Point& p) { return s.evaluate(p); }

Screw add(const Screw& a, const Screw& b);
Screw scale(double k, const Screw& s);

/// Componentwise on (resultant, moment at origin), absolute+relative tolerance.
bool approx_equal(const Screw& a, const Screw& b, double tol = 1e-12);

// Construction maps.

/// Constant field equal to v everywhere.
Screw from_free_vector(const Vec3& v);
/// Field w x (P - q): the screw of the vector w applied at q.
Screw from_applied_vector(const Point& q, const Vec3& w);
/// The screw with the given resultant whose value at q is value_at_q.
Screw from_motor(const Point& q, const Vec3& resultant, const Vec3& value_at_q);

// Invariants.

/// s(P).r, independent of P.
double scalar_invariant(const Screw& s);
/// Projection of s(P) on the resultant direction, or s(P) itself when the
/// resultant vanishes.
Vec3 vector_invariant(const Screw& s);
/// |resultant|
double amplitude(const Screw& s);

/// Threshold below which the resultant is treated as zero:
/// 1e-9 * max(1, |moment at origin|).
double resultant_threshold(const Screw& s);
bool has_zero_resultant(const Screw& s);

struct DegenerateAxis {
    friend bool operator==(const DegenerateAxis&, const DegenerateAxis&) { return true; }
};

struct AxisLine {
    Point point;    // foot of the perpendicular from the global origin
    Vec3 direction; // unit
};

/// Locus of minimum |s(P)|: the whole space when the resultant vanishes,
/// otherwise a line parallel to the resultant.
using ScrewAxis = std::variant<DegenerateAxis, AxisLine>;

ScrewAxis screw_axis(const Screw& s);

inline bool is_degenerate(const ScrewAxis& a) { return std::holds_alternative<DegenerateAxis>(a); }

struct FinitePitch {
    double value;
};
struct InfinitePitch {};
struct ZeroScrewPitch {};

// Pitch with the 2*pi normalization: invariant = (p / 2 pi) * resultant, so p
// is the translation along the axis per full turn of the screw's flow.
// Note this is 2*pi times the more common s(P).r / r.r convention.
using Pitch = std::variant<FinitePitch, InfinitePitch, ZeroScrewPitch>;

Pitch pitch(const Screw& s);

}  // namespace screw
