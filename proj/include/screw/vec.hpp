#pragma once

#include <Eigen/Dense>

namespace screw {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

inline bool is_finite(const Vec3& v) { return v.allFinite(); }

/// Matrix of the map u -> v x u.
inline Mat3 skew(const Vec3& v) {
    Mat3 m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
         -v.y(), v.x(), 0.0;
    return m;
}

/// A point of Euclidean space, stored by its coordinates relative to the
/// fixed global origin. Only affine operations are provided.
struct Point {
    Vec3 coords = Vec3::Zero();

    Point() = default;
    explicit Point(const Vec3& c) : coords(c) {}
    Point(double x, double y, double z) : coords(x, y, z) {}

    static Point origin() { return Point{}; }

    friend Vec3 operator-(const Point& p, const Point& q) { return p.coords - q.coords; }
    friend Point operator+(const Point& p, const Vec3& v) { return Point{p.coords + v}; }
    friend Point operator-(const Point& p, const Vec3& v) { return Point{p.coords - v}; }
    Point& operator+=(const Vec3& v) {
        coords += v;
        return *this;
    }
    friend bool operator==(const Point& p, const Point& q) { return p.coords == q.coords; }
};

/// |a - b| <= tol * max(1, |a|, |b|)
inline bool approx_equal(const Vec3& a, const Vec3& b, double tol = 1e-12) {
    const double scale = std::max({1.0, a.norm(), b.norm()});
    return (a - b).norm() <= tol * scale;
}

inline bool approx_equal(double a, double b, double tol = 1e-12) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

}  // namespace screw
