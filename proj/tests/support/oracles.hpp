#pragma once

// Independent reference computations. None of these call into the code path
// they are used to check.

#include <cmath>
#include <vector>

#include "screw/dynamics.hpp"

namespace screw::testing {

/// sum_i (P_i - Q) x F_i
inline Vec3 moment_by_direct_sum(const ForceSystem& fs, const Point& q) {
    Vec3 m = Vec3::Zero();
    for (const auto& f : fs.forces) {
        m += (f.point - q).cross(f.force);
    }
    return m;
}

/// sum_i (R_i - Q) x m_i v_i
inline Vec3 angular_momentum_by_direct_sum(const std::vector<Particle>& ps, const Point& q) {
    Vec3 l = Vec3::Zero();
    for (const auto& p : ps) {
        l += (p.position - q).cross(p.mass * *p.velocity);
    }
    return l;
}

/// I_Q(eta) = sum_i m_i (R_i - Q) x [eta x (R_i - Q)]
inline Vec3 inertia_by_defining_sum(const std::vector<Particle>& ps, const Point& q, const Vec3& eta) {
    Vec3 out = Vec3::Zero();
    for (const auto& p : ps) {
        const Vec3 r = p.position - q;
        out += p.mass * r.cross(eta.cross(r));
    }
    return out;
}

/// Classical fourth-order Runge-Kutta integration of dP/dt = s(P).
inline Point rk4_flow(const Screw& s, Point p, double t, int steps) {
    const double h = t / steps;
    auto f = [&](const Vec3& x) -> Vec3 { return s.moment_at_origin() + s.resultant().cross(x); };
    Vec3 x = p.coords;
    for (int i = 0; i < steps; ++i) {
        const Vec3 k1 = f(x);
        const Vec3 k2 = f(x + 0.5 * h * k1);
        const Vec3 k3 = f(x + 0.5 * h * k2);
        const Vec3 k4 = f(x + h * k3);
        x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return Point{x};
}

/// Rank by Gaussian elimination with partial pivoting on a row-major copy.
inline int rank_by_elimination(std::vector<std::vector<double>> rows, double tol = 1e-9) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        for (std::size_t r = pivot; r < rows.size(); ++r) {
            if (std::abs(rows[r][c]) > std::abs(rows[pivot][c])) {
                pivot = r;
            }
        }
        if (std::abs(rows[pivot][c]) < tol) {
            continue;
        }
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const auto& pr = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            const double factor = rows[r][c] / pr[c];
            for (std::size_t k = c; k < cols; ++k) {
                rows[r][k] -= factor * pr[k];
            }
        }
        ++rank;
    }
    return rank;
}

/// (resultant, moment at origin) as a 6-row for rank computations.
inline std::vector<double> raw_row(const Screw& s) {
    return {s.resultant().x(), s.resultant().y(), s.resultant().z(),
            s.moment_at_origin().x(), s.moment_at_origin().y(), s.moment_at_origin().z()};
}

/// 6x6 matrix of s' -> [s, s'] built column by column from the
/// commutator, in raw (resultant, moment at origin) coordinates.
inline Eigen::Matrix<double, 6, 6> ad_by_columns(const Screw& s) {
    Eigen::Matrix<double, 6, 6> m;
    for (int j = 0; j < 6; ++j) {
        Vec3 a = Vec3::Zero(), b = Vec3::Zero();
        (j < 3 ? a : b)(j % 3) = 1.0;
        const Screw c = commutator(s, Screw(a, b));
        m.col(j) << c.resultant(), c.moment_at_origin();
    }
    return m;
}

inline double max_distance(const Screw& a, const Screw& b) {
    return std::max((a.resultant() - b.resultant()).norm(), (a.moment_at_origin() - b.moment_at_origin()).norm());
}

}  // namespace screw::testing
