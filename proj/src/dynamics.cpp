#include "screw/dynamics.hpp"

#include <cmath>

namespace screw {

MassDistribution::MassDistribution(std::vector<Particle> particles) : particles_(std::move(particles)) {
    for (const auto& p : particles_) {
        if (!std::isfinite(p.mass) || p.mass <= 0.0) {
            throw InvalidArgument("particle masses must be positive and finite");
        }
        if (!is_finite(p.position.coords) || (p.velocity && !is_finite(*p.velocity))) {
            throw InvalidArgument("particle state must be finite");
        }
    }
}

double MassDistribution::total_mass() const {
    double m = 0.0;
    for (const auto& p : particles_) {
        m += p.mass;
    }
    return m;
}

bool MassDistribution::has_velocities() const {
    for (const auto& p : particles_) {
        if (!p.velocity) {
            return false;
        }
    }
    return true;
}

Vec3 InertiaOperator::apply_at(const Point& q, const Vec3& eta) const {
    const Vec3 cq = center - q;
    return at_center * eta + total_mass * cq.cross(eta.cross(cq));
}

Wrench wrench_of(const ForceSystem& fs) {
    Screw sum;
    for (const auto& f : fs.forces) {
        sum += from_applied_vector(f.point, f.force);
    }
    return {sum};
}

MomentumScrew momentum_screw(const MassDistribution& md) {
    if (!md.has_velocities()) {
        throw MissingVelocities("momentum screw needs a velocity for every particle");
    }
    Screw sum;
    for (const auto& p : md.particles()) {
        sum += from_applied_vector(p.position, p.mass * *p.velocity);
    }
    return {sum};
}

InertiaOperator inertia_of(const MassDistribution& md) {
    if (md.particles().empty()) {
        throw EmptyDistribution("mass distribution has no particles");
    }
    InertiaOperator out;
    out.total_mass = md.total_mass();
    Vec3 weighted = Vec3::Zero();
    for (const auto& p : md.particles()) {
        weighted += p.mass * p.position.coords;
    }
    out.center = md.particles().size() == 1 ? md.particles().front().position : Point{weighted / out.total_mass};
    // r x (eta x r) = (|r|^2 I - r r^T) eta
    Mat3 inertia = Mat3::Zero();
    for (const auto& p : md.particles()) {
        const Vec3 r = p.position - out.center;
        inertia += p.mass * (r.squaredNorm() * Mat3::Identity() - r * r.transpose());
    }
    out.at_center = 0.5 * (inertia + inertia.transpose());
    return out;
}

MomentumScrew momentum_from_twist(const InertiaOperator& inertia, const Twist& k) {
    const Vec3 v_center = k.velocity_at(inertia.center);
    return {from_motor(inertia.center, inertia.total_mass * v_center, inertia.apply_at_center(k.omega()))};
}

double kinetic_energy(const Twist& k, const MomentumScrew& l) { return 0.5 * klein_product(k.screw, l.screw); }

double power(const Twist& k, const Wrench& d) { return klein_product(k.screw, d.screw); }

std::vector<Screw> reciprocal_subspace(const std::vector<Screw>& w, const Frame& frame) {
    // Rows are the dual coordinates of each w; the kernel of this matrix is
    // the set of frame coordinates z with <w, z> = 0.
    Eigen::Matrix<double, Eigen::Dynamic, 6> pairing(static_cast<Eigen::Index>(w.size()), 6);
    for (std::size_t i = 0; i < w.size(); ++i) {
        pairing.row(static_cast<Eigen::Index>(i)) = to_dual(w[i], frame).stacked().transpose();
    }

    int rank = 0;
    Mat6 v = Mat6::Identity();
    if (!w.empty()) {
        Eigen::JacobiSVD<Eigen::Matrix<double, Eigen::Dynamic, 6>> svd(pairing, Eigen::ComputeFullV);
        const auto& sigma = svd.singularValues();
        const double largest = sigma.size() > 0 ? sigma(0) : 0.0;
        for (Eigen::Index i = 0; i < sigma.size(); ++i) {
            if (largest > 0.0 && sigma(i) > 1e-10 * largest) {
                ++rank;
            }
        }
        v = svd.matrixV();
    }

    // Canonical basis: reduced row echelon form of the kernel vectors.
    Eigen::Matrix<double, Eigen::Dynamic, 6> kernel = v.rightCols(6 - rank).transpose();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < 6 && row < kernel.rows(); ++col) {
        Eigen::Index pivot = row;
        kernel.col(col).tail(kernel.rows() - row).cwiseAbs().maxCoeff(&pivot);
        pivot += row;
        if (std::abs(kernel(pivot, col)) < 1e-10) {
            continue;
        }
        kernel.row(row).swap(kernel.row(pivot));
        kernel.row(row) /= kernel(row, col);
        for (Eigen::Index r = 0; r < kernel.rows(); ++r) {
            if (r != row) {
                kernel.row(r) -= kernel(r, col) * kernel.row(row);
            }
        }
        ++row;
    }

    std::vector<Screw> out;
    for (Eigen::Index j = 0; j < kernel.rows(); ++j) {
        out.push_back(from_frame(Screw6::from_stacked(kernel.row(j).transpose()), frame));
    }
    return out;
}

Screw cardinal_derivative(const MomentumScrew& before, const MomentumScrew& after, double h,
                          const Wrench& d) {
    if (!(h > 0.0)) {
        throw InvalidArgument("time step must be positive");
    }
    return (1.0 / h) * (after.screw - before.screw) - d.screw;
}

Screw moving_frame_derivative(const MomentumScrew& l, const Twist& k, const Wrench& d) {
    return d.screw + commutator(k.screw, l.screw);
}

}  // namespace screw
