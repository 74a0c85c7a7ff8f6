#include <cmath>
#include <random>

#include "screw/cli/app.hpp"
#include "screw/lie.hpp"

namespace screw::cli {

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Vec3 vec() { return Vec3(dist_(rng_), dist_(rng_), dist_(rng_)); }
    Screw screw() { return Screw(vec(), vec()); }

    Frame frame() {
        Mat3 m;
        for (int i = 0; i < 3; ++i) {
            m.col(i) = vec();
        }
        Mat3 q = Eigen::HouseholderQR<Mat3>(m).householderQ();
        if (q.determinant() < 0.0) {
            q.col(2) = -q.col(2);
        }
        return Frame(Point{vec()}, q);
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> dist_{-1.0, 1.0};
};

double levi_civita(int i, int j, int k) { return 0.5 * (i - j) * (j - k) * (k - i); }

double screw_distance(const Screw& a, const Screw& b) {
    return std::max((a.resultant() - b.resultant()).norm(), (a.moment_at_origin() - b.moment_at_origin()).norm());
}

CheckResult check(std::string name, double worst, double tolerance) {
    return {std::move(name), worst <= tolerance, worst, tolerance};
}

}  // namespace

std::vector<CheckResult> selfcheck(std::uint64_t seed) {
    Sampler sample(seed);
    std::vector<CheckResult> out;

    {
        const Frame frame = sample.frame();
        const auto basis = basis_screws(frame);
        double worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                Screw ff, fm;
                for (int k = 0; k < 3; ++k) {
                    ff += -levi_civita(i, j, k) * basis[k];
                    fm += -levi_civita(i, j, k) * basis[k + 3];
                }
                worst = std::max(worst, screw_distance(commutator(basis[i + 3], basis[j + 3]), Screw::zero()));
                worst = std::max(worst, screw_distance(commutator(basis[i], basis[j + 3]), fm));
                worst = std::max(worst, screw_distance(commutator(basis[i], basis[j]), ff));
            }
        }
        out.push_back(check("commutation table [m,m]=0 [f,m]=-e m [f,f]=-e f", worst, 1e-14));
    }

    {
        double worst = 0.0;
        for (int n = 0; n < 200; ++n) {
            const Screw x = sample.screw(), y = sample.screw(), z = sample.screw();
            const double lhs = klein_product(commutator(z, x), y) + klein_product(x, commutator(z, y));
            worst = std::max(worst, std::abs(lhs));
        }
        out.push_back(check("Klein form ad-invariance", worst, 1e-12));
    }

    {
        const Frame frame = sample.frame();
        double worst = 0.0;
        for (int n = 0; n < 200; ++n) {
            const Screw x = sample.screw(), y = sample.screw();
            const double trace = (ad(x, frame) * ad(y, frame)).trace();
            worst = std::max(worst, std::abs(trace - killing_form(x, y)));
        }
        out.push_back(check("Killing form trace(ad_x ad_y) = -4 x.y", worst, 1e-9));
    }

    {
        double worst = 0.0;
        for (int n = 0; n < 200; ++n) {
            const Screw x = sample.screw(), y = sample.screw(), z = sample.screw();
            const Screw jacobi =
                commutator(x, commutator(y, z)) + commutator(z, commutator(x, y)) + commutator(y, commutator(z, x));
            worst = std::max(worst, screw_distance(jacobi, Screw::zero()));
        }
        out.push_back(check("Jacobi identity", worst, 1e-12));
    }

    {
        double worst = 0.0;
        for (int n = 0; n < 200; ++n) {
            const Screw s = sample.screw();
            const Point p{sample.vec()}, q{sample.vec()};
            const Vec3 lhs = s.evaluate(p) - s.evaluate(q);
            worst = std::max(worst, (lhs - s.resultant().cross(p - q)).norm());
        }
        out.push_back(check("constitutive equation", worst, 1e-12));
    }
    return out;
}

}  // namespace screw::cli
