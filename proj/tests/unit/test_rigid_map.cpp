#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "random.hpp"
#include "screw/rigid_map.hpp"

using namespace screw;
using screw::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

bool maps_close(const RigidMap& a, const RigidMap& b, double tol) {
    return (a.rotation() - b.rotation()).cwiseAbs().maxCoeff() <= tol &&
           (a.translation() - b.translation()).norm() <= tol * std::max(1.0, a.translation().norm());
}

Screw random_screw_with_amplitude(Gen& gen, double lo, double hi) {
    return Screw(gen.uniform(lo, hi) * gen.unit(), gen.vec(2.0));
}

}  // namespace

TEST_CASE("rigid map validation") {
    CHECK_THROWS_AS(RigidMap(2.0 * Mat3::Identity(), Vec3::Zero()), InvalidRotation);
    Mat3 reflection = Mat3::Identity();
    reflection(0, 0) = -1.0;
    CHECK_THROWS_AS(RigidMap(reflection, Vec3::Zero()), InvalidRotation);
    Gen gen(20);
    CHECK_NOTHROW(RigidMap(gen.rotation(), gen.vec()));
}

TEST_CASE("compose and apply") {
    Gen gen(21);
    for (int n = 0; n < 100; ++n) {
        const RigidMap g1(gen.rotation(), gen.vec(3)), g2(gen.rotation(), gen.vec(3)), g3(gen.rotation(), gen.vec(3));
        const Point p = gen.point(5), q = gen.point(5);
        CHECK(maps_close(compose(g1, RigidMap::identity()), g1, 0.0));
        CHECK(screw::approx_equal(apply(compose(g2, g1), p).coords, apply(g2, apply(g1, p)).coords));
        CHECK(maps_close(compose(compose(g3, g2), g1), compose(g3, compose(g2, g1)), 1e-14));
        CHECK(std::abs((g1.apply(p) - g1.apply(q)).norm() - (p - q).norm()) < 1e-12);
    }
}

TEST_CASE("exp") {
    Gen gen(22);
    SUBCASE("free screw translates") {
        const Vec3 v(1, -2, 0.5);
        const RigidMap g = exp(from_free_vector(v), 3.0);
        CHECK(g.rotation() == Mat3::Identity());
        CHECK(screw::approx_equal(g.translation(), 3.0 * v));
    }
    SUBCASE("full turn translates by the pitch") {
        for (int n = 0; n < 20; ++n) {
            const Screw s = random_screw_with_amplitude(gen, 0.1, 3.0);
            const double p = std::get<FinitePitch>(pitch(s)).value;
            const RigidMap g = exp(s, 2.0 * kPi / amplitude(s));
            CHECK((g.rotation() - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(screw::approx_equal(g.translation(), p * s.resultant().normalized(), 1e-11));
        }
    }
    SUBCASE("matches numerical flow") {
        for (int n = 0; n < 20; ++n) {
            const Screw s = random_screw_with_amplitude(gen, 0.01, 3.0);
            const double t = gen.uniform(-1.5, 1.5);
            const RigidMap g = exp(s, t);
            for (int k = 0; k < 20; ++k) {
                const Point p = gen.point(3);
                CHECK((g.apply(p) - screw::testing::rk4_flow(s, p, t, 1000)).norm() < 1e-8);
            }
        }
    }
    SUBCASE("tiny resultant uses the series branch consistently") {
        const Screw s(Vec3(1e-6, 0, 0), Vec3(0, 1, 0));
        const Point p(0.2, 0.3, -0.1);
        CHECK((exp(s, 1.0).apply(p) - screw::testing::rk4_flow(s, p, 1.0, 100)).norm() < 1e-13);
    }
    for (int n = 0; n < 50; ++n) {
        const Screw s = gen.screw(2.0);
        const double a = gen.uniform(-2, 2), b = gen.uniform(-2, 2);
        CHECK(maps_close(exp(s, 0.0), RigidMap::identity(), 0.0));
        CHECK(orthonormality_defect(exp(s, a).rotation()) < 1e-13);
        CHECK(maps_close(compose(exp(s, a), exp(s, b)), exp(s, a + b), 1e-12));
    }
}

TEST_CASE("axis of a zero-pitch screw is fixed") {
    Gen gen(23);
    for (int n = 0; n < 50; ++n) {
        const Screw s = from_applied_vector(gen.point(3), gen.vec(2));
        const auto axis = std::get<AxisLine>(screw_axis(s));
        const Point p = axis.point + gen.uniform(-3, 3) * axis.direction;
        const Vec3 moved = exp(s, gen.uniform(-2, 2)).apply(p) - p;
        CHECK((moved - moved.dot(axis.direction) * axis.direction).norm() < 1e-10);
    }
}

TEST_CASE("fundamental field is the derivative of the flow") {
    Gen gen(24);
    const double h = 1e-5;
    for (int n = 0; n < 50; ++n) {
        const Screw s = gen.screw(2.0);
        const Point p = gen.point(3);
        const Vec3 derivative = (exp(s, h).apply(p) - exp(s, -h).apply(p)) / (2.0 * h);
        CHECK((derivative - s.evaluate(p)).norm() < 1e-7);
    }
}

TEST_CASE("log") {
    Gen gen(25);
    SUBCASE("identity") {
        const auto c = log(RigidMap::identity());
        CHECK(c.angle == 0.0);
        CHECK(c.slide == 0.0);
        REQUIRE(c.pure_translation);
        CHECK(c.pure_translation->isZero(0.0));
    }
    SUBCASE("pure translation") {
        const auto c = log(RigidMap::translation(Vec3(1, 2, 3)));
        CHECK(c.angle == 0.0);
        CHECK(*c.pure_translation == Vec3(1, 2, 3));
        CHECK(c.screw() == from_free_vector(Vec3(1, 2, 3)));
    }
    SUBCASE("half turn about z") {
        Mat3 r = Mat3::Identity();
        r(0, 0) = r(1, 1) = -1.0;
        const auto c = log(RigidMap(r, Vec3::Zero()));
        CHECK(c.angle == doctest::Approx(kPi));
        CHECK(c.slide == doctest::Approx(0.0));
        const auto axis = std::get<AxisLine>(c.axis);
        CHECK(std::abs(std::abs(axis.direction.z()) - 1.0) < 1e-15);
        CHECK(axis.point.coords.norm() < 1e-15);
    }
    SUBCASE("half turn with slide reconstructs") {
        const Screw s = from_motor(Point(1, 2, 0), kPi * Vec3(0, 1, 1).normalized(), 0.7 * Vec3(0, 1, 1).normalized());
        const RigidMap g = exp(s, 1.0);
        CHECK(maps_close(exp(log(g).screw(), 1.0), g, 1e-12));
        CHECK(log(g).angle == doctest::Approx(kPi));
    }
    SUBCASE("round trip") {
        for (int n = 0; n < 100; ++n) {
            const Screw s = random_screw_with_amplitude(gen, 0.01, 3.0);
            const RigidMap g = exp(s, 1.0);
            const auto c = log(g);
            CHECK(c.angle >= 0.0);
            CHECK(c.angle <= kPi);
            CHECK(maps_close(exp(c.screw(), 1.0), g, 1e-12));
            CHECK(screw::approx_equal(c.screw(), s, 1e-9));
        }
    }
    SUBCASE("random rigid maps") {
        for (int n = 0; n < 100; ++n) {
            const RigidMap g(gen.rotation(), gen.vec(5));
            CHECK(maps_close(exp(log(g).screw(), 1.0), g, 1e-9));
        }
    }
    SUBCASE("near-identity rotations") {
        for (double angle : {1e-9, 1e-7, 1e-5, 1e-3}) {
            // below 1e-8 the rotation is dropped, so allow that much
            const Screw s(angle * Vec3(0, 0, 1), Vec3(0.3, 0.1, 0.2));
            const RigidMap g = exp(s, 1.0);
            CHECK(maps_close(exp(log(g).screw(), 1.0), g, 1e-8));
        }
    }
}
