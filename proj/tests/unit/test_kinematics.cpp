#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "random.hpp"
#include "screw/kinematics.hpp"

using namespace screw;
using screw::testing::Gen;

TEST_CASE("compose_chain") {
    CHECK_THROWS_AS(MotionChain({}), InvalidArgument);

    const Twist k = Twist::rotation_about(Point(1, 2, 3), Vec3(0, 1, 0));
    CHECK(compose_chain(MotionChain({k})).screw == k.screw);

    SUBCASE("opposite rotations about parallel axes translate") {
        const Vec3 omega(0, 0, 3);
        const Twist a = Twist::rotation_about(Point(0, 0, 0), omega);
        const Twist b = Twist::rotation_about(Point(2, 0, 0), -omega);
        const Twist sum = compose_chain(MotionChain({a, b}));
        CHECK(sum.omega().isZero(0.0));
        CHECK(is_degenerate(instantaneous_axis(sum)));
        const Vec3 v = sum.velocity_at(Point(5, -1, 7));
        CHECK(v.norm() == doctest::Approx(6.0).epsilon(1e-12));
        CHECK(v.dot(omega) == 0.0);
        CHECK(v.dot(Vec3(1, 0, 0)) == 0.0);
    }

    SUBCASE("three coplanar rotations") {
        const std::vector<Twist> ks = {
            Twist::rotation_about(Point(0, 0, 0), Vec3(0, 0, 1)),
            Twist::rotation_about(Point(1, 0, 0), Vec3(0, 0, 2)),
            Twist::rotation_about(Point(0, 3, 0), Vec3(0, 0, -0.5)),
        };
        const Twist sum = compose_chain(MotionChain(ks));
        CHECK(sum.omega() == Vec3(0, 0, 2.5));
        // axis point from the moment balance: sum w_i (x_i - x) = 0
        const Point expected((0 * 1 + 1 * 2 + 0 * -0.5) / 2.5, (0 * 1 + 0 * 2 + 3 * -0.5) / 2.5, 0);
        const auto axis = std::get<AxisLine>(instantaneous_axis(sum));
        CHECK(screw::approx_equal(axis.point.coords, expected.coords));
        Gen gen(30);
        for (int i = 0; i < 10; ++i) {
            const Point p = gen.point(4);
            Vec3 direct = Vec3::Zero();
            for (const auto& k : ks) {
                direct += k.velocity_at(p);
            }
            CHECK(screw::approx_equal(sum.velocity_at(p), direct));
            CHECK(screw::approx_equal(sum.velocity_at(p), sum.omega().cross(p - axis.point)));
        }
    }
}

TEST_CASE("chain properties") {
    Gen gen(31);
    for (int n = 0; n < 50; ++n) {
        std::vector<Twist> ks;
        Vec3 omega_sum = Vec3::Zero();
        for (int i = 0, count = gen.integer(1, 6); i < count; ++i) {
            ks.push_back({gen.screw()});
            omega_sum += ks.back().omega();
        }
        const Twist sum = compose_chain(MotionChain(ks));
        CHECK(sum.omega() == omega_sum);
        std::shuffle(ks.begin(), ks.end(), gen.engine());
        CHECK(screw::approx_equal(compose_chain(MotionChain(ks)).screw, sum.screw));
    }
}

TEST_CASE("instantaneous axis and point velocity") {
    const Twist rotation = Twist::rotation_about(Point(1, 1, 0), Vec3(0, 0, 2));
    const auto axis = std::get<AxisLine>(instantaneous_axis(rotation));
    CHECK(screw::approx_equal(axis.point.coords, Vec3(1, 1, 0)));
    CHECK(is_degenerate(instantaneous_axis(Twist::translation(Vec3(1, 0, 0)))));

    // rotation + perpendicular translation: axis shifted by |v|/|omega|
    const Twist shifted{Screw(Vec3(0, 0, 2), Vec3(4, 0, 0))};
    const auto line = std::get<AxisLine>(instantaneous_axis(shifted));
    CHECK(line.point.coords.norm() == doctest::Approx(2.0));
    CHECK(shifted.velocity_at(line.point).norm() < 1e-15);

    CHECK(point_velocity(rotation, Point(1, 1, 5)).norm() == 0.0);
    CHECK(point_velocity(Twist::translation(Vec3(1, 2, 3)), Point(9, 9, 9)) == Vec3(1, 2, 3));
    CHECK(point_velocity(Twist::rotation_about(Point::origin(), Vec3(0, 0, 1)), Point(1, 0, 0)) == Vec3(0, 1, 0));
}

TEST_CASE("translation as a rotation couple") {
    Gen gen(32);
    for (int n = 0; n < 100; ++n) {
        const Vec3 v = gen.vec(3);
        const auto [a, b] = rotation_couple(v, gen.point(2), gen.uniform(0.1, 4));
        CHECK(std::abs(scalar_invariant(a.screw)) < 1e-12);
        CHECK(std::abs(scalar_invariant(b.screw)) < 1e-12);
        CHECK(screw::approx_equal((a.screw + b.screw), Twist::translation(v).screw));
    }
    CHECK_THROWS_AS(rotation_couple(Vec3(1, 0, 0), Point::origin(), 0.0), InvalidArgument);
}
