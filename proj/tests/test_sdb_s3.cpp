#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "bubble/hutchings.hpp"
#include "bubble/sdb_s3.hpp"

using namespace bubble;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;
const double total = 2 * pi * pi;

double equal_thirds_radius() {
    double lo = 0.0, hi = pi / 2;
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (lo + hi);
        (equal_volume_s3(m) < total / 3 ? lo : hi) = m;
    }
    return 0.5 * (lo + hi);
}

// Radii r1 < r2 <= pi/2 with the larger region no bigger than the exterior.
SdbRadiiS3 random_radii(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> r(0.05, pi / 2 - 1e-3);
    for (;;) {
        double a = r(rng), b = r(rng);
        if (std::abs(a - b) < 1e-4) continue;
        return {std::min(a, b), std::max(a, b)};
    }
}

}  // namespace

TEST_CASE("equal radii give a symmetric bubble", "[sdb_s3]") {
    for (double r : {0.3, 1.0, 1.5}) {
        auto a = generating_angles({r, r});
        CHECK(a.theta == 0.0);
        CHECK_THAT(a.r3, WithinAbs(pi / 2, 1e-15));
        CHECK_THAT(a.phi1, WithinAbs(a.phi2, 1e-15));
        auto v = sdb_volumes_s3({r, r});
        CHECK(v.v.lo() == v.w.lo());
        CHECK(v.v.hi() == v.w.hi());
    }
}

TEST_CASE("outer-cap branch switches where the tangent ratio is one third", "[sdb_s3]") {
    const double r1 = 0.5;
    // (tan r2 - tan r1)/(tan r2 + tan r1) = 1/3 exactly when tan r2 = 2 tan r1.
    double below = std::atan(2 * std::tan(r1) * (1 - 1e-6));
    double above = std::atan(2 * std::tan(r1) * (1 + 1e-6));
    auto a = generating_angles({r1, below});
    auto b = generating_angles({r1, above});
    CHECK_THAT(a.psi1_hat, WithinAbs(pi - a.phi1, 1e-12));
    CHECK_THAT(b.psi1_hat, WithinAbs(b.phi1, 1e-12));
    // Both branches meet at the hemisphere.
    CHECK_THAT(a.psi1_hat, WithinAbs(b.psi1_hat, 1e-5));
    CHECK_THAT(a.phi1, WithinAbs(pi / 2, 1e-3));
}

TEST_CASE("the interface circle is shared by all three caps", "[sdb_s3][property]") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; ++i) {
        auto rad = random_radii(rng);
        auto a = generating_angles(rad);
        double sx = std::sin(a.x);
        CHECK_THAT(std::sin(a.phi1) * std::sin(rad.r1), WithinAbs(sx, 1e-12));
        CHECK_THAT(std::sin(a.phi2) * std::sin(rad.r2), WithinAbs(sx, 1e-12));
        CHECK_THAT(std::sin(a.phi3) * std::sin(a.r3), WithinAbs(sx, 1e-12));
    }
}

TEST_CASE("equal thirds has area 6 pi", "[sdb_s3]") {
    double r = equal_thirds_radius();
    auto v = sdb_volumes_s3({r, r});
    CHECK_THAT(v.v.mid(), WithinRel(total / 3, 1e-12));
    Enclosure area = sdb_area_s3({r, r});
    CHECK(area.lo() - 1e-8 <= 6 * pi);
    CHECK(6 * pi <= area.hi() + 1e-8);
    // All three caps are great spheres here.
    CHECK_THAT(r, WithinAbs(pi / 2, 1e-15));
}

TEST_CASE("equal-volume closed form matches the cap decomposition", "[sdb_s3][property]") {
    std::mt19937_64 rng(2);
    // Near r = pi/2 the outer-cap angle tends to a right angle, where the
    // arcsine in the decomposition loses digits.
    std::uniform_real_distribution<double> rr(0.01, 1.4);
    for (int i = 0; i < 100; ++i) {
        double r = rr(rng);
        auto a = generating_angles({r, r});
        double parts = cap_volume(Space::S3, {r, a.psi1_hat}).mid() + cap_volume(Space::S3, {a.r3, a.phi3}).mid();
        CHECK_THAT(equal_volume_s3(r), WithinAbs(parts, 1e-12));
        CHECK_THAT(equal_volume_s3(r), WithinAbs(sdb_volumes_s3({r, r}).v.mid(), 1e-12));
    }
    CHECK(equal_volume_s3(1e-6) < 1e-15);
}

TEST_CASE("volumes are conserved", "[sdb_s3][property]") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        auto rad = random_radii(rng);
        auto v = sdb_volumes_s3(rad);
        Enclosure u = s3_exterior_from_outer_caps(rad);
        CHECK(v.v.lo() > 0.0);
        CHECK(v.w.lo() > 0.0);
        CHECK((v.v + v.w).hi() < total);
        CHECK_THAT((v.v + v.w + u).mid(), WithinAbs(total, 1e-10));
        CHECK((v.v + v.w + u).intersects(s3_total_volume_enclosure()));
    }
}

TEST_CASE("swapping labels swaps volumes and keeps the area", "[sdb_s3][property]") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
        auto rad = random_radii(rng);
        auto a = sdb_volumes_s3(rad);
        auto b = sdb_volumes_s3(SdbRadiiS3{rad.r2, rad.r1});
        CHECK_THAT(a.v.mid(), WithinAbs(b.w.mid(), 1e-12));
        CHECK_THAT(a.w.mid(), WithinAbs(b.v.mid(), 1e-12));
        CHECK_THAT(sdb_area_s3(rad).mid(), WithinAbs(sdb_area_s3(SdbRadiiS3{rad.r2, rad.r1}).mid(), 1e-12));
    }
}

TEST_CASE("equal radii place a great-sphere disk between the regions", "[sdb_s3]") {
    for (double r : {0.4, 1.1}) {
        auto a = generating_angles({r, r});
        double caps = 2 * cap_area(Space::S3, {r, a.psi1_hat}).mid() + cap_area(Space::S3, {pi / 2, a.phi3}).mid();
        CHECK_THAT(sdb_area_s3({r, r}).mid(), WithinAbs(caps, 1e-12));
    }
}

TEST_CASE("radii beyond a hemisphere are degenerate", "[sdb_s3]") {
    CHECK_THROWS_AS(sdb_volumes_s3({0.5, 1.7}), DegenerateConfig);
    CHECK_THROWS_AS(sdb_area_s3({-0.1, 1.0}), DegenerateConfig);
}

TEST_CASE("double bubble area is concave in the volumes", "[sdb_s3][property]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> f(0.05, 0.9);
    int checked = 0;
    while (checked < 200) {
        double v1 = f(rng), w1 = f(rng), v2 = f(rng), w2 = f(rng);
        if (v1 + w1 > 0.95 || v2 + w2 > 0.95) continue;
        auto area = [](double v, double w) { return sdb_area_fast(Space::S3, v * total, w * total); };
        double mid = area(0.5 * (v1 + v2), 0.5 * (w1 + w2));
        double chord = 0.5 * (area(v1, w1) + area(v2, w2));
        CHECK(mid >= chord - 1e-9);
        ++checked;
    }
}
