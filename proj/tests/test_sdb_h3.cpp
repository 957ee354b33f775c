#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "bubble/hutchings.hpp"
#include "bubble/sdb_h3.hpp"

using namespace bubble;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double pi = std::numbers::pi;
const double v_inf = pi * (1.5 - std::log(2.0));
const double a_inf = 3 * pi;
const double c_inf = 2 * pi;

// Canonical k1 >= k2 > 1 spread over several decades of volume.
SdbCurvaturesH3 random_curvatures(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> e(-6.0, 2.5), f(0.0, 1.0);
    double k2 = 1.0 + std::exp(e(rng));
    double k1 = k2 + (k2 - 1.0) * 3.0 * f(rng) + 1e-9;
    return {k1, k2};
}

}  // namespace

TEST_CASE("geodesic interface of equal curvatures", "[sdb_h3]") {
    for (double k : {1.05, 1.5, 3.0, 12.0}) {
        auto a = cap_areas_h3({k, k});
        double expected = 2 * pi * (k / std::sqrt(k * k - 0.75) - 1);
        CHECK_THAT(a.c3.mid(), WithinRel(expected, 1e-13));
        double y = interface_geometry_h3({k, k}).y;
        CHECK_THAT(a.c3.mid(), WithinRel(2 * pi * (std::cosh(y) - 1), 1e-12));
    }
    double prev = 1.0;
    for (double e : {1e-3, 1e-6, 1e-9}) {
        double gap = std::abs(cap_areas_h3({1 + e, 1 + e}).c3.mid() - c_inf);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-7);
}

TEST_CASE("outer-cap branches agree where they switch", "[sdb_h3]") {
    for (double k2 : {1.2, 2.0, 7.0}) {
        double k1 = 2 * k2;  // (k1 - k2)/(k1 + k2) = 1/3
        auto p = kernel::h3_parts(k1, k2);
        double close_area = 2 * pi * (1 + p.s1) / (k1 * k1 - 1);
        double far_area = 2 * pi * p.q1;
        CHECK_THAT(close_area, WithinAbs(far_area, 1e-10));
        double close_vol = pi * (k1 * (1 + p.s1) / (k1 * k1 - 1) - std::atanh(1 / k1) - std::atanh(p.s1 / k1));
        double kq = k1 * p.q1;
        double far_vol = pi * (kq - std::atanh(kq / (1 + p.q1)));
        CHECK_THAT(close_vol, WithinAbs(far_vol, 1e-10));
    }
}

TEST_CASE("cap volumes", "[sdb_h3]") {
    for (double k : {1.1, 2.0, 9.0}) CHECK(cap_volumes_h3({k, k}).c3.contains(0.0));
    // The deficit of each outer cap against its full ball tends to v_inf.
    double prev = 1.0;
    for (double e : {1e-2, 1e-3, 1e-4, 1e-5}) {
        double k = 1 + e;
        double deficit = kernel::sphere_volume_k(k) - cap_volumes_h3({k, k}).c1.mid();
        CHECK(std::abs(deficit - v_inf) < prev);
        prev = std::abs(deficit - v_inf);
    }
    CHECK(prev < 5e-4);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        auto cc = cap_volumes_h3(random_curvatures(rng));
        CHECK((cc.c1 + cc.c3).lo() > 0.0);
        CHECK((cc.c2 - cc.c3).lo() > 0.0);
    }
    CHECK_THROWS_AS(cap_volumes_h3({1.5, 2.0}), DomainError);
    CHECK_THROWS_AS(cap_volumes_h3({0.9, 0.8}), DomainError);
}

TEST_CASE("volumes follow the curvature labels", "[sdb_h3][property]") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; ++i) {
        auto c = random_curvatures(rng);
        auto raw = sdb_volumes_h3(c);
        auto swapped = sdb_volumes_h3(SdbCurvaturesH3{c.k2, c.k1});
        CHECK_THAT(raw.v.mid(), WithinRel(swapped.w.mid(), 1e-12));
        CHECK_THAT(raw.w.mid(), WithinRel(swapped.v.mid(), 1e-12));
        auto canon = sdb_volumes_h3(SdbCurvaturesH3{c.k2, c.k1}, Order::canonical);
        CHECK(canon.v.mid() <= canon.w.mid());
        CHECK(raw.v.mid() <= raw.w.mid());
    }
    auto eq = sdb_volumes_h3({1.7, 1.7});
    CHECK_THAT(eq.v.mid(), WithinRel(eq.w.mid(), 1e-14));
}

TEST_CASE("a larger k1 shrinks the smaller region", "[sdb_h3][property]") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
        auto c = random_curvatures(rng);
        double h = 1e-6 * c.k1;
        double v0 = sdb_volumes_h3_fast(c.k1, c.k2).v;
        double v1 = sdb_volumes_h3_fast(c.k1 + h, c.k2).v;
        CHECK(v1 < v0);
    }
}

TEST_CASE("area is symmetric and certified padding is one-sided", "[sdb_h3][property]") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto c = random_curvatures(rng);
        Enclosure a = sdb_area_h3(c, false);
        Enclosure b = sdb_area_h3(SdbCurvaturesH3{c.k2, c.k1}, false);
        CHECK_THAT(a.mid(), WithinRel(b.mid(), 1e-12));
        Enclosure p = sdb_area_h3(c, true, 0x1p-24);
        CHECK(p.lo() == a.lo());
        CHECK(p.hi() >= a.hi() + 3 * 0x1p-24);
    }
}

TEST_CASE("equal large volumes approach the limiting area", "[sdb_h3]") {
    double prev = 1e9;
    for (double k : {1 + 1e-2, 1 + 1e-3, 1 + 1e-4}) {
        double v = sdb_volumes_h3_fast(k, k).v;
        double limit = 2 * single_area_fast(Space::H3, v + v_inf) - 2 * a_inf + c_inf;
        double gap = std::abs(sdb_area_h3_fast(k, k) - limit);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("area increases in each volume", "[sdb_h3][property]") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> e(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        double v = std::exp(e(rng)), w = std::exp(e(rng));
        double a = sdb_area_fast(Space::H3, v, w);
        CHECK(sdb_area_fast(Space::H3, v * 1.01, w) > a);
        CHECK(sdb_area_fast(Space::H3, v, w * 1.01) > a);
    }
}

TEST_CASE("curvature parameter matches the radius chart", "[sdb_h3][property]") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> e(-8.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        double k = 1 + std::exp(e(rng));
        Enclosure r = acoth(Enclosure(k));
        Enclosure a = sphere_area(Space::H3, r);
        CHECK(a.intersects(kernel::sphere_area_k(Enclosure(k))));
    }
}

TEST_CASE("the interface disk stays below cosh y = 2", "[sdb_h3][property]") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 2000; ++i) {
        auto g = interface_geometry_h3(random_curvatures(rng));
        CHECK(std::cosh(g.y) < 2.0);
    }
}
