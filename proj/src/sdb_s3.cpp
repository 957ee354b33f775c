#include "bubble/sdb_s3.hpp"

#include <string>

namespace bubble {

namespace {

constexpr double kHalfPiHi = 1.5707963267948968;  // pi_hi / 2

void check_radii(const Enclosure& r1, const Enclosure& r2) {
    if (!(r1.lo() > 0.0 && r2.lo() > 0.0)) throw DegenerateConfig("S3 radii must be positive");
    if (r1.hi() > kHalfPiHi || r2.hi() > kHalfPiHi) {
        throw DegenerateConfig("S3 outer-cap radius beyond pi/2: the larger region exceeds the exterior");
    }
}

template <class F>
auto as_degenerate(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw DegenerateConfig(std::string("S3 double bubble: ") + e.what());
    }
}

}  // namespace

Enclosure half_pi_enclosure() {
    Enclosure p = pi_enclosure();
    return Enclosure(p.lo() / 2.0, p.hi() / 2.0);
}

GeneratingAngles generating_angles(const SdbRadiiS3& rad) {
    double a = rad.r1, b = rad.r2;
    if (a > b) std::swap(a, b);
    check_radii(Enclosure(a), Enclosure(b));
    return as_degenerate([&] {
        auto e = kernel::s3_angles(Enclosure(a), Enclosure(b));
        return GeneratingAngles{e.theta.mid(), e.x.mid(), e.r3.mid(), e.phi1.mid(), e.psi1_hat.mid(),
                                e.phi2.mid(), e.phi3.mid()};
    });
}

VolumesT<Enclosure> sdb_volumes_s3(const Enclosure& r1, const Enclosure& r2) {
    check_radii(r1, r2);
    return as_degenerate([&] {
        if (r1.mid() > r2.mid()) {
            auto s = kernel::s3_volumes(r2, r1);
            return VolumesT<Enclosure>{s.w, s.v};
        }
        return kernel::s3_volumes(r1, r2);
    });
}

VolumesT<Enclosure> sdb_volumes_s3(const SdbRadiiS3& rad) { return sdb_volumes_s3(Enclosure(rad.r1), Enclosure(rad.r2)); }

Enclosure sdb_area_s3(const Enclosure& r1, const Enclosure& r2) {
    check_radii(r1, r2);
    return as_degenerate([&] {
        if (r1.mid() > r2.mid()) return kernel::s3_area(r2, r1);
        return kernel::s3_area(r1, r2);
    });
}

Enclosure sdb_area_s3(const SdbRadiiS3& rad) { return sdb_area_s3(Enclosure(rad.r1), Enclosure(rad.r2)); }

VolumesT<double> sdb_volumes_s3_fast(double r1, double r2) {
    if (r1 > r2) {
        auto s = kernel::s3_volumes(r2, r1);
        return {s.w, s.v};
    }
    return kernel::s3_volumes(r1, r2);
}

double sdb_area_s3_fast(double r1, double r2) {
    if (r1 > r2) std::swap(r1, r2);
    return kernel::s3_area(r1, r2);
}

double equal_volume_s3(double r) {
    if (!(r > 0.0 && r < std::numbers::pi)) throw DomainError("equal-volume radius outside (0, pi)");
    return kernel::equal_volume_s3(r);
}

Enclosure equal_volume_s3(const Enclosure& r) {
    if (!(r.lo() > 0.0 && r.hi() < std::numbers::pi)) throw DomainError("equal-volume radius outside (0, pi)");
    return kernel::equal_volume_s3(r);
}

Enclosure s3_exterior_from_outer_caps(const SdbRadiiS3& rad) {
    double a = rad.r1, b = rad.r2;
    if (a > b) std::swap(a, b);
    check_radii(Enclosure(a), Enclosure(b));
    return as_degenerate([&] {
        Enclosure r1(a), r2(b);
        auto g = kernel::s3_angles(r1, r2);
        Enclosure pi = pi_enclosure();
        Enclosure body1 = kernel::cap_volume(Space::S3, r1, g.psi1_hat);
        Enclosure body2 = kernel::cap_volume(Space::S3, r2, Enclosure(pi - g.phi2));
        return s3_total_volume_enclosure() - body1 - body2;
    });
}

}  // namespace bubble
