#include "bubble/geometry.hpp"

#include <string>

namespace bubble {

namespace {

void check_radius(Space s, const Enclosure& r) {
    if (r.hi() <= 0.0) throw DomainError("radius must be positive");
    if (s == Space::S3 && r.lo() > std::numbers::pi) throw DomainError("S3 radius exceeds pi");
}

void check_cap(Space s, const CapSpec& cap) {
    check_radius(s, Enclosure(cap.r));
    if (s == Space::S3 && cap.r >= std::numbers::pi) throw DomainError("S3 cap radius must be below pi");
    if (!(cap.phi0 >= 0.0 && cap.phi0 <= std::numbers::pi + 1e-15)) throw DomainError("cap angle outside [0, pi]");
}

}  // namespace

std::string_view to_string(Space s) noexcept {
    switch (s) {
        case Space::S3: return "S3";
        case Space::H3: return "H3";
        case Space::R3: return "R3";
    }
    return "?";
}

Space parse_space(std::string_view s) {
    if (s == "s3" || s == "S3") return Space::S3;
    if (s == "h3" || s == "H3") return Space::H3;
    if (s == "r3" || s == "R3") return Space::R3;
    throw ConfigError("unknown space '" + std::string(s) + "'");
}

Enclosure s3_total_volume_enclosure() {
    Enclosure p = pi_enclosure();
    return 2.0 * p * p;
}

Enclosure sphere_area(Space s, const Enclosure& r) {
    check_radius(s, r);
    return kernel::sphere_area(s, r);
}

Enclosure sphere_volume(Space s, const Enclosure& r) {
    check_radius(s, r);
    return kernel::sphere_volume(s, r);
}

double mean_curvature(Space s, double r) {
    if (r == 0.0) throw DomainError("mean curvature at r = 0");
    switch (s) {
        case Space::S3:
            if (!(r > 0.0 && r < std::numbers::pi)) throw DomainError("S3 radius outside (0, pi)");
            return 2.0 * cot(r);
        case Space::H3:
            if (!(r > 0.0)) throw DomainError("H3 radius must be positive");
            return 2.0 / std::tanh(r);
        case Space::R3:
            return 2.0 / r;
    }
    return 0.0;
}

Enclosure cap_area(Space s, const CapSpec& cap) {
    check_cap(s, cap);
    return kernel::cap_area(s, Enclosure(cap.r), Enclosure(cap.phi0));
}

Enclosure cap_volume(Space s, const CapSpec& cap) {
    check_cap(s, cap);
    // cos of the double nearest pi/2 is 6e-17, not zero, and past r = pi/2
    // its sign alone picks the disk.
    if (s == Space::S3 && cap.phi0 == std::numbers::pi / 2) {
        return kernel::sphere_volume(s, Enclosure(cap.r)) / 2.0;
    }
    return kernel::cap_volume(s, Enclosure(cap.r), Enclosure(cap.phi0));
}

double cap_volume_diskform(const DiskCapSpec& d) {
    if (d.y < 0.0 || d.theta < 0.0 || d.theta >= std::numbers::pi) throw DomainError("disk cap outside its domain");
    if (d.y == 0.0 || d.theta == 0.0) return 0.0;
    return kernel::cap_volume_diskform(d.y, d.theta);
}

Enclosure cap_volume_diskform_enclosure(const DiskCapSpec& d) {
    if (d.y < 0.0 || d.theta < 0.0 || d.theta >= std::numbers::pi) throw DomainError("disk cap outside its domain");
    return kernel::cap_volume_diskform(Enclosure(d.y), Enclosure(d.theta));
}

DiskCapSpec disk_form_of_cap(const CapSpec& cap) {
    check_cap(Space::H3, cap);
    double y = std::asinh(std::sin(cap.phi0) * std::sinh(cap.r));
    double s = std::tanh(y) / std::tanh(cap.r);
    double theta = std::asin(std::min(1.0, s));
    if (cap.phi0 > std::numbers::pi / 2) theta = std::numbers::pi - theta;
    return {y, theta};
}

double flat_sphere_area(double v) {
    if (v < 0.0) throw DomainError("negative volume");
    return std::cbrt(36.0 * std::numbers::pi * v * v);
}

}  // namespace bubble
