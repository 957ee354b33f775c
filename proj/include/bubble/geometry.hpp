#pragma once

#include <string_view>

#include "bubble/enclosure.hpp"

namespace bubble {

enum class Space { S3, H3, R3 };

std::string_view to_string(Space s) noexcept;
Space parse_space(std::string_view s);

// Cap of a sphere of geodesic radius r, subtended by the angle 2*phi0 and
// measured from the cap's own pole: phi0 = 0 is empty, phi0 = pi the full sphere.
struct CapSpec {
    double r = 0.0;
    double phi0 = 0.0;
};

// Cap described by the radius y of its bounding geodesic disk and the angle
// theta between the cap and the disk.
struct DiskCapSpec {
    double y = 0.0;
    double theta = 0.0;
};

// |S^3|
inline double s3_total_volume() { return 2.0 * std::numbers::pi * std::numbers::pi; }
Enclosure s3_total_volume_enclosure();

namespace kernel {

template <class T>
T sphere_area(Space s, const T& r) {
    const T pi = pi_const<T>();
    switch (s) {
        case Space::S3: return 4.0 * pi * sqr(sin(r));
        case Space::H3: return 4.0 * pi * sqr(sinh(r));
        case Space::R3: return 4.0 * pi * sqr(r);
    }
    return T(0.0);
}

template <class T>
T sphere_volume(Space s, const T& r) {
    const T pi = pi_const<T>();
    switch (s) {
        case Space::S3: return pi * (2.0 * r - sin(2.0 * r));
        case Space::H3: return pi * (sinh(2.0 * r) - 2.0 * r);
        case Space::R3: return 4.0 * pi * r * r * r / 3.0;
    }
    return T(0.0);
}

template <class T>
T cap_area(Space s, const T& r, const T& phi) {
    const T pi = pi_const<T>();
    T one_minus_c = 1.0 - cos(phi);
    switch (s) {
        case Space::S3: return 2.0 * pi * sqr(sin(r)) * one_minus_c;
        case Space::H3: return 2.0 * pi * sqr(sinh(r)) * one_minus_c;
        case Space::R3: return 2.0 * pi * sqr(r) * one_minus_c;
    }
    return T(0.0);
}

// atan2(c sin r, cos r): the continuous branch of atan(c tan r) across r = pi/2.
// Past pi/2 the cap is closed off by the smaller of the two disks its rim
// bounds in a great sphere, so the volume jumps by pi^2 where cos phi0
// changes sign.
inline double s3_cap_angle(double c, double r) {
    if (c == 0.0) return 0.0;
    return std::atan2(c * std::sin(r), std::cos(r));
}

inline Enclosure s3_cap_angle(const Enclosure& c, const Enclosure& r) {
    if (c.is_point() && c.lo() == 0.0) return Enclosure(0.0);
    return atan2(c * sin(r), cos(r));
}

template <class T>
T cap_volume(Space s, const T& r, const T& phi) {
    const T pi = pi_const<T>();
    T c = cos(phi);
    switch (s) {
        case Space::S3: {
            T cs = cos(r) * sin(r);
            return pi * (r - s3_cap_angle(c, r) - cs + c * cs);
        }
        case Space::H3: {
            T cs = cosh(r) * sinh(r);
            return pi * (atanh(c * tanh(r)) - r - c * cs + cs);
        }
        case Space::R3: {
            T h = r * (1.0 - c);
            return pi * h * h * (3.0 * r - h) / 3.0;
        }
    }
    return T(0.0);
}

template <class T>
T cap_volume_diskform(const T& y, const T& theta) {
    const T pi = pi_const<T>();
    T st = sin(theta), ct = cos(theta);
    T sy = sinh(y), cy = cosh(y);
    return pi * (sy * st / (1.0 / cy + ct) - atanh(sy * st / (cy + ct)));
}

// H^3 sphere with curvature parameter k = coth r.
template <class T>
T sphere_area_k(const T& k) {
    return 4.0 * pi_const<T>() / (k * k - 1.0);
}

template <class T>
T sphere_volume_k(const T& k) {
    return pi_const<T>() * (2.0 * k / (k * k - 1.0) - 2.0 * acoth(k));
}

}  // namespace kernel

Enclosure sphere_area(Space s, const Enclosure& r);
Enclosure sphere_volume(Space s, const Enclosure& r);
double mean_curvature(Space s, double r);
Enclosure cap_area(Space s, const CapSpec& cap);
// phi0 = pi/2 (the double nearest it) is the half ball.
Enclosure cap_volume(Space s, const CapSpec& cap);
double cap_volume_diskform(const DiskCapSpec& d);
Enclosure cap_volume_diskform_enclosure(const DiskCapSpec& d);
// The (y, theta) description of the same H^3 cap.
DiskCapSpec disk_form_of_cap(const CapSpec& cap);
double flat_sphere_area(double v);

}  // namespace bubble
