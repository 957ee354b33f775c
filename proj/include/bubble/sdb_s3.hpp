#pragma once

#include <utility>

#include "bubble/geometry.hpp"

namespace bubble {

// Outer-cap radii of a standard double bubble in S^3. r1 belongs to the
// region of volume v, r2 to the region of volume w.
struct SdbRadiiS3 {
    double r1 = 0.0;
    double r2 = 0.0;
};

template <class T>
struct GeneratingAnglesT {
    T theta{}, x{}, r3{}, phi1{}, psi1_hat{}, phi2{}, phi3{};
};
using GeneratingAngles = GeneratingAnglesT<double>;

template <class T>
struct VolumesT {
    T v{};
    T w{};
};

namespace kernel {

template <class T>
bool same_value(const T& a, const T& b) {
    return lower(a) == lower(b) && upper(a) == upper(b);
}

template <class T>
T equal_volume_s3(const T& r) {
    const T pi = pi_const<T>();
    const T sqrt2 = sqrt(T(2.0));
    T q = sqrt(7.0 + cos(2.0 * r));
    T cr = cos(r);
    return pi / 2.0 * (2.0 * r - sin(2.0 * r)) * (1.0 + sqrt2 * cr / q) +
           pi * (atan(sqrt2 * sin(r) / q) - sqrt2 * r * cr / q);
}

// Radii in canonical order r1 <= r2 <= pi/2.
template <class T>
GeneratingAnglesT<T> s3_angles(const T& r1, const T& r2) {
    const T pi = pi_const<T>();
    const T sqrt3 = sqrt(T(3.0));
    T c1 = cot(r1), c2 = cot(r2);
    T t = same_value(r1, r2) ? T(0.0) : (c1 - c2) / (c1 + c2);
    GeneratingAnglesT<T> a;
    a.theta = atan(sqrt3 * t);
    a.x = atan2(sin(a.theta + pi / 3.0), c1);
    a.r3 = acot(c1 - c2);
    T sx = sin(a.x);
    a.phi1 = asin(sx / sin(r1));
    a.phi2 = asin(sx / sin(r2));
    a.phi3 = asin(sx / sin(a.r3));
    T phi1 = a.phi1;
    a.psi1_hat = branch_nonpositive(3.0 * t - 1.0, [&] { return T(pi - phi1); }, [&] { return phi1; });
    return a;
}

// cos of the outer-cap angle for equal radii, free of the arcsin square-root
// singularity at the hemisphere.
template <class T>
T s3_equal_cos_phi(const T& r) {
    T c = cos(r);
    return c / sqrt(3.0 + c * c);
}

template <class T>
VolumesT<T> s3_volumes(const T& r1, const T& r2) {
    if (same_value(r1, r2)) {
        T ev = equal_volume_s3(r1);
        return {ev, ev};
    }
    auto a = s3_angles(r1, r2);
    const T pi = pi_const<T>();
    T inner = cap_volume(Space::S3, a.r3, a.phi3);
    T v = cap_volume(Space::S3, r1, a.psi1_hat) + inner;
    T w = cap_volume(Space::S3, r2, T(pi - a.phi2)) - inner;
    return {v, w};
}

template <class T>
T s3_area(const T& r1, const T& r2) {
    const T pi = pi_const<T>();
    if (same_value(r1, r2)) {
        T c = s3_equal_cos_phi(r1);
        T s = sin(r1);
        return 4.0 * pi * s * s * (1.0 + c) + 2.0 * pi * (1.0 - 2.0 * c);
    }
    auto a = s3_angles(r1, r2);
    return cap_area(Space::S3, r1, a.psi1_hat) + cap_area(Space::S3, r2, T(pi - a.phi2)) +
           cap_area(Space::S3, a.r3, a.phi3);
}

}  // namespace kernel

GeneratingAngles generating_angles(const SdbRadiiS3& rad);

// Region volumes (v for r1, w for r2). Radii in either order; labels follow
// the radii. Raises DegenerateConfig when the larger radius exceeds pi/2.
VolumesT<Enclosure> sdb_volumes_s3(const Enclosure& r1, const Enclosure& r2);
VolumesT<Enclosure> sdb_volumes_s3(const SdbRadiiS3& rad);
Enclosure sdb_area_s3(const Enclosure& r1, const Enclosure& r2);
Enclosure sdb_area_s3(const SdbRadiiS3& rad);

// Midpoint evaluation for solvers and plots.
VolumesT<double> sdb_volumes_s3_fast(double r1, double r2);
double sdb_area_s3_fast(double r1, double r2);

double equal_volume_s3(double r);
Enclosure equal_volume_s3(const Enclosure& r);

// Exterior volume computed from the two outer-cap bodies alone.
Enclosure s3_exterior_from_outer_caps(const SdbRadiiS3& rad);

// Radius pi/2 as an enclosure: the outer cap on the line where w equals the exterior.
Enclosure half_pi_enclosure();

}  // namespace bubble
