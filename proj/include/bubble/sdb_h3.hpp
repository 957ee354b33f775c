#pragma once

#include "bubble/geometry.hpp"
#include "bubble/sdb_s3.hpp"

namespace bubble {

// Curvature parameters k = coth r of the two outer caps of an H^3 double
// bubble. Canonical order is k1 >= k2: k1 bounds the smaller region.
struct SdbCurvaturesH3 {
    double k1 = 0.0;
    double k2 = 0.0;
};

template <class T>
struct CapTripleT {
    T c1{}, c2{}, c3{};
};

enum class Order { raw, canonical };

namespace kernel {

template <class T>
struct H3Parts {
    T c, d, s1, s2, s3, q1, q3, k3;
};

// Canonical order k1 >= k2 > 1.
template <class T>
H3Parts<T> h3_parts(const T& k1, const T& k2) {
    const T pi = pi_const<T>();
    const T sqrt3 = sqrt(T(3.0));
    H3Parts<T> p;
    p.k3 = k1 - k2;
    p.c = cos(pi / 6.0 - atan(sqrt3 * p.k3 / (k1 + k2)));
    T c2 = p.c * p.c;
    p.d = k1 * k1 - c2;
    p.s1 = k1 * sqrt((1.0 - c2) / p.d);
    p.s2 = sqrt((k1 * k1 - k2 * k2 * c2) / p.d);
    p.s3 = sqrt((k1 * k1 - p.k3 * p.k3 * c2) / p.d);
    p.q1 = c2 / (p.d * (1.0 + p.s1));
    p.q3 = c2 / (p.d * (1.0 + p.s3));
    return p;
}

// Selector for the smaller region's outer cap: the cap bulges past its
// hemisphere when (k1 - k2)/(k1 + k2) < 1/3.
template <class T>
T h3_branch_pred(const T& k1, const T& k2) {
    return 3.0 * (k1 - k2) - (k1 + k2);
}

template <class T>
CapTripleT<T> h3_cap_areas(const T& k1, const T& k2) {
    const T pi = pi_const<T>();
    auto p = h3_parts(k1, k2);
    CapTripleT<T> a;
    a.c1 = branch_nonpositive(
        h3_branch_pred(k1, k2), [&] { return T(2.0 * pi * (1.0 + p.s1) / (k1 * k1 - 1.0)); },
        [&] { return T(2.0 * pi * p.q1); });
    a.c2 = 2.0 * pi * (1.0 + p.s2) / (k2 * k2 - 1.0);
    a.c3 = 2.0 * pi * p.q3;
    return a;
}

template <class T>
CapTripleT<T> h3_cap_volumes(const T& k1, const T& k2) {
    const T pi = pi_const<T>();
    auto p = h3_parts(k1, k2);
    CapTripleT<T> v;
    v.c1 = branch_nonpositive(
        h3_branch_pred(k1, k2),
        [&] { return T(pi * (k1 * (1.0 + p.s1) / (k1 * k1 - 1.0) - acoth(k1) - atanh(p.s1 / k1))); },
        [&] {
            T kq = k1 * p.q1;
            return T(pi * (kq - atanh(kq / (1.0 + p.q1))));
        });
    v.c2 = pi * (k2 * (1.0 + p.s2) / (k2 * k2 - 1.0) - acoth(k2) - atanh(p.s2 / k2));
    T kq3 = p.k3 * p.q3;
    v.c3 = pi * (kq3 - atanh(kq3 / (1.0 + p.q3)));
    return v;
}

template <class T>
VolumesT<T> h3_volumes(const T& k1, const T& k2) {
    auto c = h3_cap_volumes(k1, k2);
    return {c.c1 + c.c3, c.c2 - c.c3};
}

template <class T>
T h3_area(const T& k1, const T& k2) {
    auto a = h3_cap_areas(k1, k2);
    return a.c1 + a.c2 + a.c3;
}

}  // namespace kernel

CapTripleT<Enclosure> cap_areas_h3(const SdbCurvaturesH3& c);
CapTripleT<Enclosure> cap_volumes_h3(const SdbCurvaturesH3& c);

// Volumes of the regions bounded by the k1 and k2 caps. In raw order the
// labels follow the curvatures; in canonical order v <= w.
VolumesT<Enclosure> sdb_volumes_h3(const SdbCurvaturesH3& c, Order order = Order::raw);
VolumesT<Enclosure> sdb_volumes_h3(const Enclosure& k1, const Enclosure& k2);
// With certify set, the upper endpoint carries the extra padding of 3*delta.
Enclosure sdb_area_h3(const SdbCurvaturesH3& c, bool certify, double delta = 0x1p-24);
Enclosure sdb_area_h3(const Enclosure& k1, const Enclosure& k2);

VolumesT<double> sdb_volumes_h3_fast(double k1, double k2);
double sdb_area_h3_fast(double k1, double k2);

// Geometry of the interface: radius y of the separating disk, angle theta
// between the separating cap and the disk.
struct InterfaceGeometry {
    double y = 0.0;
    double theta = 0.0;
};
InterfaceGeometry interface_geometry_h3(const SdbCurvaturesH3& c);

}  // namespace bubble
