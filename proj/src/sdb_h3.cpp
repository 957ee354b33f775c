#include "bubble/sdb_h3.hpp"

#include <utility>

namespace bubble {

namespace {

void check_curvatures(const Enclosure& k1, const Enclosure& k2) {
    if (!(k1.lo() > 1.0 && k2.lo() > 1.0)) throw DomainError("H3 curvature parameters must exceed 1");
}

}  // namespace

CapTripleT<Enclosure> cap_areas_h3(const SdbCurvaturesH3& c) {
    Enclosure k1(c.k1), k2(c.k2);
    check_curvatures(k1, k2);
    if (c.k1 < c.k2) throw DomainError("cap areas need canonical order k1 >= k2");
    return kernel::h3_cap_areas(k1, k2);
}

CapTripleT<Enclosure> cap_volumes_h3(const SdbCurvaturesH3& c) {
    Enclosure k1(c.k1), k2(c.k2);
    check_curvatures(k1, k2);
    if (c.k1 < c.k2) throw DomainError("cap volumes need canonical order k1 >= k2");
    return kernel::h3_cap_volumes(k1, k2);
}

VolumesT<Enclosure> sdb_volumes_h3(const Enclosure& k1, const Enclosure& k2) {
    check_curvatures(k1, k2);
    if (k1.mid() < k2.mid()) {
        auto s = kernel::h3_volumes(k2, k1);
        return {s.w, s.v};
    }
    return kernel::h3_volumes(k1, k2);
}

VolumesT<Enclosure> sdb_volumes_h3(const SdbCurvaturesH3& c, Order order) {
    auto r = sdb_volumes_h3(Enclosure(c.k1), Enclosure(c.k2));
    if (order == Order::canonical && c.k1 < c.k2) std::swap(r.v, r.w);
    return r;
}

Enclosure sdb_area_h3(const Enclosure& k1, const Enclosure& k2) {
    check_curvatures(k1, k2);
    if (k1.mid() < k2.mid()) return kernel::h3_area(k2, k1);
    return kernel::h3_area(k1, k2);
}

Enclosure sdb_area_h3(const SdbCurvaturesH3& c, bool certify, double delta) {
    Enclosure a = sdb_area_h3(Enclosure(c.k1), Enclosure(c.k2));
    if (!certify) return a;
    return Enclosure(a.lo(), pad_upper(a, 3.0 * delta));
}

VolumesT<double> sdb_volumes_h3_fast(double k1, double k2) {
    if (k1 < k2) {
        auto s = kernel::h3_volumes(k2, k1);
        return {s.w, s.v};
    }
    return kernel::h3_volumes(k1, k2);
}

double sdb_area_h3_fast(double k1, double k2) {
    if (k1 < k2) std::swap(k1, k2);
    return kernel::h3_area(k1, k2);
}

InterfaceGeometry interface_geometry_h3(const SdbCurvaturesH3& c) {
    double k1 = std::max(c.k1, c.k2), k2 = std::min(c.k1, c.k2);
    if (!(k2 > 1.0)) throw DomainError("H3 curvature parameters must exceed 1");
    auto p = kernel::h3_parts(k1, k2);
    double sq = std::sqrt(p.d);
    InterfaceGeometry g;
    g.y = std::asinh(p.c / sq);
    g.theta = std::asin(std::min(1.0, p.k3 * p.c / k1));
    return g;
}

}  // namespace bubble
