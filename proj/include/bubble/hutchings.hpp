#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "bubble/solvers.hpp"

namespace bubble {

struct VolumePair {
    double v = 0.0;
    double w = 0.0;
};

// Axis-aligned volume rectangle. In S^3 the coordinates are fractions of
// |S^3|, which keeps the line w = u (v = 1 - 2w) exactly representable; in
// H^3 they are volumes.
struct Rect {
    double v_lo = 0.0;
    double w_lo = 0.0;
    double v_hi = 0.0;
    double w_hi = 0.0;
};

// Midpoint area of the single sphere and of the standard double bubble.
// S^3 volumes here are absolute.
double single_area_fast(Space s, double v);
double sdb_area_fast(Space s, double v, double w);

// F(v, w) = 2A(v/2) + A(w) + A(v + w) - 2A(v, w), midpoint evaluation.
double hutchings_point(Space s, const VolumePair& p);

// Closed-form limit of F(psi w, w) in H^3 as w grows.
double limit_along_ray(double psi);
double critical_ratio();

// Certified lower bounds for the single-sphere area A at a volume enclosure,
// memoized by enclosure endpoints. Each value is padded down by delta.
// Safe to share between threads.
class AreaLowerBounds {
public:
    AreaLowerBounds(Space s, double eps, double delta);

    double at(const Enclosure& volume);
    Space space() const { return space_; }
    double eps() const { return eps_; }
    double delta() const { return delta_; }
    std::size_t size() const;

private:
    double solve(double volume, BandSide side);

    Space space_;
    double eps_;
    double delta_;
    std::map<std::pair<double, double>, double> cache_;
    mutable std::mutex mutex_;
};

// Volume enclosure of an S^3 fraction.
Enclosure s3_volume_of_fraction(const Enclosure& fraction);

// Certified lower bound for g = 2A(v/2) + A(w) + A(v + w) at one point.
double g_lower_point(AreaLowerBounds& bounds, double v, double w);

// Certified lower bound of g over a rectangle: the first two terms at the
// lower-left corner when A is increasing there, and the A(v + w) term as the
// smaller of the values at the two extreme sums (A is concave).
double g_lower_rect(Space s, const Rect& r, double eps, double delta);

// Certified upper bound for 2A(v, w) over every S^3 point (v, w) <= (x, y)
// in the closed increasing region, evaluated through an over-approximating
// bubble at the corner (x, y) (fractions). On the line w = u the point moves
// southeast along the line; at or next to the triple point the bound is
// 2 * 6 pi, the global maximum of the double bubble area.
struct S3UpperBound {
    double value = 0.0;
    enum class Kind { center, diagonal, on_line, general } kind = Kind::general;
};
S3UpperBound h_upper_corner_s3(double x, double y, double eps, double delta, SdbRadiiS3* seed = nullptr);

// Certified upper bound for 2A(v, w) over a rectangle. In S^3 the upper
// corner must lie on or below the line w = u.
double h_upper_rect(Space s, const Rect& r, double eps, double delta);

// H^3: 2 * (area + 3 delta) for a bubble whose certified volumes exceed (v, w)
// by at least delta and by less than twice the box size.
struct H3UpperBound {
    double value = 0.0;
    StepperState state;
    VolumesT<Enclosure> volumes;
};
H3UpperBound h_upper_corner_h3(double v, double w, double box_w, double box_h, double delta,
                               const StepperState& seed);

// 2 * 6 pi, padded: twice the area of the equal-thirds bubble.
double s3_center_bound(double delta);

}  // namespace bubble
