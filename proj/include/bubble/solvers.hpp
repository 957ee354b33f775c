#pragma once

#include "bubble/sdb_h3.hpp"
#include "bubble/sdb_s3.hpp"

namespace bubble {

enum class BandSide { under, over };

// under: certified volume in [v - eps, v - delta]; over: in [v + delta, v + eps].
struct BandTarget {
    double v = 0.0;
    double eps = 0.0;
    BandSide side = BandSide::under;
};

// A single sphere hitting a band. param is the radius in S^3 and the
// curvature parameter k = coth r in H^3.
struct SphereSolution {
    double param = 0.0;
    Enclosure volume;
    Enclosure area;
};

inline constexpr int kBisectionBudget = 200;
inline constexpr int kSecantBudget = 64;

SphereSolution solve_sphere_band(Space s, const BandTarget& t, double delta);
double radius_from_volume(Space s, const BandTarget& t, double delta);

// A double bubble with certified volumes and area. In S^3 the radii may be
// enclosures (pi/2 on the line w = u).
struct S3Solution {
    Enclosure r1, r2;
    VolumesT<Enclosure> volumes;
    Enclosure area;
    double eps_v = 0.0;
    double eps_w = 0.0;
};

// v < w and v + 2w < |S^3|. The certified volumes land in
// [v + delta, v + eps_v'] x [w + delta, w + eps_w'] where the effective
// errors are shrunk until that box stays inside the increasing region.
// seed, when given, starts the Newton iteration.
S3Solution radii_for_sdb_s3(double v, double w, double eps_v, double eps_w, double delta,
                            const SdbRadiiS3* seed = nullptr);

// Midpoint solve for radii with volumes (v, w), v <= w <= |S^3| - v - w.
// Not certified; used by plots and asymptotic probes.
SdbRadiiS3 solve_radii_s3_fast(double v, double w, const SdbRadiiS3* seed = nullptr);

enum class EqualMode { v_eq_w, w_eq_u };

// v_eq_w: equal radii with both volumes in [target + delta, target + eps].
// w_eq_u: the larger outer cap is a great sphere (r2 = pi/2), so w = u, and
// w lies in [target - eps, target - delta]; this moves the point southeast
// along the line w = u.
S3Solution radii_equal_volumes_s3(double target, double eps, EqualMode mode, double delta);

struct StepperState {
    double k1 = 0.0;
    double k2 = 0.0;
    double scale1 = 0.9999;
    double scale2 = 0.9995;
};

// Lower-left corner and size of a sweep box.
struct SweepBox {
    double v_lo = 0.0;
    double w_lo = 0.0;
    double width = 0.0;
    double height = 0.0;
};

struct StepResult {
    StepperState state;
    VolumesT<Enclosure> volumes;
};

// Moves the curvature pair so that the certified volumes land strictly inside
// (v_lo + delta, v_lo + 2 width) x (w_lo + delta, w_lo + 2 height), aiming at
// (v_lo + width/2, w_lo + height/2). Secant probes scale k1 and k2 by the
// state's factors.
StepResult curvature_pair_step(const StepperState& state, const SweepBox& box, double delta);

// Fresh solve for curvatures whose volumes approximate (v, w), v <= w.
StepperState solve_curvature_pair(double v, double w, const StepperState& seed);

bool inside_doubled_box(const VolumesT<Enclosure>& vol, const SweepBox& box, double delta);

}  // namespace bubble
