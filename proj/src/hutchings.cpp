#include "bubble/hutchings.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace bubble {

namespace {

double s3_radius_fast(double v) {
    double lo = 0.0, hi = std::numbers::pi;
    for (int i = 0; i < 120; ++i) {
        double m = 0.5 * (lo + hi);
        if (std::numbers::pi * (2.0 * m - std::sin(2.0 * m)) < v) {
            lo = m;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

double h3_radius_fast(double v) {
    double lo = 0.0, hi = 40.0;
    for (int i = 0; i < 120; ++i) {
        double m = 0.5 * (lo + hi);
        if (std::numbers::pi * (std::sinh(2.0 * m) - 2.0 * m) < v) {
            lo = m;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

double twice_padded(const Enclosure& area, double delta) {
    // Doubling is exact in binary floating point.
    return 2.0 * pad_upper(area, 3.0 * delta);
}

}  // namespace

double single_area_fast(Space s, double v) {
    if (!(v > 0.0)) throw DomainError("volume must be positive");
    switch (s) {
        case Space::S3: {
            if (!(v < s3_total_volume())) throw DomainError("volume exceeds |S3|");
            double r = s3_radius_fast(v);
            return 4.0 * std::numbers::pi * std::sin(r) * std::sin(r);
        }
        case Space::H3: {
            double r = h3_radius_fast(v);
            return 4.0 * std::numbers::pi * std::sinh(r) * std::sinh(r);
        }
        case Space::R3:
            return flat_sphere_area(v);
    }
    return 0.0;
}

double sdb_area_fast(Space s, double v, double w) {
    if (!(v > 0.0 && w > 0.0)) throw DomainError("volumes must be positive");
    if (s == Space::S3) {
        double u = s3_total_volume() - v - w;
        if (!(u > 0.0)) throw DomainError("volumes exceed |S3|");
        std::array<double, 3> vols{v, w, u};
        std::sort(vols.begin(), vols.end());
        SdbRadiiS3 r = solve_radii_s3_fast(vols[0], vols[1]);
        return sdb_area_s3_fast(r.r1, r.r2);
    }
    if (s == Space::H3) {
        StepperState st = solve_curvature_pair(std::min(v, w), std::max(v, w), StepperState{});
        return sdb_area_h3_fast(st.k1, st.k2);
    }
    throw DomainError("double bubble area is provided for S3 and H3");
}

double hutchings_point(Space s, const VolumePair& p) {
    return 2.0 * single_area_fast(s, p.v / 2.0) + single_area_fast(s, p.w) + single_area_fast(s, p.v + p.w) -
           2.0 * sdb_area_fast(s, p.v, p.w);
}

double limit_along_ray(double psi) {
    if (!(psi > 0.0)) throw DomainError("ray slope must be positive");
    return 2.0 * std::numbers::pi * (std::log(4.0 * (psi + 1.0)) - 2.0);
}

double critical_ratio() { return std::exp(2.0) / 4.0 - 1.0; }

AreaLowerBounds::AreaLowerBounds(Space s, double eps, double delta) : space_(s), eps_(eps), delta_(delta) {
    if (!(delta > 0.0)) throw ConfigError("slack delta must be positive");
    if (!(eps > 0.0)) throw ConfigError("band width must be positive");
}

double AreaLowerBounds::solve(double volume, BandSide side) {
    double eps = eps_;
    if (side == BandSide::under) {
        eps = std::min(eps, volume / 2.0);
    } else if (space_ == Space::S3) {
        eps = std::min(eps, (s3_total_volume_enclosure().lo() - volume) / 2.0);
    }
    // Below the slack no band fits; zero is still a valid lower bound for an area.
    if (!(eps > 2.0 * delta_)) return 0.0;
    SphereSolution sol = solve_sphere_band(space_, BandTarget{volume, eps, side}, delta_);
    return pad_lower(sol.area, delta_);
}

double AreaLowerBounds::at(const Enclosure& volume) {
    auto key = std::make_pair(volume.lo(), volume.hi());
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    double out;
    if (space_ == Space::S3) {
        Enclosure half = s3_total_volume_enclosure() / 2.0;
        if (volume.hi() <= half.lo()) {
            out = solve(volume.lo(), BandSide::under);
        } else if (volume.lo() >= half.hi()) {
            out = solve(volume.hi(), BandSide::over);
        } else {
            out = std::min(solve(volume.lo(), BandSide::under), solve(volume.hi(), BandSide::over));
        }
    } else {
        out = solve(volume.lo(), BandSide::under);
    }
    std::lock_guard lock(mutex_);
    cache_.emplace(key, out);
    return out;
}

std::size_t AreaLowerBounds::size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

Enclosure s3_volume_of_fraction(const Enclosure& fraction) { return fraction * s3_total_volume_enclosure(); }

double g_lower_point(AreaLowerBounds& bounds, double v, double w) {
    Enclosure V, W, VW;
    if (bounds.space() == Space::S3) {
        V = s3_volume_of_fraction(Enclosure(v));
        W = s3_volume_of_fraction(Enclosure(w));
        VW = s3_volume_of_fraction(Enclosure(v) + Enclosure(w));
    } else {
        V = Enclosure(v);
        W = Enclosure(w);
        VW = Enclosure(v) + Enclosure(w);
    }
    double half_v = bounds.at(V / 2.0);
    double a_w = bounds.at(W);
    double a_vw = bounds.at(VW);
    return add_down(add_down(2.0 * half_v, a_w), a_vw);
}

double g_lower_rect(Space s, const Rect& r, double eps, double delta) {
    if (!(r.v_lo <= r.v_hi && r.w_lo <= r.w_hi)) throw DomainError("rectangle corners out of order");
    AreaLowerBounds bounds(s, eps, delta);
    auto vol = [&](const Enclosure& x) { return s == Space::S3 ? s3_volume_of_fraction(x) : x; };
    // A is concave, so on an interval of volumes its minimum sits at an end.
    auto interval_min = [&](const Enclosure& a, const Enclosure& b) {
        return std::min(bounds.at(a), bounds.at(b));
    };
    double t1 = interval_min(vol(Enclosure(r.v_lo)) / 2.0, vol(Enclosure(r.v_hi)) / 2.0);
    double t2 = interval_min(vol(Enclosure(r.w_lo)), vol(Enclosure(r.w_hi)));
    double t3 = interval_min(vol(Enclosure(r.v_lo) + Enclosure(r.w_lo)), vol(Enclosure(r.v_hi) + Enclosure(r.w_hi)));
    if (s == Space::H3) {
        // A is increasing in H^3: the lower ends suffice.
        t1 = bounds.at(Enclosure(r.v_lo) / 2.0);
        t2 = bounds.at(Enclosure(r.w_lo));
        t3 = bounds.at(Enclosure(r.v_lo) + Enclosure(r.w_lo));
    }
    return add_down(add_down(2.0 * t1, t2), t3);
}

double s3_center_bound(double delta) {
    Enclosure six_pi = 6.0 * pi_enclosure();
    return twice_padded(six_pi, delta);
}

S3UpperBound h_upper_corner_s3(double x, double y, double eps, double delta, SdbRadiiS3* seed) {
    const double third = 1.0 / 3.0;
    S3UpperBound center{s3_center_bound(delta), S3UpperBound::Kind::center};
    if (x >= third && y >= third) return center;
    if (x > y) y = x;
    try {
        if (x == 1.0 - 2.0 * y) {
            Enclosure W = s3_volume_of_fraction(Enclosure(y));
            S3Solution s = radii_equal_volumes_s3(W.lo(), eps, EqualMode::w_eq_u, delta);
            return {twice_padded(s.area, delta), S3UpperBound::Kind::on_line};
        }
        if (x == y) {
            Enclosure V = s3_volume_of_fraction(Enclosure(x));
            S3Solution s = radii_equal_volumes_s3(V.hi(), eps, EqualMode::v_eq_w, delta);
            return {twice_padded(s.area, delta), S3UpperBound::Kind::diagonal};
        }
        Enclosure V = s3_volume_of_fraction(Enclosure(x));
        Enclosure W = s3_volume_of_fraction(Enclosure(y));
        S3Solution s = radii_for_sdb_s3(V.hi(), W.hi(), eps, eps, delta, seed);
        if (seed) *seed = SdbRadiiS3{s.r1.mid(), s.r2.mid()};
        return {twice_padded(s.area, delta), S3UpperBound::Kind::general};
    } catch (const InfeasibleTarget&) {
    } catch (const InfeasibleBand&) {
    } catch (const RegionViolation&) {
    } catch (const NoConvergence&) {
    } catch (const DegenerateConfig&) {
    }
    // 6 pi is the largest double bubble area in S^3, so this bound holds everywhere.
    return center;
}

H3UpperBound h_upper_corner_h3(double v, double w, double box_w, double box_h, double delta,
                               const StepperState& seed) {
    bool swapped = v > w;
    if (swapped) {
        std::swap(v, w);
        std::swap(box_w, box_h);
    }
    SweepBox box{v, w, box_w, box_h};
    StepperState start = seed;
    if (!(start.k1 > 1.0 && start.k2 > 1.0)) {
        start = solve_curvature_pair(v + 0.5 * box_w, w + 0.5 * box_h, seed);
    }
    StepResult step;
    try {
        step = curvature_pair_step(start, box, delta);
    } catch (const StepFailure&) {
        start = solve_curvature_pair(v + 0.5 * box_w, w + 0.5 * box_h, start);
        step = curvature_pair_step(start, box, delta);
    }
    Enclosure area = sdb_area_h3(Enclosure(step.state.k1), Enclosure(step.state.k2));
    H3UpperBound out{twice_padded(area, delta), step.state, step.volumes};
    return out;
}

double h_upper_rect(Space s, const Rect& r, double eps, double delta) {
    if (!(r.v_lo <= r.v_hi && r.w_lo <= r.w_hi)) throw DomainError("rectangle corners out of order");
    if (s == Space::S3) {
        if (r.v_hi > 1.0 - 2.0 * r.w_hi) {
            throw RegionViolation("rectangle corner lies beyond the line w = u");
        }
        return h_upper_corner_s3(r.v_hi, r.w_hi, eps, delta).value;
    }
    if (s == Space::H3) return h_upper_corner_h3(r.v_hi, r.w_hi, eps, eps, delta, StepperState{}).value;
    throw DomainError("double bubble bounds are provided for S3 and H3");
}

}  // namespace bubble
