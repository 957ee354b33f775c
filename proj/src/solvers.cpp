#include "bubble/solvers.hpp"

#include <array>
#include <limits>
#include <string>

namespace bubble {

namespace {

struct Band {
    double lo;
    double hi;
    bool holds(const Enclosure& e) const { return lo <= e.lo() && e.hi() <= hi; }
    double center() const { return lo + 0.5 * (hi - lo); }
};

Band make_band(const BandTarget& t, double delta) {
    if (!(t.eps > delta)) throw InfeasibleBand("band width must exceed the slack delta");
    if (t.side == BandSide::under) return {t.v - t.eps, t.v - delta};
    return {t.v + delta, t.v + t.eps};
}

double s3_volume_fast(double r) { return std::numbers::pi * (2.0 * r - std::sin(2.0 * r)); }

// H^3 spheres are parameterized by u = log(k - 1); volume decreases in u.
double k_of_u(double u) { return 1.0 + std::exp(u); }

Enclosure s3_total() { return s3_total_volume_enclosure(); }

}  // namespace

SphereSolution solve_sphere_band(Space s, const BandTarget& t, double delta) {
    Band band = make_band(t, delta);
    if (s == Space::R3) throw DomainError("sphere band solve supports S3 and H3");
    if (!(band.lo > 0.0)) throw InfeasibleBand("band reaches zero volume");
    if (s == Space::S3 && !(band.hi < s3_total().lo())) throw InfeasibleBand("band reaches the volume of S3");
    double target = band.center();
    double a, b;
    if (s == Space::S3) {
        a = 0.0;
        b = std::numbers::pi;
    } else {
        a = -30.0;
        b = 30.0;
    }
    for (int it = 0; it < kBisectionBudget; ++it) {
        double m = 0.5 * (a + b);
        double vol;
        if (s == Space::S3) {
            vol = s3_volume_fast(m);
        } else {
            vol = kernel::sphere_volume_k(k_of_u(m));
        }
        if (std::abs(vol - target) <= 0.5 * (band.hi - band.lo)) {
            SphereSolution sol;
            if (s == Space::S3) {
                Enclosure r(m);
                sol.param = m;
                sol.volume = kernel::sphere_volume(Space::S3, r);
                sol.area = kernel::sphere_area(Space::S3, r);
            } else {
                Enclosure k(k_of_u(m));
                sol.param = k.lo();
                sol.volume = kernel::sphere_volume_k(k);
                sol.area = kernel::sphere_area_k(k);
            }
            if (band.holds(sol.volume)) return sol;
        }
        bool increase_param = (s == Space::S3) ? (vol < target) : (vol > target);
        if (increase_param) {
            a = m;
        } else {
            b = m;
        }
    }
    throw NoConvergence("sphere band solve did not converge for volume " + std::to_string(t.v));
}

double radius_from_volume(Space s, const BandTarget& t, double delta) {
    SphereSolution sol = solve_sphere_band(s, t, delta);
    if (s == Space::H3) return std::atanh(1.0 / sol.param);
    return sol.param;
}

namespace {

bool in_increasing_region(double v, double w, double ev, double ew) {
    Enclosure V = Enclosure(v) + Enclosure(ev);
    Enclosure W = Enclosure(w) + Enclosure(ew);
    Enclosure rim = V + 2.0 * W;
    return rim.hi() < s3_total().lo() && V.hi() < W.lo();
}

S3Solution certify_s3(const Enclosure& r1, const Enclosure& r2) {
    S3Solution out;
    out.r1 = r1;
    out.r2 = r2;
    out.volumes = sdb_volumes_s3(r1, r2);
    out.area = sdb_area_s3(r1, r2);
    return out;
}

// Initial radii: the equal-volume radius for the mean volume, split apart
// according to the volume difference.
SdbRadiiS3 s3_guess(double v, double w) {
    double m = 0.5 * (v + w);
    double a = 1e-6, b = std::numbers::pi / 2;
    for (int i = 0; i < 80; ++i) {
        double c = 0.5 * (a + b);
        if (kernel::equal_volume_s3(c) < m) {
            a = c;
        } else {
            b = c;
        }
    }
    double r = 0.5 * (a + b);
    double split = 0.5 * (w - v) / (w + v);
    return {r * (1.0 - split), std::min(r * (1.0 + split), std::numbers::pi / 2 - 1e-9)};
}

}  // namespace

S3Solution radii_for_sdb_s3(double v, double w, double eps_v, double eps_w, double delta, const SdbRadiiS3* seed) {
    if (!(v > 0.0 && v < w)) throw RegionViolation("v and w are not in the increasing region: need 0 < v < w");
    if (!in_increasing_region(v, w, 0.0, 0.0)) {
        throw RegionViolation("v and w are not in the increasing region: need v + 2w < |S3|");
    }
    if (!(eps_v > delta && eps_w > delta)) throw InfeasibleBand("band width must exceed the slack delta");
    const double total = s3_total().lo();
    for (int i = 0; !in_increasing_region(v, w, eps_v, eps_w); ++i) {
        if (i > 200) throw InfeasibleBand("could not shrink the bands into the increasing region");
        Enclosure V = Enclosure(v) + Enclosure(eps_v);
        if ((V + 2.0 * Enclosure(w)).hi() >= total) eps_v /= 2;
        V = Enclosure(v) + Enclosure(eps_v);
        if ((V + 2.0 * (Enclosure(w) + Enclosure(eps_w))).hi() >= total) {
            eps_w /= 2;
            eps_v /= std::sqrt(2.0);
        }
        V = Enclosure(v) + Enclosure(eps_v);
        if (V.hi() >= (Enclosure(w) + Enclosure(eps_w)).lo()) eps_v /= 2;
    }
    if (!(eps_v > 2.0 * delta && eps_w > 2.0 * delta)) throw InfeasibleBand("shrunk band is narrower than the slack");

    Band bv{add_up(v, delta), add_down(v, eps_v)};
    Band bw{add_up(w, delta), add_down(w, eps_w)};
    double tv = bv.center(), tw = bw.center();

    SdbRadiiS3 r = seed ? *seed : s3_guess(v, w);
    const double cap = std::numbers::pi / 2;
    for (int it = 0; it < kSecantBudget; ++it) {
        auto f = sdb_volumes_s3_fast(r.r1, r.r2);
        double fv = f.v - tv, fw = f.w - tw;
        if (std::isfinite(fv) && std::isfinite(fw) && std::abs(fv) < 0.5 * (bv.hi - bv.lo) &&
            std::abs(fw) < 0.5 * (bw.hi - bw.lo)) {
            try {
                S3Solution s = certify_s3(Enclosure(r.r1), Enclosure(r.r2));
                if (bv.holds(s.volumes.v) && bw.holds(s.volumes.w)) {
                    s.eps_v = eps_v;
                    s.eps_w = eps_w;
                    return s;
                }
            } catch (const DegenerateConfig&) {
            }
        }
        double h1 = 1e-7 * r.r1, h2 = 1e-7 * r.r2;
        auto f1 = sdb_volumes_s3_fast(r.r1 + h1, r.r2);
        auto f2 = sdb_volumes_s3_fast(r.r1, r.r2 - h2);
        double j11 = (f1.v - f.v) / h1, j21 = (f1.w - f.w) / h1;
        double j12 = (f.v - f2.v) / h2, j22 = (f.w - f2.w) / h2;
        double det = j11 * j22 - j12 * j21;
        if (!std::isfinite(det) || det == 0.0) break;
        double d1 = -(j22 * fv - j12 * fw) / det;
        double d2 = -(-j21 * fv + j11 * fw) / det;
        double lam = 1.0;
        SdbRadiiS3 next = r;
        for (int k = 0; k < 60; ++k) {
            next = {r.r1 + lam * d1, r.r2 + lam * d2};
            if (next.r1 > 0.0 && next.r2 > 0.0 && next.r1 < cap && next.r2 < cap) break;
            lam /= 2;
        }
        r = next;
    }
    throw NoConvergence("radii solve did not converge at v = " + std::to_string(v) + ", w = " + std::to_string(w));
}

SdbRadiiS3 solve_radii_s3_fast(double v, double w, const SdbRadiiS3* seed) {
    const double total = s3_total_volume();
    const double u = total - v - w;
    if (!(v > 0.0 && v <= w && w <= u * (1.0 + 1e-12))) {
        throw RegionViolation("midpoint radii solve needs 0 < v <= w <= u");
    }
    const double cap = std::numbers::pi / 2;
    auto bisect = [](auto&& f, double target, double lo, double hi, bool increasing) {
        for (int i = 0; i < 100; ++i) {
            double m = 0.5 * (lo + hi);
            if ((f(m) < target) == increasing) {
                lo = m;
            } else {
                hi = m;
            }
        }
        return 0.5 * (lo + hi);
    };
    if (v == w) {
        double r = bisect([](double r) { return kernel::equal_volume_s3(r); }, v, 0.0, cap, true);
        return {r, r};
    }
    if (std::abs(w - u) <= 1e-13 * total) {
        double r = bisect([&](double r) { return sdb_volumes_s3_fast(r, cap).w; }, w, 0.0, cap, false);
        return {r, cap};
    }
    SdbRadiiS3 r = seed ? *seed : s3_guess(v, w);
    for (int it = 0; it < 100; ++it) {
        auto f = sdb_volumes_s3_fast(r.r1, r.r2);
        double fv = f.v - v, fw = f.w - w;
        if (std::abs(fv) <= 1e-14 * total && std::abs(fw) <= 1e-14 * total) return r;
        double h1 = 1e-7 * r.r1, h2 = 1e-7 * r.r2;
        auto f1 = sdb_volumes_s3_fast(r.r1 + h1, r.r2);
        auto f2 = sdb_volumes_s3_fast(r.r1, r.r2 - h2);
        double j11 = (f1.v - f.v) / h1, j21 = (f1.w - f.w) / h1;
        double j12 = (f.v - f2.v) / h2, j22 = (f.w - f2.w) / h2;
        double det = j11 * j22 - j12 * j21;
        if (!std::isfinite(det) || det == 0.0) break;
        double d1 = -(j22 * fv - j12 * fw) / det;
        double d2 = -(-j21 * fv + j11 * fw) / det;
        double lam = 1.0;
        SdbRadiiS3 next = r;
        for (int k = 0; k < 60; ++k, lam /= 2) {
            next = {r.r1 + lam * d1, std::min(r.r2 + lam * d2, cap)};
            if (next.r1 > 0.0 && next.r2 > 0.0 && next.r1 <= next.r2) break;
        }
        if (next.r1 == r.r1 && next.r2 == r.r2) return r;
        r = next;
    }
    auto f = sdb_volumes_s3_fast(r.r1, r.r2);
    if (std::abs(f.v - v) <= 1e-9 * total && std::abs(f.w - w) <= 1e-9 * total) return r;
    throw NoConvergence("midpoint radii solve did not converge");
}

S3Solution radii_equal_volumes_s3(double target, double eps, EqualMode mode, double delta) {
    Enclosure total = s3_total();
    Enclosure t3 = 3.0 * Enclosure(target);
    if (!(eps > delta)) throw InfeasibleBand("band width must exceed the slack delta");
    if (mode == EqualMode::v_eq_w) {
        if (!(t3.hi() < total.lo())) throw InfeasibleTarget("V is too large.");
        while (!((3.0 * (Enclosure(target) + Enclosure(eps))).hi() < total.lo())) eps /= 2;
        if (!(eps > 2.0 * delta)) throw InfeasibleBand("shrunk band is narrower than the slack");
        Band b{add_up(target, delta), add_down(target, eps)};
        double lo = 0.0, hi = std::numbers::pi / 2;
        for (int it = 0; it < kBisectionBudget; ++it) {
            double m = 0.5 * (lo + hi);
            double vol = kernel::equal_volume_s3(m);
            if (std::abs(vol - b.center()) <= 0.5 * (b.hi - b.lo)) {
                S3Solution s = certify_s3(Enclosure(m), Enclosure(m));
                if (b.holds(s.volumes.v) && b.holds(s.volumes.w)) {
                    s.eps_v = s.eps_w = eps;
                    return s;
                }
            }
            if (vol < b.center()) {
                lo = m;
            } else {
                hi = m;
            }
        }
        throw NoConvergence("equal-volume solve did not converge");
    }

    if (t3.hi() < total.lo()) throw InfeasibleTarget("W is too small.");
    while (!((3.0 * (Enclosure(target) - Enclosure(eps))).lo() >= total.hi())) {
        eps /= 2;
        if (!(eps > 2.0 * delta)) throw InfeasibleBand("shrunk band is narrower than the slack");
    }
    Band b{add_up(target, -eps), add_down(target, -delta)};
    Enclosure half_pi = half_pi_enclosure();
    double lo = 0.0, hi = std::numbers::pi / 2;
    for (int it = 0; it < kBisectionBudget; ++it) {
        double m = 0.5 * (lo + hi);
        double vol = sdb_volumes_s3_fast(m, std::numbers::pi / 2).w;
        if (std::abs(vol - b.center()) <= 0.5 * (b.hi - b.lo)) {
            try {
                S3Solution s = certify_s3(Enclosure(m), half_pi);
                if (b.holds(s.volumes.w)) {
                    s.eps_v = s.eps_w = eps;
                    return s;
                }
            } catch (const DegenerateConfig&) {
            }
        }
        // w decreases as the smaller cap grows.
        if (vol > b.center()) {
            lo = m;
        } else {
            hi = m;
        }
    }
    throw NoConvergence("w = u solve did not converge");
}

bool inside_doubled_box(const VolumesT<Enclosure>& vol, const SweepBox& box, double delta) {
    return vol.v.lo() > add_up(box.v_lo, delta) && vol.v.hi() < add_down(box.v_lo, 2.0 * box.width) &&
           vol.w.lo() > add_up(box.w_lo, delta) && vol.w.hi() < add_down(box.w_lo, 2.0 * box.height);
}

namespace {

double probe_k(double k, double scale) {
    double p = k * scale;
    if (p > 1.0) return p;
    return 1.0 + (k - 1.0) * scale;
}

}  // namespace

StepResult curvature_pair_step(const StepperState& state, const SweepBox& box, double delta) {
    double k1 = state.k1, k2 = state.k2;
    if (!(k1 > 1.0 && k2 > 1.0)) throw CurvatureUnderflow("curvature parameter at or below 1");
    const double tv = box.v_lo + 0.5 * box.width;
    const double tw = box.w_lo + 0.5 * box.height;
    for (int it = 0; it < kSecantBudget; ++it) {
        auto f = sdb_volumes_h3_fast(k1, k2);
        bool near = f.v > box.v_lo + delta && f.v < box.v_lo + 2.0 * box.width && f.w > box.w_lo + delta &&
                    f.w < box.w_lo + 2.0 * box.height;
        if (near) {
            auto cert = sdb_volumes_h3(Enclosure(k1), Enclosure(k2));
            if (inside_doubled_box(cert, box, delta)) {
                StepperState s = state;
                s.k1 = k1;
                s.k2 = k2;
                return {s, cert};
            }
        }
        double p1 = probe_k(k1, state.scale1), p2 = probe_k(k2, state.scale2);
        auto f1 = sdb_volumes_h3_fast(p1, k2);
        auto f2 = sdb_volumes_h3_fast(k1, p2);
        double m11 = f1.v - f.v, m21 = f1.w - f.w;
        double m12 = f2.v - f.v, m22 = f2.w - f.w;
        double det = m11 * m22 - m12 * m21;
        double rv = tv - f.v, rw = tw - f.w;
        double alpha, beta;
        if (std::isfinite(det) && std::abs(det) > 1e-300 &&
            std::abs(det) > 1e-12 * std::abs(m11 * m22) + 1e-12 * std::abs(m12 * m21)) {
            alpha = (m22 * rv - m12 * rw) / det;
            beta = (-m21 * rv + m11 * rw) / det;
        } else {
            // Degenerate secant matrix: move one curvature at a time.
            alpha = (m11 != 0.0) ? rv / m11 : 0.0;
            beta = (m22 != 0.0) ? rw / m22 : 0.0;
        }
        double n1 = k1, n2 = k2;
        double lam = 1.0;
        int tries = 0;
        for (; tries < 60; ++tries) {
            n1 = k1 + lam * alpha * (p1 - k1);
            n2 = k2 + lam * beta * (p2 - k2);
            if (n1 > 1.0 && n2 > 1.0 && std::isfinite(n1) && std::isfinite(n2)) break;
            lam /= 2;
        }
        if (tries == 60) throw CurvatureUnderflow("secant step drove a curvature parameter to 1");
        k1 = n1;
        k2 = n2;
    }
    throw StepFailure("curvature step failed to reach the box at v = " + std::to_string(box.v_lo) +
                      ", w = " + std::to_string(box.w_lo));
}

StepperState solve_curvature_pair(double v, double w, const StepperState& seed) {
    if (!(v > 0.0 && w > 0.0)) throw DomainError("volumes must be positive");
    double lo_v = std::min(v, w), hi_v = std::max(v, w);
    double s1, s2;
    if (seed.k1 > 1.0 && seed.k2 > 1.0) {
        s1 = std::log(std::max(seed.k1, seed.k2) - 1.0);
        s2 = std::log(std::min(seed.k1, seed.k2) - 1.0);
    } else {
        auto single = [](double vol) {
            double a = -30.0, b = 30.0;
            for (int i = 0; i < 120; ++i) {
                double m = 0.5 * (a + b);
                if (kernel::sphere_volume_k(k_of_u(m)) > vol) {
                    a = m;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        };
        s1 = single(lo_v);
        s2 = single(hi_v);
        if (s1 <= s2) s1 = s2 + 1e-6;
    }
    auto resid = [&](double a, double b, double& rv, double& rw) {
        auto f = sdb_volumes_h3_fast(k_of_u(a), k_of_u(b));
        rv = std::log(f.v / lo_v);
        rw = std::log(f.w / hi_v);
    };
    double rv, rw;
    resid(s1, s2, rv, rw);
    for (int it = 0; it < 200; ++it) {
        if (std::abs(rv) < 1e-14 && std::abs(rw) < 1e-14) break;
        const double h = 1e-7;
        double a1, a2, b1, b2;
        resid(s1 + h, s2, a1, a2);
        resid(s1, s2 + h, b1, b2);
        double j11 = (a1 - rv) / h, j21 = (a2 - rw) / h, j12 = (b1 - rv) / h, j22 = (b2 - rw) / h;
        double det = j11 * j22 - j12 * j21;
        if (!std::isfinite(det) || det == 0.0) break;
        double d1 = -(j22 * rv - j12 * rw) / det;
        double d2 = -(-j21 * rv + j11 * rw) / det;
        double norm0 = std::hypot(rv, rw);
        double lam = 1.0;
        bool moved = false;
        for (int k = 0; k < 40; ++k, lam /= 2) {
            double n1 = s1 + lam * d1, n2 = s2 + lam * d2;
            if (!(n1 >= n2)) continue;
            double nv, nw;
            resid(n1, n2, nv, nw);
            if (std::isfinite(nv) && std::isfinite(nw) && std::hypot(nv, nw) < norm0) {
                s1 = n1;
                s2 = n2;
                rv = nv;
                rw = nw;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (!(std::abs(rv) < 1e-8 && std::abs(rw) < 1e-8)) {
        throw NoConvergence("curvature pair solve did not converge at v = " + std::to_string(v) +
                            ", w = " + std::to_string(w));
    }
    StepperState out = seed;
    out.k1 = k_of_u(s1);
    out.k2 = k_of_u(s2);
    if (v > w) std::swap(out.k1, out.k2);
    return out;
}

}  // namespace bubble
