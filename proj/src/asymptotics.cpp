#include "bubble/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include <tbb/parallel_for.h>

#include "json.hpp"

namespace bubble {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Enclosure of a decimal constant that is not a double.
Enclosure decimal(double x) {
    return {std::nextafter(x, -INFINITY), std::nextafter(x, INFINITY)};
}

double lam() { return critical_ratio(); }

template <class F>
double guarded(F&& f) {
    try {
        return f();
    } catch (const std::exception&) {
        return kNaN;
    }
}

template <class F>
FiniteDifference central_difference(F&& f, double x, double scale) {
    FiniteDifference d;
    double h = std::max(1e-4, 1e-6 * scale);
    const double cap = 0.01 * scale;
    for (int attempt = 0; attempt < 8; ++attempt) {
        d.step = h;
        d.coarse = (f(x + h) - f(x - h)) / (2.0 * h);
        d.fine = (f(x + h / 2) - f(x - h / 2)) / h;
        d.value = (4.0 * d.fine - d.coarse) / 3.0;
        if (std::abs(d.coarse - d.fine) <= 1e-3 * std::abs(d.value)) {
            d.consistent = true;
            return d;
        }
        if (10.0 * h > cap) break;
        h *= 10.0;
    }
    return d;
}

double one_sided_open(double x) { return x + kOpenShift; }

}  // namespace

void LemmaCheckReport::add(std::vector<double> point, double margin) {
    sample_points.push_back(std::move(point));
    margins.push_back(margin);
}

void LemmaCheckReport::finish() {
    bool ok = !margins.empty() || !parts.empty();
    for (double m : margins) ok = ok && m > 0.0;
    for (auto& p : parts) ok = ok && p.pass;
    pass = ok;
}

double LemmaCheckReport::min_margin() const {
    double m = INFINITY;
    for (double x : margins) m = std::isnan(x) ? x : std::min(m, x);
    for (auto& p : parts) {
        double q = p.min_margin();
        m = std::isnan(q) ? q : std::min(m, q);
        if (std::isnan(m)) return m;
    }
    return m;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw DomainError("log_spaced needs 0 < lo < hi and n >= 2");
    std::vector<double> out(n);
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * i / (n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) throw DomainError("lin_spaced needs lo < hi and n >= 2");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    out.back() = hi;
    return out;
}

double limit_extra_volume() { return kPi * (1.5 - std::log(2.0)); }
double limit_cap_area() { return 3.0 * kPi; }
double limit_interface_area() { return 2.0 * kPi; }

Enclosure hmrr_left_side(const Enclosure& w) {
    return cbrt(Enclosure(2.0)) * cbrt(sqr(1.0 - w)) + cbrt(sqr(w)) + 1.0;
}

Enclosure hmrr_right_side() {
    return decimal(kHmrrConstant) * 3.0 / (2.0 * cbrt(Enclosure(2.0)));
}

Enclosure small_ball_volume(const Enclosure& r) {
    Enclosure pi = pi_enclosure();
    Enclosure s3 = sqrt(Enclosure(3.0));
    Enclosure scaled = 2.0 * r / (2.0 + s3);
    return (2.0 * pi / 3.0 + pi * s3 / 2.0) * scaled * scaled * scaled;
}

RadiusBracket radius_bracket_h3(double v) {
    if (!(v > 0.0)) throw DomainError("volume must be positive");
    const double eps = 1e-8 * v;
    const double delta = eps / 8.0;
    RadiusBracket b;
    b.lo = radius_from_volume(Space::H3, {v, eps, BandSide::under}, delta);
    b.hi = radius_from_volume(Space::H3, {v, eps, BandSide::over}, delta);
    return b;
}

CurvatureDenominator curvature_denominator(double x) {
    auto r = radius_bracket_h3(x);
    auto d = [x](double rr) { return x + 2.0 * kPi * rr + kPi / 2.0 * std::exp(-2.0 * rr) - kPi / 2.0; };
    return {d(r.lo), d(r.hi)};
}

double sphere_curvature_h3(double x) {
    auto r = radius_bracket_h3(x);
    return 2.0 / std::tanh(0.5 * (r.lo + r.hi));
}

double single_area_asymptote(double v) {
    return 2.0 * v + 2.0 * kPi * std::log(v) - 2.0 * kPi * (1.0 + std::log(kPi / 2.0));
}

double limiting_area_discrepancy(double v, double w) {
    const double ve = limit_extra_volume();
    double model = single_area_fast(Space::H3, v + ve) + single_area_fast(Space::H3, w + ve) -
                   2.0 * limit_cap_area() + limit_interface_area();
    return sdb_area_fast(Space::H3, v, w) - model;
}

FiniteDifference ray_derivative(double psi, double w) {
    auto f = [psi](double x) { return hutchings_point(Space::H3, {psi * x, x}); };
    return central_difference(f, w, w);
}

FiniteDifference partial_v(double v, double w) {
    auto f = [w](double x) { return hutchings_point(Space::H3, {x, w}); };
    return central_difference(f, v, v);
}

InterfaceSample interface_sample(const SdbCurvaturesH3& k) {
    double k1 = std::max(k.k1, k.k2), k2 = std::min(k.k1, k.k2);
    auto vol = sdb_volumes_h3_fast(k1, k2);
    auto g = interface_geometry_h3({k1, k2});
    InterfaceSample s;
    s.v = vol.v;
    s.w = vol.w;
    s.y = g.y;
    s.theta = g.theta;
    s.v_extra = kernel::sphere_volume_k(k1) - vol.v;
    s.w_extra = kernel::sphere_volume_k(k2) - vol.w;
    return s;
}

std::vector<double> default_hmrr_grid() { return lin_spaced(0.5, 1.0 / 1.84, kDefaultSamples); }

std::vector<double> default_radius_volumes() {
    return log_spaced(one_sided_open(150.0 * lam()), 1e6, kDefaultSamples);
}

std::vector<double> default_aprime_points() {
    auto xs = log_spaced(3.0, 1e6, kDefaultSamples);
    xs.push_back(200.0);
    xs.push_back(one_sided_open(150.0 * lam()));
    xs.push_back(one_sided_open(300.0 * lam()));
    std::sort(xs.begin(), xs.end());
    return xs;
}

std::vector<SdbCurvaturesH3> default_interface_configs() {
    auto vols = log_spaced(one_sided_open(300.0 * lam()), 2e4, 10);
    std::vector<SdbCurvaturesH3> out;
    for (std::size_t i = 0; i < vols.size(); ++i) {
        for (std::size_t j = i; j < vols.size(); ++j) {
            auto s = solve_curvature_pair(vols[i], vols[j], StepperState{});
            out.push_back({s.k1, s.k2});
        }
    }
    return out;
}

std::vector<double> default_limit_schedule() { return {1e2, 1e3, 1e4, 1e5}; }

std::vector<double> default_ray_points() { return log_spaced(300.0, 3000.0, kDefaultSamples); }

std::vector<VolumePair> default_partial_v_points() {
    std::vector<VolumePair> out;
    for (double w : log_spaced(150.0, 3000.0, 10)) {
        for (double psi : {lam(), 0.9, 1.0, 2.0, 4.0}) out.push_back({psi * w, w});
    }
    return out;
}

LemmaCheckReport check_hmrr_strong(const std::vector<double>& grid) {
    LemmaCheckReport rep;
    rep.lemma_id = "hmrr-strong";
    rep.statement = "2^(1/3)(1-w)^(2/3) + w^(2/3) + 1 >= 2.02676 * 3 * 2^(-4/3) on [1/2, 1/1.84], concave";
    const double hi = 1.0 / 1.84;
    for (double w : grid) {
        if (!(w >= 0.5 && w <= hi)) throw DomainError("grid point outside [1/2, 1/1.84]");
    }
    const Enclosure rhs = hmrr_right_side();
    for (double w : grid) rep.add({w}, (hmrr_left_side(Enclosure(w)) - rhs).lo());

    std::vector<double> g = grid;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    auto f = [](double w) { return hmrr_left_side(Enclosure(w)).mid(); };
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        double left = (f(g[i]) - f(g[i - 1])) / (g[i] - g[i - 1]);
        double right = (f(g[i + 1]) - f(g[i])) / (g[i + 1] - g[i]);
        rep.add({g[i - 1], g[i], g[i + 1]}, left - right);
    }

    Enclosure w_end = Enclosure(1.0) / decimal(1.84);
    rep.add({0.5}, (hmrr_left_side(Enclosure(0.5)) - decimal(2.4236)).lo());
    rep.add({w_end.mid()}, (hmrr_left_side(w_end) - decimal(2.412965)).lo());
    rep.add({}, (decimal(2.412966) - rhs).lo());
    rep.finish();
    return rep;
}

LemmaCheckReport check_small_volume_constants() {
    LemmaCheckReport rep;
    rep.lemma_id = "small-volume-constants";
    rep.statement = "ball radius, distortion factor and 2.02676 * factor^(-10/3) > 2 in H^3 and S^3";
    const Enclosure r = decimal(kSmallBallRadius);
    const Enclosure c = decimal(kHmrrConstant);
    rep.add({kSmallBallRadius}, (small_ball_volume(r) - decimal(0.002743)).lo());
    rep.add({kSmallBallRadius}, (decimal(kDistortionBound) - sinh(r) / r).lo());
    Enclosure b = decimal(kDistortionBound);
    rep.add({kDistortionBound}, (c / (b * b * b * cbrt(b)) - 2.0).lo());

    const Enclosure rs = decimal(kS3SmallBallRadius);
    rep.add({kS3SmallBallRadius}, (small_ball_volume(rs) - decimal(kS3SmallLimit)).lo());
    Enclosure q = sin(rs) / rs;
    rep.add({kS3SmallBallRadius}, (c * q * q * q * cbrt(q) - 2.0).lo());
    rep.finish();
    return rep;
}

LemmaCheckReport check_radius_asymptote(const std::vector<double>& vs) {
    LemmaCheckReport rep;
    rep.lemma_id = "radius-asymptote";
    rep.statement = "0 < r(v) - ln(2v/pi)/2 < 0.06 for v > 150 lambda";
    for (double v : vs) {
        if (!(v > 150.0 * lam())) throw DomainError("volume must exceed 150 lambda");
    }
    for (double v : vs) {
        double base = 0.5 * std::log(2.0 * v / kPi);
        RadiusBracket r{kNaN, kNaN};
        try {
            r = radius_bracket_h3(v);
        } catch (const std::exception&) {
        }
        rep.add({v}, r.lo - base);
        rep.add({v}, 0.06 - (r.hi - base));
    }
    rep.finish();
    return rep;
}

LemmaCheckReport check_aprime_bounds(const std::vector<double>& xs) {
    LemmaCheckReport rep;
    rep.lemma_id = "aprime-bounds";
    rep.statement = "2 + 2pi/(x + pi ln x + c) brackets A'(x): c = -3 above; c = -1.041 below past 150 lambda; "
                    "A'(x + 3) with c = 2 below past 300 lambda";
    for (double x : xs) {
        const double base = x + kPi * std::log(x);
        if (!(base - 3.0 > 0.0)) throw DomainError("A' bound needs x + pi ln x > 3");
        auto d = [](double p) {
            try {
                return curvature_denominator(p);
            } catch (const std::exception&) {
                return CurvatureDenominator{kNaN, kNaN};
            }
        };
        auto here = d(x);
        rep.add({x, -3.0}, here.lo - (base - 3.0));
        if (x > 150.0 * lam()) rep.add({x, -1.041}, (base - 1.041) - here.hi);
        if (x > 300.0 * lam()) rep.add({x, 2.0}, (base + 2.0) - d(x + 3.0).hi);
    }
    rep.finish();
    return rep;
}

LemmaCheckReport check_interface_limits(const std::vector<SdbCurvaturesH3>& ks) {
    LemmaCheckReport rep;
    rep.lemma_id = "interface-limits";
    rep.statement = "y < acosh 2, theta < 1/20 and completion volumes < 3 once both volumes exceed 300 lambda";
    const double y_max = std::acosh(2.0);
    for (const auto& k : ks) {
        InterfaceSample s = interface_sample(k);
        if (!(std::min(s.v, s.w) > 300.0 * lam())) throw DomainError("both volumes must exceed 300 lambda");
        std::vector<double> pt{s.v, s.w};
        rep.add(pt, y_max - s.y);
        rep.add(pt, 0.05 - s.theta);
        rep.add(pt, 3.0 - s.v_extra);
        rep.add(pt, 3.0 - s.w_extra);
    }
    // Both completion volumes sit below vol(y, pi/3 + theta) + vol(y, theta),
    // which grows in y and theta.
    const double y_up = std::nextafter(y_max, INFINITY);
    const double big = std::nextafter(kPi / 3.0 + 0.05, INFINITY);
    const double small = std::nextafter(0.05, INFINITY);
    Enclosure total = cap_volume_diskform_enclosure({y_up, big}) + cap_volume_diskform_enclosure({y_up, small});
    rep.add({y_up, big, small}, (3.0 - total).lo());
    rep.finish();
    return rep;
}

LemmaCheckReport check_limiting_area(const std::vector<double>& ws) {
    LemmaCheckReport rep;
    rep.lemma_id = "limiting-area";
    rep.statement = "|A(w, w) - (2A(w + v_inf) - 2a_inf + c_inf)| and |A(v) - asymptote| decrease";
    std::vector<double> sorted = ws;
    std::sort(sorted.begin(), sorted.end());
    double prev = kNaN;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        double w = sorted[i];
        double d = guarded([&] { return std::abs(limiting_area_discrepancy(w, w)); });
        if (i > 0) rep.add({sorted[i - 1], w}, prev - d);
        prev = d;
    }
    auto vs = log_spaced(1e3, 1e6, kDefaultSamples);
    prev = kNaN;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        double v = vs[i];
        double d = std::abs(single_area_fast(Space::H3, v) - single_area_asymptote(v));
        if (i > 0) rep.add({vs[i - 1], v}, prev - d);
        prev = d;
    }
    rep.finish();
    return rep;
}

LemmaCheckReport check_ray_monotonicity(const std::vector<double>& ws, const std::vector<VolumePair>& dv_points) {
    LemmaCheckReport rep;
    rep.lemma_id = "ray-monotonicity";
    rep.statement = "d/dw F(lambda w, w) < 0 for w >= 300; dF/dv > 0 for w >= 150, v >= lambda w";
    for (double w : ws) {
        if (!(w >= 300.0)) throw DomainError("ray samples need w >= 300");
    }
    for (const auto& p : dv_points) {
        if (!(p.w >= 150.0 && p.v >= lam() * p.w * (1.0 - 1e-12))) {
            throw DomainError("dF/dv samples need w >= 150 and v >= lambda w");
        }
    }
    for (double w : ws) {
        double m = guarded([&] {
            auto d = ray_derivative(lam(), w);
            return d.consistent ? -d.value : kNaN;
        });
        rep.add({lam() * w, w}, m);
    }
    for (const auto& p : dv_points) {
        double m = guarded([&] {
            auto d = partial_v(p.v, p.w);
            return d.consistent ? d.value : kNaN;
        });
        rep.add({p.v, p.w}, m);
    }
    rep.finish();
    return rep;
}

LemmaCheckReport check_algebraic_chain(int points) {
    LemmaCheckReport rep;
    rep.lemma_id = "algebraic-chain";
    rep.statement = "fraction bounds feeding the ray and dF/dv monotonicity arguments";
    const double l = lam();
    auto pl = [](double x) { return kPi * std::log(x); };

    LemmaCheckReport lower;
    lower.lemma_id = "fraction-lower";
    lower.statement = "1/(x + pi ln x + a) > 1/x - (pi ln x + a)/x^2 when pi ln x + a > 0";
    for (double a : {-3.0, -1.041, 0.0, 2.0}) {
        for (double x : log_spaced(1.5, 1e6, points)) {
            double s = pl(x) + a;
            if (!(s > 0.0)) continue;
            lower.add({x, a}, 1.0 / (x + s) - (1.0 / x - s / (x * x)));
        }
    }
    lower.add({10.0, 0.0}, 1.0 / (10.0 + pl(10.0)) - (1.0 / 10.0 - pl(10.0) / 100.0));
    lower.finish();

    LemmaCheckReport lower_scaled;
    lower_scaled.lemma_id = "fraction-lower-scaled";
    lower_scaled.statement = "mu/(mu w + pi ln(mu w) + a) > 1/w - (pi ln w/mu + pi ln mu/mu + a/mu)/w^2";
    for (double mu : {l / 2.0, l, 1.0, l + 1.0}) {
        for (double a : {-3.0, 2.0}) {
            for (double w : log_spaced(300.0, 1e6, points)) {
                if (!(pl(mu * w) + a > 0.0)) continue;
                double lhs = mu / (mu * w + pl(mu * w) + a);
                double rhs = 1.0 / w - (pl(w) / mu + pl(mu) / mu + a / mu) / (w * w);
                lower_scaled.add({mu, w, a}, lhs - rhs);
            }
        }
    }
    lower_scaled.finish();

    LemmaCheckReport upper;
    upper.lemma_id = "fraction-upper";
    upper.statement = "1/(x + pi ln x - 3) < 1/x - (pi ln x - 3)/(1.1 x^2) for x > 150 lambda";
    for (double x : log_spaced(one_sided_open(150.0 * l), 1e6, points)) {
        double s = pl(x) - 3.0;
        upper.add({x}, (1.0 / x - s / (1.1 * x * x)) - 1.0 / (x + s));
    }
    upper.finish();

    LemmaCheckReport upper_scaled;
    upper_scaled.lemma_id = "fraction-upper-scaled";
    upper_scaled.statement = "mu/(mu w + pi ln(mu w) - 3) < 1/w - (pi ln w + pi ln mu - 3)/(1.1 mu w^2) for mu w > 150";
    for (double mu : {l / 2.0, 1.0, l + 1.0}) {
        for (double w : log_spaced(one_sided_open(150.0 / mu), 1e6, points)) {
            double lhs = mu / (mu * w + pl(mu * w) - 3.0);
            double rhs = 1.0 / w - (pl(w) + pl(mu) - 3.0) / (1.1 * mu * w * w);
            upper_scaled.add({mu, w}, rhs - lhs);
        }
    }
    upper_scaled.finish();

    LemmaCheckReport simple;
    simple.lemma_id = "log-coefficients";
    simple.statement = "log-coefficient comparison along v = lambda w for w >= 300";
    const double h = l / 2.0, m = l + 1.0;
    for (double w : log_spaced(300.0, 1e6, points)) {
        double lw = pl(w);
        double lhs = 2.0 * (lw / l + pl(l) / l - 2.0 / l + lw - 2.0);
        double rhs = 2.0 * lw / (1.1 * h) + 2.0 * pl(h) / (1.1 * h) - 6.0 / (1.1 * h) + lw / 1.1 - 3.0 / 1.1 +
                     lw / (1.1 * m) + pl(m) / (1.1 * m) - 3.0 / (1.1 * m);
        simple.add({w}, rhs - lhs);
    }
    simple.finish();

    LemmaCheckReport dv;
    dv.lemma_id = "dv-fractions";
    dv.statement = "1/(v/2 + pi ln(v/2) - 1.041) + 1/(v + w + pi ln(v + w) - 1.041) > 2/(v + pi ln v - 3)";
    int nw = std::max(2, points / 5);
    for (double w : log_spaced(150.0, 1e5, nw)) {
        for (double psi : log_spaced(l, 20.0, 5)) {
            double v = psi * w;
            double lhs = 1.0 / (v / 2.0 + pl(v / 2.0) - 1.041) + 1.0 / (v + w + pl(v + w) - 1.041);
            dv.add({v, w}, lhs - 2.0 / (v + pl(v) - 3.0));
        }
    }
    dv.finish();

    rep.parts = {lower, lower_scaled, upper, upper_scaled, simple, dv};
    rep.finish();
    return rep;
}

double crit_line_margin(double w) {
    const double l = lam();
    auto pl = [](double x) { return kPi * std::log(x); };
    double lhs = 2.0 * l / (l * w + pl(l * w) + 2.0) + 2.0 / (w + pl(w) + 2.0);
    double rhs = l / (l * w / 2.0 + pl(l * w / 2.0) - 3.0) + 1.0 / (w + pl(w) - 3.0) +
                 (l + 1.0) / ((l + 1.0) * w + pl((l + 1.0) * w) - 3.0);
    return 2.0 * kPi * (lhs - rhs);
}

LemmaCheckReport check_crit_line_inequality(const std::vector<double>& ws) {
    LemmaCheckReport rep;
    rep.lemma_id = "crit-line";
    rep.statement = "completed-cap curvature terms beat the three A' upper bounds along v = lambda w, w >= 300";
    for (double w : ws) {
        if (!(w >= 300.0)) throw DomainError("needs w >= 300");
        rep.add({w}, crit_line_margin(w));
    }
    rep.finish();
    return rep;
}

std::vector<std::string> lemma_ids() {
    auto ids = default_lemma_ids();
    ids.push_back("crit-line");
    return ids;
}

std::vector<std::string> default_lemma_ids() {
    return {"hmrr-strong",     "small-volume-constants", "radius-asymptote", "aprime-bounds",
            "interface-limits", "limiting-area",         "ray-monotonicity", "algebraic-chain"};
}

LemmaCheckReport run_lemma(const std::string& id) {
    if (id == "hmrr-strong") return check_hmrr_strong(default_hmrr_grid());
    if (id == "small-volume-constants") return check_small_volume_constants();
    if (id == "radius-asymptote") return check_radius_asymptote(default_radius_volumes());
    if (id == "aprime-bounds") return check_aprime_bounds(default_aprime_points());
    if (id == "interface-limits") return check_interface_limits(default_interface_configs());
    if (id == "limiting-area") return check_limiting_area(default_limit_schedule());
    if (id == "ray-monotonicity") return check_ray_monotonicity(default_ray_points(), default_partial_v_points());
    if (id == "algebraic-chain") return check_algebraic_chain();
    if (id == "crit-line") return check_crit_line_inequality(log_spaced(300.0, 1e5, kDefaultSamples));
    throw ConfigError("unknown lemma id: " + id);
}

std::vector<LemmaCheckReport> run_lemmas(const std::vector<std::string>& ids) {
    for (const auto& id : ids) {
        auto all = lemma_ids();
        if (std::find(all.begin(), all.end(), id) == all.end()) throw ConfigError("unknown lemma id: " + id);
    }
    std::vector<LemmaCheckReport> out(ids.size());
    tbb::parallel_for(std::size_t{0}, ids.size(), [&](std::size_t i) { out[i] = run_lemma(ids[i]); });
    return out;
}

namespace {

nlohmann::ordered_json report_json(const LemmaCheckReport& r) {
    nlohmann::ordered_json j;
    j["lemma_id"] = r.lemma_id;
    j["statement"] = r.statement;
    j["pass"] = r.pass;
    j["min_margin"] = r.min_margin();
    j["sample_points"] = r.sample_points;
    j["margins"] = r.margins;
    if (!r.parts.empty()) {
        j["parts"] = nlohmann::ordered_json::array();
        for (const auto& p : r.parts) j["parts"].push_back(report_json(p));
    }
    return j;
}

void table_rows(std::ostringstream& os, const LemmaCheckReport& r, int indent) {
    char line[256];
    std::string id = std::string(indent, ' ') + r.lemma_id;
    std::snprintf(line, sizeof line, "%-28s %8zu %14.6g  %s\n", id.c_str(), r.margins.size(), r.min_margin(),
                  r.pass ? "PASS" : "FAIL");
    os << line;
    for (const auto& p : r.parts) table_rows(os, p, indent + 2);
}

}  // namespace

std::string reports_to_json(const std::vector<LemmaCheckReport>& reports) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(report_json(r));
    return j.dump(1) + "\n";
}

std::string reports_table(const std::vector<LemmaCheckReport>& reports) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-28s %8s %14s  %s\n", "lemma", "margins", "min margin", "result");
    os << line;
    for (const auto& r : reports) table_rows(os, r, 0);
    return os.str();
}

}  // namespace bubble
