// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bubble/asymptotics.hpp"
#include "bubble/theorem.hpp"

using namespace bubble;

namespace {

constexpr double pi = std::numbers::pi;
const double total = 2 * pi * pi;

// Tolerances and budgets.
constexpr double kAnchorTol = 1e-8;
constexpr double kS3BudgetSeconds = 2 * 3600;
constexpr double kSmokeBudgetSeconds = 5 * 60;
constexpr double kH3SpotBudgetSeconds = 30 * 60;
constexpr double kRayTol = 0.05;
constexpr double kRayLimitTol = 1e-14;
constexpr double kDerivativeRelTol = 1e-6;
constexpr double kDiskformTol = 1e-10;
constexpr double kConservationTol = 1e-10;
constexpr double kSwapTol = 1e-12;
constexpr int kKernelSamples = 1000;
constexpr int kPartialSamples = 20;
constexpr std::size_t kTamperSamples = 500;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
    std::printf("%s  %-38s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double x) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void equal_thirds_anchor() {
    double lo = 0.0, hi = pi / 2;
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (lo + hi);
        (equal_volume_s3(m) < total / 3 ? lo : hi) = m;
    }
    double r = 0.5 * (lo + hi);
    Enclosure a = sdb_area_s3({r, r});
    bool ok = a.lo() - kAnchorTol <= 6 * pi && 6 * pi <= a.hi() + kAnchorTol;
    report(ok, "S3 equal-thirds area is 6 pi", "area [" + exact_decimal(a.lo()) + ", " + exact_decimal(a.hi()) + "]");
}

CertificateFile s3_full;

void s3_proof() {
    TheoremOptions opt;
    opt.space = Space::S3;
    double t = seconds([&] { s3_full = prove_theorem(opt); });
    report(s3_full.root.proved && t <= kS3BudgetSeconds, "S3 computer proof",
           std::to_string(leaf_count(s3_full.root)) + " leaves, " + fmt("%.2f s", t));

    TheoremOptions smoke = opt;
    smoke.slack = s3_smoke_slack();
    CertificateFile f;
    double ts = seconds([&] { f = prove_theorem(smoke); });
    report(f.root.proved && ts <= kSmokeBudgetSeconds, "S3 smoke profile",
           "delta " + exact_decimal(smoke.slack.delta) + ", " + fmt("%.2f s", ts));
}

CertificateFile h3_spot;

void h3_sweeps() {
    TheoremOptions opt;
    opt.space = Space::H3;
    double t = seconds([&] { h3_spot = prove_theorem(opt); });
    report(h3_spot.root.proved && t <= kH3SpotBudgetSeconds, "H3 spot sweeps 5.9 and 5.20",
           std::to_string(leaf_count(h3_spot.root)) + " leaves, " + fmt("%.2f s", t));

    H3ProofOptions h;
    std::string bad;
    int checked = 0;
    for (const auto& c : h3_claims()) {
        if (c.id == "5.9" || c.ray) continue;
        long m = claim_rows(c) / 2;
        auto [first, last] = claim_columns(c, m);
        Certificate k = check_claim_box(c, {m, (first + last) / 2}, h);
        ++checked;
        if (!k.proved) bad += " " + c.id;
    }
    report(bad.empty() && checked == 10, "H3 interior box of claims 5.10-5.19",
           bad.empty() ? std::to_string(checked) + " boxes" : "failed:" + bad);
}

void ray_limit() {
    const double lambda = critical_ratio();
    std::vector<double> f;
    for (double w : {1e3, 1e4, 1e5}) f.push_back(hutchings_point(Space::H3, {lambda * w, w}));
    bool ok = f[0] > f[1] && f[1] > f[2] && f[2] > 0.0 && std::abs(f[1]) < kRayTol &&
              std::abs(limit_along_ray(lambda)) <= kRayLimitTol;
    report(ok, "ray limit", "F = " + fmt("%.6g", f[0]) + ", " + fmt("%.6g", f[1]) + ", " + fmt("%.6g", f[2]) +
                                "; limit " + fmt("%.3g", limit_along_ray(lambda)));
}

void monotonicity() {
    const double lambda = critical_ratio();
    bool ok = true;
    std::string detail = "dF/dw";
    for (double w : {300.0, 500.0, 1000.0}) {
        auto d = ray_derivative(lambda, w);
        ok = ok && d.consistent && d.value < 0.0;
        detail += " " + fmt("%.4g", d.value);
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> lw(std::log(150.0), std::log(3000.0)), ratio(lambda, 4.0);
    double worst = INFINITY;
    for (int i = 0; i < kPartialSamples; ++i) {
        double w = std::exp(lw(rng)), v = ratio(rng) * w;
        auto d = partial_v(v, w);
        ok = ok && d.consistent && d.value > 0.0;
        worst = std::min(worst, d.value);
    }
    report(ok, "monotonicity signs", detail + "; min dF/dv " + fmt("%.4g", worst));
}

void flat_inequality_endpoints() {
    Enclosure left_half = hmrr_left_side(Enclosure(0.5));
    Enclosure left_end = hmrr_left_side(Enclosure(1.0) / Enclosure(1.84));
    Enclosure right = hmrr_right_side();
    bool ok = left_half.lo() > 2.4236 && left_end.lo() > 2.412965 && right.hi() < 2.412966;
    report(ok, "flat double bubble inequality endpoints",
           fmt("%.9f", left_half.lo()) + ", " + fmt("%.9f", left_end.lo()) + " vs " + fmt("%.9f", right.hi()));
}

void kernel_suite() {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> rs3(0.05, 3.0), rh3(0.05, 5.0), ang(0.01, pi - 0.01), e(-6.0, 2.5),
        unit(0.0, 1.0);
    bool deriv = true, caps = true, disk = true, conserve = true, swap = true, cosh_y = true;
    for (int i = 0; i < kKernelSamples; ++i) {
        for (Space s : {Space::S3, Space::H3}) {
            double r = s == Space::S3 ? rs3(rng) : rh3(rng);
            double h = 1e-5 * std::max(1.0, r);
            double dv = (sphere_volume(s, Enclosure(r + h)).mid() - sphere_volume(s, Enclosure(r - h)).mid()) / (2 * h);
            double a = sphere_area(s, Enclosure(r)).mid();
            deriv = deriv && std::abs(dv - a) <= kDerivativeRelTol * a;
            caps = caps && cap_volume(s, {r, pi}).intersects(sphere_volume(s, Enclosure(r))) &&
                   cap_area(s, {r, pi}).intersects(sphere_area(s, Enclosure(r))) &&
                   (2.0 * cap_area(s, {r, pi / 2})).intersects(sphere_area(s, Enclosure(r)));
        }
        CapSpec cap{rs3(rng), ang(rng)};
        double direct = cap_volume(Space::H3, cap).mid();
        disk = disk && std::abs(cap_volume_diskform(disk_form_of_cap(cap)) - direct) <= kDiskformTol * std::max(1.0, direct);

        double r1 = 0.05 + (pi / 2 - 0.051) * unit(rng), r2 = 0.05 + (pi / 2 - 0.051) * unit(rng);
        if (std::abs(r1 - r2) > 1e-4) {
            SdbRadiiS3 rad{std::min(r1, r2), std::max(r1, r2)};
            auto v = sdb_volumes_s3(rad);
            double sum = (v.v + v.w + s3_exterior_from_outer_caps(rad)).mid();
            conserve = conserve && std::abs(sum - total) <= kConservationTol;
        }

        double k2 = 1.0 + std::exp(e(rng)), k1 = k2 + (k2 - 1.0) * 3.0 * unit(rng) + 1e-9;
        auto a = sdb_volumes_h3({k1, k2});
        auto b = sdb_volumes_h3(SdbCurvaturesH3{k2, k1});
        swap = swap && std::abs(a.v.mid() - b.w.mid()) <= kSwapTol * std::max(1.0, a.v.mid()) &&
               std::abs(a.w.mid() - b.v.mid()) <= kSwapTol * std::max(1.0, a.w.mid());
        cosh_y = cosh_y && std::cosh(interface_geometry_h3({k1, k2}).y) < 2.0;
    }
    auto mark = [](bool b, const char* n) { return std::string(n) + (b ? "" : "!"); };
    report(deriv && caps && disk && conserve && swap && cosh_y, "kernel property suite",
           mark(deriv, "dV/dr") + " " + mark(caps, "caps") + " " + mark(disk, "diskform") + " " +
               mark(conserve, "conservation") + " " + mark(swap, "swap") + " " + mark(cosh_y, "cosh y"));
}

void direct_hits(Certificate& c, std::vector<Certificate*>& out) {
    if (c.children.empty()) {
        if (c.method == Method::direct_hit) out.push_back(&c);
        return;
    }
    for (auto& k : c.children) direct_hits(k, out);
}

void certificate_soundness() {
    bool accepted = verify_certificate(s3_full).ok && verify_certificate(h3_spot).ok &&
                    verify_certificate(from_json(to_json(s3_full))).ok && verify_certificate(from_json(to_json(h3_spot))).ok;

    std::size_t tampered = 0, rejected = 0;
    for (CertificateFile* f : {&s3_full, &h3_spot}) {
        std::vector<Certificate*> leaves;
        direct_hits(f->root, leaves);
        std::size_t stride = std::max<std::size_t>(1, leaves.size() / kTamperSamples);
        for (std::size_t i = 0; i < leaves.size(); i += stride) {
            Certificate* leaf = leaves[i];
            double g = leaf->g_min;
            leaf->g_min = std::nextafter(leaf->h_max, 0.0);
            ++tampered;
            if (!verify_certificate(*f).ok) ++rejected;
            leaf->g_min = g;
        }
    }

    TheoremOptions s3;
    s3.space = Space::S3;
    s3.jobs = 4;
    TheoremOptions h3;
    h3.space = Space::H3;
    h3.jobs = 3;
    bool same = to_json(prove_theorem(s3)) == to_json(s3_full) && to_json(prove_theorem(h3)) == to_json(h3_spot);
    report(accepted && tampered == rejected && same, "certificate soundness and determinism",
           std::string(accepted ? "accepted" : "NOT accepted") + ", " + std::to_string(rejected) + "/" +
               std::to_string(tampered) + " tampered leaves rejected, " + (same ? "identical" : "DIFFERENT") +
               " across runs and jobs");
}

void coverage() {
    auto s3 = validate_coverage(Space::S3, kCoveragePoints, kCoverageSeed);
    auto h3 = validate_coverage(Space::H3, kCoveragePoints, kCoverageSeed);
    report(s3.ok() && h3.ok(), "coverage exhaustiveness",
           "S3 " + std::to_string(s3.valid) + "/" + std::to_string(s3.points) + ", H3 " + std::to_string(h3.valid) +
               "/" + std::to_string(h3.points));
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void()>>> steps = {
        {"S3 equal-thirds area is 6 pi", equal_thirds_anchor},
        {"S3 computer proof", s3_proof},
        {"H3 spot sweeps", h3_sweeps},
        {"ray limit", ray_limit},
        {"monotonicity signs", monotonicity},
        {"flat double bubble inequality endpoints", flat_inequality_endpoints},
        {"kernel property suite", kernel_suite},
        {"certificate soundness and determinism", certificate_soundness},
        {"coverage exhaustiveness", coverage},
    };
    for (auto& [name, step] : steps) {
        try {
            step();
        } catch (const std::exception& e) {
            report(false, name, std::string("threw: ") + e.what());
        }
    }
    std::printf("%s\n", failures == 0 ? "all criteria pass" : (std::to_string(failures) + " criteria fail").c_str());
    return failures == 0 ? 0 : 1;
}
