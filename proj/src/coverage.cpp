#include "bubble/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "bubble/errors.hpp"

namespace bubble {

std::string_view to_string(StepKind k) noexcept {
    switch (k) {
        case StepKind::hutchings_balancing: return "hutchings_balancing";
        case StepKind::permutation: return "permutation";
        case StepKind::s_balancing: return "s_balancing";
        case StepKind::s3_computer: return "s3_computer";
        case StepKind::h3_computer: return "h3_computer";
        case StepKind::h3_ray_plus_derivative: return "h3_ray_plus_derivative";
        case StepKind::h3_small: return "h3_small";
        case StepKind::h3_large: return "h3_large";
    }
    return "unknown";
}

bool is_terminal(StepKind k) noexcept { return k != StepKind::permutation && k != StepKind::s_balancing; }

namespace {

[[noreturn]] void uncovered(const char* why, double v, double w, double u) {
    std::ostringstream os;
    os << "no reduction chain for (" << v << ", " << w << ", " << u << "): " << why;
    throw Uncovered(os.str());
}

constexpr int kChainBudget = 16;

}  // namespace

ReductionChain classify_coverage_s3(double v, double w, double u) {
    if (!(std::isfinite(v) && std::isfinite(w) && std::isfinite(u))) throw DomainError("fractions must be finite");
    if (std::abs(v + w + u - 1.0) > 1e-12) throw DomainError("fractions must sum to 1");
    if (v < kS3MinFraction || w < kS3MinFraction || u < kS3MinFraction) {
        uncovered("a region is below one tenth of |S3|", v, w, u);
    }
    ReductionChain chain;
    chain.space = Space::S3;
    // Hutchings balancing gives connectedness outright, so it can only open a chain.
    if (v > 2.0 * w || v > 2.0 * u) {
        chain.steps.push_back({StepKind::hutchings_balancing, v, w, u});
        return chain;
    }
    for (int i = 0; i < kChainBudget; ++i) {
        if (w > u) {
            chain.steps.push_back({StepKind::permutation, v, w, u});
            std::swap(w, u);
        }
        if (v <= w) {
            if (v < kS3MinFraction) uncovered("left the computer domain", v, w, u);
            chain.steps.push_back({StepKind::s3_computer, v, w, u});
            return chain;
        }
        if (v > 2.0 * w) uncovered("S-balancing needs v <= 2w", v, w, u);
        chain.steps.push_back({StepKind::s_balancing, v, w, u});
        double p = (v + w) / 2.0;
        v = p;
        w = p;
    }
    uncovered("chain budget exhausted", v, w, u);
}

ReductionChain classify_coverage_h3(double v, double w) {
    if (!(v > 0.0 && w > 0.0 && std::isfinite(v) && std::isfinite(w))) throw DomainError("volumes must be positive");
    if (std::min(v, w) < kH3Ratio * std::max(v, w)) uncovered("volume ratio below 0.85", v, w, 0.0);
    ReductionChain chain;
    chain.space = Space::H3;
    if (v > w) {
        chain.steps.push_back({StepKind::s_balancing, v, w, 0.0});
        double p = (v + w) / 2.0;
        v = p;
        w = p;
    }
    StepKind k;
    // The small-volume bound reaches 0.002743 and the computer band starts at
    // 0.00274; below the band floor the small-volume bound applies.
    if (w < kH3ComputerFloor) {
        k = StepKind::h3_small;
    } else if (w <= kH3ComputerCeiling) {
        k = StepKind::h3_computer;
    } else if (w <= kH3RayCeiling) {
        k = StepKind::h3_ray_plus_derivative;
    } else {
        k = StepKind::h3_large;
    }
    chain.steps.push_back({k, v, w, 0.0});
    return chain;
}

namespace {

bool s3_step_ok(const ReductionStep& s) {
    switch (s.kind) {
        case StepKind::hutchings_balancing: return s.v > 2.0 * s.w || s.v > 2.0 * s.u;
        case StepKind::permutation: return true;
        case StepKind::s_balancing: return s.w < s.v && s.v <= 2.0 * s.w;
        case StepKind::s3_computer: return kS3MinFraction <= s.v && s.v <= s.w && s.w <= s.u;
        default: return false;
    }
}

bool h3_step_ok(const ReductionStep& s) {
    const double lo = std::min(s.v, s.w), hi = std::max(s.v, s.w);
    if (lo < kH3Ratio * hi) return false;
    switch (s.kind) {
        case StepKind::s_balancing: return s.w < s.v;
        case StepKind::h3_small: return s.v <= s.w && s.w < kH3SmallLimit;
        case StepKind::h3_computer: return s.v <= s.w && kH3ComputerFloor <= s.w && s.w <= kH3ComputerCeiling;
        case StepKind::h3_ray_plus_derivative: return s.v <= s.w && kH3ComputerCeiling <= s.w && s.w <= kH3RayCeiling;
        case StepKind::h3_large: return s.v <= s.w && s.w > kH3RayCeiling;
        default: return false;
    }
}

}  // namespace

bool chain_is_valid(const ReductionChain& c) {
    if (c.steps.empty() || !is_terminal(c.terminal())) return false;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const auto& s = c.steps[i];
        bool ok = c.space == Space::S3 ? s3_step_ok(s) : h3_step_ok(s);
        if (!ok) return false;
        if (s.kind == StepKind::hutchings_balancing && i != 0) return false;
        if (i + 1 == c.steps.size()) return is_terminal(s.kind);
        if (is_terminal(s.kind)) return false;
        const auto& n = c.steps[i + 1];
        if (s.kind == StepKind::permutation && !(n.v == s.v && n.w == s.u && n.u == s.w)) return false;
        if (s.kind == StepKind::s_balancing) {
            double p = (s.v + s.w) / 2.0;
            if (!(n.v == p && n.w == p && n.u == s.u)) return false;
        }
    }
    return false;
}

std::vector<CoverageSample> coverage_samples(Space s, long points, std::uint64_t seed) {
    if (points < 0) throw DomainError("sample count must be non-negative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<CoverageSample> out;
    if (s == Space::S3) {
        const double spread = 1.0 - 3.0 * kS3MinFraction;
        out.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 - 2.0 / 3.0});
        for (int i = 0; i < 3; ++i) {
            double f[3] = {kS3MinFraction, kS3MinFraction, kS3MinFraction};
            f[i] = 1.0 - 2.0 * kS3MinFraction;
            out.push_back({f[0], f[1], f[2]});
        }
        for (long i = 0; i < points; ++i) {
            double a = unit(rng), b = unit(rng);
            if (a > b) std::swap(a, b);
            double v = kS3MinFraction + spread * a;
            double w = kS3MinFraction + spread * (b - a);
            out.push_back({v, w, 1.0 - v - w});
        }
    } else {
        const double lo = std::log(1e-6), hi = std::log(1e6);
        for (double w : {1e-6, kH3ComputerFloor, kH3SmallLimit, kH3ComputerCeiling, kH3RayCeiling, 1e6}) {
            out.push_back({kH3Ratio * w, w, 0.0});
            out.push_back({w, kH3Ratio * w, 0.0});
            out.push_back({w, w, 0.0});
        }
        for (long i = 0; i < points; ++i) {
            double w = std::exp(lo + (hi - lo) * unit(rng));
            double ratio = kH3Ratio + (1.0 - kH3Ratio) * unit(rng);
            double v = ratio * w;
            if (unit(rng) < 0.5) std::swap(v, w);
            out.push_back({v, w, 0.0});
        }
    }
    return out;
}

CoverageReport validate_coverage(Space s, long points, std::uint64_t seed) {
    if (s == Space::R3) throw DomainError("coverage is defined for S3 and H3");
    CoverageReport rep;
    rep.space = s;
    for (const auto& p : coverage_samples(s, points, seed)) {
        ++rep.points;
        try {
            auto c = s == Space::S3 ? classify_coverage_s3(p.v, p.w, p.u) : classify_coverage_h3(p.v, p.w);
            if (chain_is_valid(c)) {
                ++rep.valid;
                continue;
            }
            rep.message = "invalid reduction chain";
        } catch (const std::exception& e) {
            rep.message = e.what();
        }
        if (!rep.first_bad) rep.first_bad = p;
    }
    return rep;
}

}  // namespace bubble
