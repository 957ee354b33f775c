#include "bubble/theorem.hpp"

#include <algorithm>

#include "bubble/errors.hpp"

namespace bubble {

std::string_view to_string(ProveMode m) noexcept {
    switch (m) {
        case ProveMode::full: return "full";
        case ProveMode::spot: return "spot";
        case ProveMode::ray: return "ray";
    }
    return "spot";
}

ProveMode parse_mode(std::string_view s) {
    if (s == "full") return ProveMode::full;
    if (s == "spot") return ProveMode::spot;
    if (s == "ray") return ProveMode::ray;
    throw ConfigError("unknown mode '" + std::string(s) + "' (expected full, spot or ray)");
}

std::vector<std::string> default_spot_claims() { return {"5.9", "5.20"}; }

std::vector<std::string> selected_claims(const TheoremOptions& opt) {
    if (opt.space != Space::H3) return {};
    std::vector<std::string> out;
    switch (opt.mode) {
        case ProveMode::full:
            for (const auto& c : h3_claims()) out.push_back(c.id);
            break;
        case ProveMode::ray:
            for (const auto& c : h3_claims()) {
                if (c.ray) out.push_back(c.id);
            }
            break;
        case ProveMode::spot:
            out = opt.claims.empty() ? default_spot_claims() : opt.claims;
            break;
    }
    for (const auto& id : out) find_claim(id);
    return out;
}

SlackConfig s3_smoke_slack() {
    SlackConfig s;
    s.delta = 0x1p-20;
    return s;
}

namespace {

Certificate coverage_leaf(Space s, long points, std::uint64_t seed) {
    Certificate c;
    c.space = s;
    c.method = Method::reduction;
    c.label = std::string(kReductionCoverage);
    c.region.kind = RegionKind::none;
    c.region.coords = {static_cast<double>(points), static_cast<double>(seed)};
    auto rep = validate_coverage(s, points, seed);
    c.proved = rep.ok();
    if (!c.proved) c.failure = rep.message;
    return c;
}

}  // namespace

CertificateFile prove_theorem(const TheoremOptions& opt) {
    opt.slack.validate();
    if (opt.jobs < 1) throw ConfigError("jobs must be at least 1");
    if (opt.coverage_points < 0) throw ConfigError("coverage point count must be non-negative");
    if (opt.coverage_seed >= (std::uint64_t{1} << 53)) throw ConfigError("coverage seed must stay below 2^53");

    CertificateFile file;
    file.slack = opt.slack;
    Certificate& root = file.root;
    root.space = opt.space;
    root.method = Method::composite;
    root.region.kind = RegionKind::none;

    if (opt.space == Space::S3) {
        if (opt.mode == ProveMode::ray) throw ConfigError("ray mode applies to H3 only");
        S3ProofOptions s;
        s.slack = opt.slack;
        s.band = opt.s3_band;
        s.jobs = opt.jobs;
        root.label = "s3";
        root.children.push_back(verify_rectangle_s3(s3_domain_rect(), s));
        root.children.push_back(verify_triangle_s3(s3_domain_triangle(), s));
    } else if (opt.space == Space::H3) {
        H3ProofOptions h;
        h.slack = opt.slack;
        h.jobs = opt.jobs;
        root.label = "h3 " + std::string(to_string(opt.mode));
        for (const auto& id : selected_claims(opt)) root.children.push_back(sweep_band_h3(find_claim(id), h));
    } else {
        throw ConfigError("prove supports s3 and h3");
    }
    root.children.push_back(coverage_leaf(opt.space, opt.coverage_points, opt.coverage_seed));
    root.proved = std::all_of(root.children.begin(), root.children.end(), [](const Certificate& c) { return c.proved; });
    if (!root.proved) root.failure = "failed at " + failure_location(root);
    return file;
}

}  // namespace bubble
