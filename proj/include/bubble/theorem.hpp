#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/certificate.hpp"
#include "bubble/coverage.hpp"
#include "bubble/proof.hpp"

namespace bubble {

// full: every H^3 claim; spot: the selected claims; ray: only the ray claim.
// In S^3 there is one proof and full and spot run the same thing.
enum class ProveMode { full, spot, ray };
std::string_view to_string(ProveMode m) noexcept;
ProveMode parse_mode(std::string_view s);

struct TheoremOptions {
    Space space = Space::S3;
    ProveMode mode = ProveMode::spot;
    // H^3 spot selection; empty picks default_spot_claims().
    std::vector<std::string> claims;
    SlackConfig slack;
    int jobs = 1;
    long coverage_points = kCoveragePoints;
    std::uint64_t coverage_seed = kCoverageSeed;
    double s3_band = kDefaultS3Band;
};

std::vector<std::string> default_spot_claims();
std::vector<std::string> selected_claims(const TheoremOptions& opt);

// Coarser slack for a quick S^3 run.
SlackConfig s3_smoke_slack();

// Composite certificate: the S^3 rectangle and triangle proofs, or the
// selected H^3 claim sweeps, followed by a coverage leaf for the hypothesis
// region.
CertificateFile prove_theorem(const TheoremOptions& opt);

}  // namespace bubble
