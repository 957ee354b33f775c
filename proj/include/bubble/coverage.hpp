#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/geometry.hpp"

namespace bubble {

enum class StepKind {
    hutchings_balancing,
    permutation,
    s_balancing,
    s3_computer,
    h3_computer,
    h3_ray_plus_derivative,
    h3_small,
    h3_large,
};
std::string_view to_string(StepKind k) noexcept;
bool is_terminal(StepKind k) noexcept;

// Thresholds of the primitive regions.
inline constexpr double kS3MinFraction = 0.1;
inline constexpr double kH3Ratio = 0.85;
inline constexpr double kH3SmallLimit = 0.002743;
inline constexpr double kH3ComputerFloor = 0.00274;
inline constexpr double kH3ComputerCeiling = 150.0;
inline constexpr double kH3RayCeiling = 300.0;

// The point (v, w, u) a step applies to. S^3 coordinates are fractions of
// |S^3|; H^3 leaves u at zero.
struct ReductionStep {
    StepKind kind;
    double v = 0.0, w = 0.0, u = 0.0;
};

// A finite chain ending in a primitive region (or in connectedness directly
// through Hutchings balancing, which may only open a chain).
struct ReductionChain {
    Space space = Space::S3;
    std::vector<ReductionStep> steps;
    StepKind terminal() const { return steps.back().kind; }
};

// S^3: fractions v + w + u = 1, each at least one tenth. H^3: volumes with
// min(v, w) >= 0.85 max(v, w). Raises Uncovered when no chain exists.
ReductionChain classify_coverage_s3(double v, double w, double u);
ReductionChain classify_coverage_h3(double v, double w);

// Re-checks every step of a chain: each step's hypothesis holds at its point,
// each move lands on the next step's point, and the last step is terminal.
bool chain_is_valid(const ReductionChain& c);

inline constexpr long kCoveragePoints = 10000;
inline constexpr std::uint64_t kCoverageSeed = 20240917;

struct CoverageSample {
    double v = 0.0, w = 0.0, u = 0.0;
};

// Pseudo-random points of the hypothesis region (mt19937_64 with the given
// seed) plus its corners. S^3: fractions at least one tenth; H^3: volumes
// between 1e-6 and 1e6 with ratio at least 0.85.
std::vector<CoverageSample> coverage_samples(Space s, long points, std::uint64_t seed);

struct CoverageReport {
    Space space = Space::S3;
    long points = 0;
    long valid = 0;
    std::optional<CoverageSample> first_bad;
    std::string message;
    bool ok() const { return !first_bad.has_value(); }
};
CoverageReport validate_coverage(Space s, long points, std::uint64_t seed);

}  // namespace bubble
