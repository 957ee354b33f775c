#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/geometry.hpp"

namespace bubble {

inline constexpr std::string_view kEngineVersion = "1.0.0";

enum class Method { direct_hit, split4, split3, sweep_row, reduction, composite };
std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view s);

// rect: v_lo, w_lo, v_hi, w_hi
// triangle: x1, y1, x3, y3 (legs corner (x1, y1), tips (x1, y3) and (x3, y1))
// band: v_min, w_min, w_max, box_height, box_width
enum class RegionKind { rect, triangle, band, none };
std::string_view to_string(RegionKind k) noexcept;
RegionKind parse_region_kind(std::string_view s);

struct Region {
    RegionKind kind = RegionKind::none;
    std::vector<double> coords;
};

// Reduction leaves cite one of these facts.
inline constexpr std::string_view kReductionBalancing = "hutchings_balancing";
inline constexpr std::string_view kReductionZeroMeasure = "zero_measure";
// Coverage of the theorem's hypothesis region by reduction chains, re-run by
// the verifier from the region coordinates (sample count, seed).
inline constexpr std::string_view kReductionCoverage = "coverage_grid";

struct Certificate {
    Space space = Space::S3;
    Region region;
    Method method = Method::direct_hit;
    double g_min = std::numeric_limits<double>::quiet_NaN();
    double h_max = std::numeric_limits<double>::quiet_NaN();
    std::vector<Certificate> children;
    int depth = 0;
    bool proved = false;
    std::string label;
    std::string failure;
};

// Root-level header: slack and engine version apply to the whole tree.
struct CertificateFile {
    SlackConfig slack;
    std::string engine_version{kEngineVersion};
    Certificate root;
};

// Shortest decimal string that reads back to the same double.
std::string exact_decimal(double x);
double parse_decimal(std::string_view s);

std::string to_json(const CertificateFile& f);
CertificateFile from_json(std::string_view text);

void write_certificate(const CertificateFile& f, const std::string& path);
CertificateFile read_certificate(const std::string& path);

struct VerifyResult {
    bool ok = true;
    std::string where;
    std::string message;
};

// Independent re-check from stored numbers: leaf inequalities, reduction
// conditions, exact tiling of split children, and outcome consistency.
VerifyResult verify_certificate(const CertificateFile& f);

// First failed leaf in document order, as a path of child indices; "/" is
// the root and "" means proved.
std::string failure_location(const Certificate& c);

std::size_t leaf_count(const Certificate& c);
int max_depth(const Certificate& c);

}  // namespace bubble
