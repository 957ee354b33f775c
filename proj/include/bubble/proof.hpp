#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bubble/certificate.hpp"
#include "bubble/hutchings.hpp"

namespace bubble {

inline constexpr int kDefaultDepthBudget = 30;

// Worker count actually used for a --jobs request: capped at the hardware
// concurrency. Results do not depend on it.
int effective_jobs(int jobs);

// Band width for the S^3 single-sphere and double-bubble solves, in volume units.
inline constexpr double kDefaultS3Band = 0x1p-16;

struct S3ProofOptions {
    SlackConfig slack;
    double band = kDefaultS3Band;
    int depth_budget = kDefaultDepthBudget;
    int jobs = 1;
};

// S^3 domains in fractions of |S^3|.
struct Triangle {
    double x1 = 0.0, y1 = 0.0, x3 = 0.0, y3 = 0.0;
};

// Triangle with legs corner (1 - 2 y_top, y_bottom) whose tips lie on the
// line w = u, so x1 = 1 - 2 y3 and x3 = 1 - 2 y1.
Triangle triangle_under_line(double y_bottom, double y_top);

// The computer domain: the square between one tenth and one third, and the
// triangle above it up to w = 0.45 with hypotenuse on w = u.
Rect s3_domain_rect();
Triangle s3_domain_triangle();

Certificate verify_rectangle_s3(const Rect& r, const S3ProofOptions& opt);
Certificate verify_triangle_s3(const Triangle& t, const S3ProofOptions& opt);

// One row of the H^3 parameter table.
struct RegionClaim {
    std::string id;
    double v_min = 0.0;
    double w_min = 0.0;
    double w_max = 0.0;
    double box_height = 0.0;
    double box_width = 0.0;
    double k1_start = 0.0;
    double k2_start = 0.0;
    double adj_main = 0.9999;
    double adj_second = 0.9995;
    // Sweep only the boxes meeting v = 0.85 w.
    bool ray = false;

    void validate() const;
};

const std::vector<RegionClaim>& h3_claims();
const RegionClaim& find_claim(const std::string& id);

struct H3ProofOptions {
    SlackConfig slack;
    int jobs = 1;
    // Band width for the single-sphere area table; zero picks half the box width.
    double band = 0.0;
};

// Box (row, column) of a claim's grid.
struct BoxIndex {
    long row = 0;
    long col = 0;
};

long claim_rows(const RegionClaim& c);
// Column range [first, last] for a row.
std::pair<long, long> claim_columns(const RegionClaim& c, long row);
Rect claim_box(const RegionClaim& c, const BoxIndex& b);

Certificate sweep_band_h3(const RegionClaim& claim, const H3ProofOptions& opt);

// Certifies one box with a fresh curvature solve.
Certificate check_claim_box(const RegionClaim& claim, const BoxIndex& b, const H3ProofOptions& opt);

}  // namespace bubble
