#pragma once

#include <string>
#include <vector>

#include "bubble/hutchings.hpp"

namespace bubble {

// Sampled check of one analytic inequality. margins[i] is the slack of the
// inequality at the i-th sample (or of one of several inequalities checked
// there); pass holds iff every margin is strictly positive.
struct LemmaCheckReport {
    std::string lemma_id;
    std::string statement;
    std::vector<std::vector<double>> sample_points;
    std::vector<double> margins;
    bool pass = false;
    std::vector<LemmaCheckReport> parts;

    void add(std::vector<double> point, double margin);
    // Sets pass from the margins and the parts.
    void finish();
    double min_margin() const;
};

// n >= 2 points spaced evenly in log between lo and hi, both included.
std::vector<double> log_spaced(double lo, double hi, int n);
std::vector<double> lin_spaced(double lo, double hi, int n);

// Sampling floor for every default grid.
inline constexpr int kDefaultSamples = 50;
// Endpoints of open ranges are moved inward by this much.
inline constexpr double kOpenShift = 1e-9;

// Small-volume constants.
inline constexpr double kHmrrConstant = 2.02676;
inline constexpr double kSmallBallRadius = 0.1547;
inline constexpr double kDistortionBound = 1.003994;
inline constexpr double kS3SmallBallRadius = 0.1546;
inline constexpr double kS3SmallLimit = 0.002738;

// Large-volume limits of the equal double bubble: extra volume, the area
// lost per outer cap, and the area of the limiting separating surface.
double limit_extra_volume();
double limit_cap_area();
double limit_interface_area();

// f(w) = 2^(1/3) (1 - w)^(2/3) + w^(2/3) + 1 and the constant it must beat.
Enclosure hmrr_left_side(const Enclosure& w);
Enclosure hmrr_right_side();

// (2 pi/3 + pi sqrt 3 / 2) (2 r / (2 + sqrt 3))^3: the volume bound below
// which an R^3 minimizer fits in a ball of radius r.
Enclosure small_ball_volume(const Enclosure& r);

// A'(x) for an H^3 sphere, as 2 + 2 pi / denominator. The exact
// denominator x + 2 pi r + (pi/2) e^(-2r) - pi/2 is bracketed by solving for
// r on both sides of x.
struct CurvatureDenominator {
    double lo = 0.0;
    double hi = 0.0;
};
CurvatureDenominator curvature_denominator(double x);
double sphere_curvature_h3(double x);

// Radius bracket for an H^3 sphere of volume v.
struct RadiusBracket {
    double lo = 0.0;
    double hi = 0.0;
};
RadiusBracket radius_bracket_h3(double v);

// The asymptotic area 2v + 2 pi ln v - 2 pi (1 + ln(pi/2)).
double single_area_asymptote(double v);

// A(v, w) against A(v + v_inf) + A(w + v_inf) - 2 a_inf + c_inf.
double limiting_area_discrepancy(double v, double w);

// Central difference with Richardson consistency: the step starts at
// max(1e-4, 1e-6 scale) and grows tenfold until the estimates at h and h/2
// agree to three significant digits.
struct FiniteDifference {
    double value = 0.0;
    double step = 0.0;
    double coarse = 0.0;
    double fine = 0.0;
    bool consistent = false;
};
FiniteDifference ray_derivative(double psi, double w);
FiniteDifference partial_v(double v, double w);

// Interface data of an H^3 double bubble, with the completion volumes of the
// two outer caps (sphere volume minus region volume).
struct InterfaceSample {
    double v = 0.0;
    double w = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double v_extra = 0.0;
    double w_extra = 0.0;
};
InterfaceSample interface_sample(const SdbCurvaturesH3& k);

std::vector<double> default_hmrr_grid();
std::vector<double> default_radius_volumes();
std::vector<double> default_aprime_points();
std::vector<SdbCurvaturesH3> default_interface_configs();
std::vector<double> default_limit_schedule();
std::vector<double> default_ray_points();
std::vector<VolumePair> default_partial_v_points();

LemmaCheckReport check_hmrr_strong(const std::vector<double>& grid);
LemmaCheckReport check_small_volume_constants();
LemmaCheckReport check_radius_asymptote(const std::vector<double>& vs);
LemmaCheckReport check_aprime_bounds(const std::vector<double>& xs);
LemmaCheckReport check_interface_limits(const std::vector<SdbCurvaturesH3>& ks);
LemmaCheckReport check_limiting_area(const std::vector<double>& ws);
LemmaCheckReport check_ray_monotonicity(const std::vector<double>& ws, const std::vector<VolumePair>& dv_points);
// points: samples per variable range.
LemmaCheckReport check_algebraic_chain(int points = kDefaultSamples);

// The inequality bounding the three curvature terms along v = lambda w by
// the two completed-cap terms, as printed. Not part of the default suite: it
// fails for w between 300 and roughly 700.
double crit_line_margin(double w);
LemmaCheckReport check_crit_line_inequality(const std::vector<double>& ws);

// Lemma suite keyed by id. The defaults exclude "crit-line".
std::vector<std::string> lemma_ids();
std::vector<std::string> default_lemma_ids();
LemmaCheckReport run_lemma(const std::string& id);
// Runs the selection concurrently; results come back in selection order.
std::vector<LemmaCheckReport> run_lemmas(const std::vector<std::string>& ids);

std::string reports_to_json(const std::vector<LemmaCheckReport>& reports);
std::string reports_table(const std::vector<LemmaCheckReport>& reports);

}  // namespace bubble
