#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/theorem.hpp"

namespace bubble {

// Stable process exit codes.
enum ExitCode : int { kExitProved = 0, kExitFailed = 1, kExitConfig = 2, kExitInternal = 3 };

// VMIN:VMAX:WMIN:WMAX:RES. RES points per axis, endpoints included; an empty
// range (RES = 0 or MIN > MAX) yields no points.
struct GridSpec {
    double v_min = 0.0, v_max = 0.0, w_min = 0.0, w_max = 0.0;
    long resolution = 0;
};
GridSpec parse_grid(std::string_view text);
GridSpec default_grid(Space s);
std::vector<double> grid_axis(double lo, double hi, long n);

// CSV with header v,w,F; rows run over v for each w in turn. Volumes are
// absolute in both spaces. F is left empty where the midpoint solve fails.
std::string grid_csv(Space s, const GridSpec& g);

struct RunConfig {
    Space space = Space::S3;
    TheoremOptions theorem;
    GridSpec grid;
    std::string out;
};

// Flat INI file with one section per space ([s3], [h3]); keys: mode, claims,
// delta, precision_bits, jobs, coverage_points, grid. Values found in the
// section for cfg.space replace the ones in cfg.
void apply_config_file(const std::string& path, RunConfig& cfg);

// Output path for a file: BUBBLE_CERT_DIR, when set, replaces the directory.
std::string resolve_output(const std::string& out, const std::string& default_name);

std::vector<std::string> split_list(std::string_view text);

// Entry point of the bubble binary.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bubble
