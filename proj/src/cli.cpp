#include "bubble/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "CLI11.hpp"
#include "bubble/asymptotics.hpp"
#include "bubble/errors.hpp"

namespace bubble {

namespace {

double parse_number(std::string_view s, const char* what) {
    try {
        std::size_t used = 0;
        std::string str(s);
        double x = std::stod(str, &used);
        if (used != str.size()) throw std::invalid_argument(what);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(std::string("bad ") + what + ": '" + std::string(s) + "'");
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::filesystem::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path);
    f << text;
    if (!f) throw ConfigError("cannot write " + path);
}

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
    return s;
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

GridSpec parse_grid(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 5) throw ConfigError("grid must be VMIN:VMAX:WMIN:WMAX:RES");
    GridSpec g;
    g.v_min = parse_number(parts[0], "grid VMIN");
    g.v_max = parse_number(parts[1], "grid VMAX");
    g.w_min = parse_number(parts[2], "grid WMIN");
    g.w_max = parse_number(parts[3], "grid WMAX");
    double res = parse_number(parts[4], "grid RES");
    if (!(res >= 0.0) || res != std::floor(res) || res > 1e5) throw ConfigError("grid RES must be a whole number");
    g.resolution = static_cast<long>(res);
    for (double x : {g.v_min, g.v_max, g.w_min, g.w_max}) {
        if (!std::isfinite(x)) throw ConfigError("grid bounds must be finite");
    }
    return g;
}

GridSpec default_grid(Space s) {
    if (s == Space::S3) {
        double t = s3_total_volume();
        return {0.01 * t, 0.49 * t, 0.01 * t, 0.49 * t, 100};
    }
    return {0.1, 20.0, 0.1, 20.0, 100};
}

std::vector<double> grid_axis(double lo, double hi, long n) {
    std::vector<double> out;
    if (n <= 0 || lo > hi) return out;
    if (n == 1 || lo == hi) return {lo};
    for (long i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    out.back() = hi;
    return out;
}

std::string grid_csv(Space s, const GridSpec& g) {
    if (s == Space::R3) throw ConfigError("grid supports s3 and h3");
    std::string csv = "v,w,F\n";
    auto vs = grid_axis(g.v_min, g.v_max, g.resolution);
    auto ws = grid_axis(g.w_min, g.w_max, g.resolution);
    if (vs.empty() || ws.empty()) return csv;
    for (double w : ws) {
        for (double v : vs) {
            std::string f;
            try {
                if (v > 0.0 && w > 0.0) {
                    double x = hutchings_point(s, {v, w});
                    if (std::isfinite(x)) f = exact_decimal(x);
                }
            } catch (const std::exception&) {
            }
            csv += exact_decimal(v) + "," + exact_decimal(w) + "," + f + "\n";
        }
    }
    return csv;
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path, tree);
    } catch (const std::exception& e) {
        throw ConfigError("cannot read config " + path + ": " + e.what());
    }
    auto section = tree.get_child_optional(std::string(cfg.space == Space::S3 ? "s3" : "h3"));
    if (!section) return;
    for (const auto& [key, node] : *section) {
        std::string val = node.get_value<std::string>();
        if (key == "mode") {
            cfg.theorem.mode = parse_mode(val);
        } else if (key == "claims") {
            cfg.theorem.claims = split_list(val);
        } else if (key == "delta") {
            cfg.theorem.slack.delta = parse_number(val, "delta");
        } else if (key == "precision_bits") {
            cfg.theorem.slack.precision_bits = static_cast<int>(parse_number(val, "precision_bits"));
        } else if (key == "jobs") {
            cfg.theorem.jobs = static_cast<int>(parse_number(val, "jobs"));
        } else if (key == "coverage_points") {
            cfg.theorem.coverage_points = static_cast<long>(parse_number(val, "coverage_points"));
        } else if (key == "grid") {
            cfg.grid = parse_grid(val);
        } else {
            throw ConfigError("unknown config key '" + key + "' in " + path);
        }
    }
}

std::string resolve_output(const std::string& out, const std::string& default_name) {
    const char* dir = std::getenv("BUBBLE_CERT_DIR");
    if (dir != nullptr && *dir != '\0') {
        std::string name = out.empty() ? default_name : std::filesystem::path(out).filename().string();
        return (std::filesystem::path(dir) / name).string();
    }
    return out.empty() ? default_name : out;
}

namespace {

struct Flags {
    std::string space = "s3";
    std::string mode;
    std::string claims;
    std::string spot;
    bool full = false;
    bool smoke = false;
    std::optional<double> delta;
    std::optional<int> precision_bits;
    std::optional<int> jobs;
    std::optional<long> coverage_points;
    std::string grid;
    std::string out;
    std::string config;
    std::string select;
    std::string cert_path;
};

RunConfig build_config(const Flags& f) {
    RunConfig cfg;
    cfg.space = parse_space(f.space);
    if (cfg.space == Space::R3) throw ConfigError("space must be s3 or h3");
    cfg.theorem.space = cfg.space;
    cfg.grid = default_grid(cfg.space);
    if (f.smoke) cfg.theorem.slack = s3_smoke_slack();
    if (!f.config.empty()) apply_config_file(f.config, cfg);
    if (!f.mode.empty()) cfg.theorem.mode = parse_mode(f.mode);
    if (f.full) cfg.theorem.mode = ProveMode::full;
    if (!f.claims.empty()) cfg.theorem.claims = split_list(f.claims);
    if (!f.spot.empty()) {
        cfg.theorem.mode = ProveMode::spot;
        cfg.theorem.claims = split_list(f.spot);
    }
    if (f.delta) cfg.theorem.slack.delta = *f.delta;
    if (f.precision_bits) cfg.theorem.slack.precision_bits = *f.precision_bits;
    if (f.jobs) cfg.theorem.jobs = *f.jobs;
    if (f.coverage_points) cfg.theorem.coverage_points = *f.coverage_points;
    if (!f.grid.empty()) cfg.grid = parse_grid(f.grid);
    cfg.out = f.out;
    cfg.theorem.slack.validate();
    if (cfg.theorem.jobs < 1) throw ConfigError("jobs must be at least 1");
    return cfg;
}

int cmd_prove(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& opt = cfg.theorem;
    auto claims = selected_claims(opt);
    if (cfg.space == Space::H3 && opt.mode == ProveMode::full) {
        err << "warning: --full sweeps every H3 claim, about 9 million boxes; expect several minutes "
               "with many jobs and far longer on one core\n";
    }
    std::string space = cfg.space == Space::S3 ? "s3" : "h3";
    out << "space " << space << ", mode " << to_string(opt.mode);
    if (!claims.empty()) out << ", claims " << join(claims);
    out << ", delta " << exact_decimal(opt.slack.delta) << ", jobs " << opt.jobs << "\n";

    auto t0 = std::chrono::steady_clock::now();
    CertificateFile file = prove_theorem(opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::string path = resolve_output(cfg.out, "certificate_" + space + ".json");
    write_certificate(file, path);
    out << "certificate " << path << " (" << leaf_count(file.root) << " leaves, depth " << max_depth(file.root)
        << ", " << std::fixed << std::setprecision(1) << secs << " s)\n";
    out.unsetf(std::ios::fixed);
    if (file.root.proved) {
        out << "proved\n";
        return kExitProved;
    }
    std::string where = failure_location(file.root);
    const Certificate* node = &file.root;
    std::string failure = node->failure;
    std::istringstream parts(where);
    std::string tok;
    while (std::getline(parts, tok, '/')) {
        if (tok.empty()) continue;
        node = &node->children.at(std::stoul(tok));
        if (!node->failure.empty()) failure = node->failure;
    }
    out << "failed at " << where << ": " << failure << "\n";
    return kExitFailed;
}

int cmd_grid(const RunConfig& cfg, std::ostream& out) {
    std::string space = cfg.space == Space::S3 ? "s3" : "h3";
    std::string path = resolve_output(cfg.out, "grid_" + space + ".csv");
    write_file(path, grid_csv(cfg.space, cfg.grid));
    out << "grid " << path << "\n";
    return kExitProved;
}

int cmd_lemmas(const Flags& f, std::ostream& out) {
    std::vector<std::string> ids = f.select.empty() ? default_lemma_ids() : split_list(f.select);
    if (f.select == "all") ids = lemma_ids();
    auto reports = run_lemmas(ids);
    out << reports_table(reports);
    const char* dir = std::getenv("BUBBLE_CERT_DIR");
    if (!f.out.empty() || (dir != nullptr && *dir != '\0')) {
        std::string path = resolve_output(f.out, "lemma_report.json");
        write_file(path, reports_to_json(reports));
        out << "report " << path << "\n";
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass;
    out << (ok ? "all pass" : "some checks failed") << "\n";
    return ok ? kExitProved : kExitFailed;
}

int cmd_verify(const std::string& path, std::ostream& out) {
    CertificateFile file = read_certificate(path);
    VerifyResult r = verify_certificate(file);
    if (!r.ok) {
        out << "rejected at " << r.where << ": " << r.message << "\n";
        return kExitFailed;
    }
    if (!file.root.proved) {
        out << "consistent, but the certificate records a failure at " << failure_location(file.root) << "\n";
        return kExitFailed;
    }
    out << "verified (" << leaf_count(file.root) << " leaves)\n";
    return kExitProved;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified checks of the double bubble inequalities in S3 and H3"};
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&f](CLI::App* c) {
        c->add_option("--space", f.space, "s3 or h3")->capture_default_str();
        c->add_option("--out", f.out, "output file");
        c->add_option("--config", f.config, "INI file with [s3] and [h3] sections");
    };

    CLI::App* prove = app.add_subcommand("prove", "run the computer proof and write a certificate");
    add_common(prove);
    prove->add_option("--mode", f.mode, "full, spot or ray");
    prove->add_option("--claims", f.claims, "comma-separated claim ids");
    prove->add_option("--spot", f.spot, "spot mode with these claim ids");
    prove->add_flag("--full", f.full, "every H3 claim");
    prove->add_flag("--smoke", f.smoke, "coarser slack for a quick S3 run");
    prove->add_option("--delta", f.delta, "slack padding");
    prove->add_option("--precision-bits", f.precision_bits, "working precision for transcendental functions");
    prove->add_option("--jobs", f.jobs, "worker threads");
    prove->add_option("--coverage-points", f.coverage_points, "random points for the coverage check");

    CLI::App* grid = app.add_subcommand("grid", "write F(v, w) over a grid as CSV");
    add_common(grid);
    grid->add_option("--grid", f.grid, "VMIN:VMAX:WMIN:WMAX:RES");

    CLI::App* lemmas = app.add_subcommand("lemmas", "run the sampled checks of the analytic bounds");
    lemmas->add_option("--select", f.select, "comma-separated ids, or 'all'");
    lemmas->add_option("--out", f.out, "JSON report");

    CLI::App* cert = app.add_subcommand("cert", "certificate tools");
    cert->require_subcommand(1);
    CLI::App* verify = cert->add_subcommand("verify", "re-check a certificate");
    verify->add_option("path", f.cert_path, "certificate file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitProved;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitProved;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (*prove) return cmd_prove(build_config(f), out, err);
        if (*grid) return cmd_grid(build_config(f), out);
        if (*lemmas) return cmd_lemmas(f, out);
        if (*verify) return cmd_verify(f.cert_path, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

}  // namespace bubble
