#include "bubble/certificate.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bubble/coverage.hpp"
#include "bubble/errors.hpp"

namespace bubble {

using nlohmann::json;

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::direct_hit: return "direct_hit";
        case Method::split4: return "split4";
        case Method::split3: return "split3";
        case Method::sweep_row: return "sweep_row";
        case Method::reduction: return "reduction";
        case Method::composite: return "composite";
    }
    return "composite";
}

Method parse_method(std::string_view s) {
    for (Method m : {Method::direct_hit, Method::split4, Method::split3, Method::sweep_row, Method::reduction,
                     Method::composite}) {
        if (to_string(m) == s) return m;
    }
    throw ConfigError("unknown method '" + std::string(s) + "'");
}

std::string_view to_string(RegionKind k) noexcept {
    switch (k) {
        case RegionKind::rect: return "rect";
        case RegionKind::triangle: return "triangle";
        case RegionKind::band: return "band";
        case RegionKind::none: return "none";
    }
    return "none";
}

RegionKind parse_region_kind(std::string_view s) {
    for (RegionKind k : {RegionKind::rect, RegionKind::triangle, RegionKind::band, RegionKind::none}) {
        if (to_string(k) == s) return k;
    }
    throw ConfigError("unknown region kind '" + std::string(s) + "'");
}

std::string exact_decimal(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_decimal(std::string_view s) {
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    double x = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ConfigError("malformed number '" + std::string(s) + "'");
    }
    return x;
}

namespace {

json node_to_json(const Certificate& c) {
    json j;
    j["space"] = std::string(to_string(c.space));
    json region;
    region["kind"] = std::string(to_string(c.region.kind));
    json coords = json::array();
    for (double x : c.region.coords) coords.push_back(exact_decimal(x));
    region["coords"] = coords;
    j["region"] = region;
    j["method"] = std::string(to_string(c.method));
    if (!std::isnan(c.g_min)) j["g_min"] = exact_decimal(c.g_min);
    if (!std::isnan(c.h_max)) j["h_max"] = exact_decimal(c.h_max);
    j["depth"] = c.depth;
    j["outcome"] = c.proved ? "proved" : "failed";
    if (!c.label.empty()) j["label"] = c.label;
    if (!c.failure.empty()) j["failure"] = c.failure;
    if (!c.children.empty()) {
        json kids = json::array();
        for (const auto& k : c.children) kids.push_back(node_to_json(k));
        j["children"] = std::move(kids);
    }
    return j;
}

Certificate node_from_json(const json& j) {
    Certificate c;
    c.space = parse_space(j.at("space").get<std::string>());
    c.region.kind = parse_region_kind(j.at("region").at("kind").get<std::string>());
    for (const auto& x : j.at("region").at("coords")) c.region.coords.push_back(parse_decimal(x.get<std::string>()));
    c.method = parse_method(j.at("method").get<std::string>());
    if (j.contains("g_min")) c.g_min = parse_decimal(j["g_min"].get<std::string>());
    if (j.contains("h_max")) c.h_max = parse_decimal(j["h_max"].get<std::string>());
    c.depth = j.at("depth").get<int>();
    std::string outcome = j.at("outcome").get<std::string>();
    if (outcome != "proved" && outcome != "failed") throw ConfigError("unknown outcome '" + outcome + "'");
    c.proved = outcome == "proved";
    if (j.contains("label")) c.label = j["label"].get<std::string>();
    if (j.contains("failure")) c.failure = j["failure"].get<std::string>();
    if (j.contains("children")) {
        for (const auto& k : j["children"]) c.children.push_back(node_from_json(k));
    }
    return c;
}

}  // namespace

std::string to_json(const CertificateFile& f) {
    json j;
    j["engine_version"] = f.engine_version;
    j["slack"] = {{"delta", exact_decimal(f.slack.delta)}, {"precision_bits", f.slack.precision_bits}};
    j["certificate"] = node_to_json(f.root);
    return j.dump() + "\n";
}

CertificateFile from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        CertificateFile f;
        f.engine_version = j.at("engine_version").get<std::string>();
        f.slack.delta = parse_decimal(j.at("slack").at("delta").get<std::string>());
        f.slack.precision_bits = j.at("slack").at("precision_bits").get<int>();
        f.root = node_from_json(j.at("certificate"));
        return f;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("certificate schema mismatch: ") + e.what());
    }
}

void write_certificate(const CertificateFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << to_json(f);
    if (!out) throw ConfigError("write failed for " + path);
}

CertificateFile read_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

namespace {

struct Checker {
    VerifyResult result;

    bool fail(const std::string& where, const std::string& msg) {
        if (result.ok) {
            result.ok = false;
            result.where = where;
            result.message = msg;
        }
        return false;
    }

    static bool is_rect(const Certificate& c) { return c.region.kind == RegionKind::rect && c.region.coords.size() == 4; }
    static bool is_triangle(const Certificate& c) {
        return c.region.kind == RegionKind::triangle && c.region.coords.size() == 4;
    }
    static bool same_rect(const Certificate& c, double a, double b, double x, double y) {
        const auto& r = c.region.coords;
        return is_rect(c) && r[0] == a && r[1] == b && r[2] == x && r[3] == y;
    }
    static bool same_triangle(const Certificate& c, double x1, double y1, double x3, double y3) {
        const auto& r = c.region.coords;
        return is_triangle(c) && r[0] == x1 && r[1] == y1 && r[2] == x3 && r[3] == y3;
    }
    static bool on_line(double x, double y) { return x == 1.0 - 2.0 * y; }

    bool check(const Certificate& c, const std::string& where) {
        if (c.region.kind == RegionKind::rect || c.region.kind == RegionKind::triangle) {
            if (c.region.coords.size() != 4) return fail(where, "region needs four coordinates");
        }
        if (is_triangle(c) && c.space == Space::S3) {
            const auto& t = c.region.coords;
            if (!on_line(t[0], t[3]) || !on_line(t[2], t[1])) return fail(where, "triangle tips off the line w = u");
        }
        bool all_children = true;
        for (std::size_t i = 0; i < c.children.size(); ++i) {
            if (!check(c.children[i], where + "/" + std::to_string(i))) return false;
            all_children = all_children && c.children[i].proved;
        }
        switch (c.method) {
            case Method::direct_hit:
                if (!c.children.empty()) return fail(where, "direct hit with children");
                if (!c.proved) return !c.failure.empty() || fail(where, "failed leaf without a reason");
                if (std::isnan(c.g_min) || std::isnan(c.h_max)) return fail(where, "direct hit without bounds");
                if (!(c.g_min > c.h_max)) return fail(where, "g_min does not exceed h_max");
                return true;
            case Method::reduction:
                if (!c.proved) return true;
                return check_reduction(c, where);
            case Method::split4:
                if (!c.proved) return true;
                if (!all_children) return fail(where, "proved split with an unproved child");
                return check_split4(c, where);
            case Method::split3:
                if (!c.proved) return true;
                if (!all_children) return fail(where, "proved split with an unproved child");
                return check_split3(c, where);
            case Method::sweep_row:
                if (!c.proved) return true;
                if (!all_children) return fail(where, "proved row with an unproved box");
                return check_row(c, where);
            case Method::composite:
                if (!c.proved) return true;
                if (c.children.empty()) return fail(where, "proved composite without children");
                if (!all_children) return fail(where, "proved composite with an unproved child");
                if (c.region.kind == RegionKind::band) return check_band(c, where);
                return true;
        }
        return true;
    }

    bool check_reduction(const Certificate& c, const std::string& where) {
        const auto& r = c.region.coords;
        if (c.label == kReductionBalancing) {
            // Every point of the region has v > w.
            if (is_rect(c) && r[0] > r[3]) return true;
            if (is_triangle(c) && r[0] > r[3]) return true;
            return fail(where, "balancing reduction on a region that meets v <= w");
        }
        if (c.label == kReductionZeroMeasure) {
            if (is_rect(c) && (r[0] == r[2] || r[1] == r[3])) return true;
            if (is_triangle(c) && (r[0] == r[2] || r[1] == r[3])) return true;
            return fail(where, "zero-measure reduction on a region with interior");
        }
        if (c.label == kReductionCoverage) {
            if (c.region.kind != RegionKind::none || r.size() != 2) return fail(where, "coverage needs (points, seed)");
            if (!(r[0] >= 0.0 && r[1] >= 0.0 && r[0] == std::floor(r[0]) && r[1] == std::floor(r[1]) &&
                  r[1] < 0x1p53)) {
                return fail(where, "coverage parameters must be whole numbers");
            }
            auto rep = validate_coverage(c.space, static_cast<long>(r[0]), static_cast<std::uint64_t>(r[1]));
            if (!rep.ok()) return fail(where, "coverage point without a reduction chain: " + rep.message);
            return true;
        }
        return fail(where, "unknown reduction '" + c.label + "'");
    }

    bool check_split4(const Certificate& c, const std::string& where) {
        if (!is_rect(c) || c.children.size() != 4) return fail(where, "split4 needs a rect and four children");
        const auto& r = c.region.coords;
        if (!is_rect(c.children[0])) return fail(where, "split4 child is not a rect");
        double xm = c.children[0].region.coords[2], ym = c.children[0].region.coords[3];
        if (!(r[0] < xm && xm < r[2] && r[1] < ym && ym < r[3])) return fail(where, "split point outside the rect");
        if (!same_rect(c.children[0], r[0], r[1], xm, ym) || !same_rect(c.children[1], xm, r[1], r[2], ym) ||
            !same_rect(c.children[2], r[0], ym, xm, r[3]) || !same_rect(c.children[3], xm, ym, r[2], r[3])) {
            return fail(where, "split4 children do not tile the rect");
        }
        return true;
    }

    bool check_split3(const Certificate& c, const std::string& where) {
        if (!is_triangle(c) || c.children.size() != 3) return fail(where, "split3 needs a triangle and three children");
        const auto& t = c.region.coords;
        if (!is_rect(c.children[0])) return fail(where, "split3 first child is not a rect");
        double xm = c.children[0].region.coords[2], ym = c.children[0].region.coords[3];
        if (!on_line(xm, ym)) return fail(where, "split3 corner off the line w = u");
        if (!(t[0] < xm && xm < t[2] && t[1] < ym && ym < t[3])) return fail(where, "split point outside the triangle");
        if (!same_rect(c.children[0], t[0], t[1], xm, ym) || !same_triangle(c.children[1], t[0], ym, xm, t[3]) ||
            !same_triangle(c.children[2], xm, t[1], t[2], ym)) {
            return fail(where, "split3 children do not tile the triangle");
        }
        return true;
    }

    bool check_row(const Certificate& c, const std::string& where) {
        if (!is_rect(c) || c.children.empty()) return fail(where, "row needs a rect and boxes");
        const auto& r = c.region.coords;
        double v = r[0];
        for (std::size_t i = 0; i < c.children.size(); ++i) {
            const auto& b = c.children[i];
            if (!is_rect(b) || b.method != Method::direct_hit) return fail(where, "row box is not a direct hit rect");
            const auto& q = b.region.coords;
            if (q[0] != v || q[1] != r[1] || q[3] != r[3] || !(q[2] > q[0])) {
                return fail(where + "/" + std::to_string(i), "row boxes are not contiguous");
            }
            v = q[2];
        }
        if (v != r[2]) return fail(where, "row boxes do not reach the row end");
        return true;
    }

    // Rows must be contiguous in w from w_min past w_max, and each row must
    // reach from 0.85 w_lo up to w_hi (0.85 w_hi for the ray label).
    bool check_band(const Certificate& c, const std::string& where) {
        const auto& b = c.region.coords;
        if (b.size() != 5) return fail(where, "band needs five coordinates");
        const Enclosure ratio(0.85, std::nextafter(0.85, 1.0));
        bool ray = c.label.find("ray") != std::string::npos;
        double w = b[1];
        for (std::size_t i = 0; i < c.children.size(); ++i) {
            const auto& row = c.children[i];
            std::string at = where + "/" + std::to_string(i);
            if (row.method != Method::sweep_row || !is_rect(row)) return fail(at, "band child is not a sweep row");
            const auto& r = row.region.coords;
            if (r[1] != w) return fail(at, "rows are not contiguous");
            if (!(r[0] <= (ratio * Enclosure(r[1])).lo())) return fail(at, "row starts right of 0.85 w");
            double need = ray ? (ratio * Enclosure(r[3])).hi() : r[3];
            if (!(r[2] >= need)) return fail(at, "row ends before the band edge");
            w = r[3];
        }
        if (!(w >= b[2])) return fail(where, "rows stop below w_max");
        return true;
    }
};

}  // namespace

VerifyResult verify_certificate(const CertificateFile& f) {
    Checker ch;
    if (!(f.slack.delta > 0.0)) {
        ch.fail("root", "slack delta must be positive");
        return ch.result;
    }
    ch.check(f.root, "root");
    return ch.result;
}

namespace {

std::string child_path(const Certificate& c) {
    for (std::size_t i = 0; i < c.children.size(); ++i) {
        if (!c.children[i].proved) return "/" + std::to_string(i) + child_path(c.children[i]);
    }
    return "";
}

}  // namespace

std::string failure_location(const Certificate& c) {
    if (c.proved) return "";
    std::string path = child_path(c);
    return path.empty() ? "/" : path;
}

std::size_t leaf_count(const Certificate& c) {
    if (c.children.empty()) return 1;
    std::size_t n = 0;
    for (const auto& k : c.children) n += leaf_count(k);
    return n;
}

int max_depth(const Certificate& c) {
    int d = c.depth;
    for (const auto& k : c.children) d = std::max(d, max_depth(k));
    return d;
}

}  // namespace bubble
