#include "bubble/proof.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace bubble {

void RegionClaim::validate() const {
    if (!(w_min > 0.0 && w_min < w_max)) throw ConfigError("claim " + id + ": need 0 < w_min < w_max");
    if (!(box_height > 0.0 && box_width > 0.0)) throw ConfigError("claim " + id + ": box sizes must be positive");
    if (!(v_min > 0.0 && v_min >= 0.85 * w_min - box_width)) {
        throw ConfigError("claim " + id + ": v_min must reach 0.85 w_min within one box");
    }
    if (!(k1_start > 1.0 && k2_start > 1.0)) throw ConfigError("claim " + id + ": starting curvatures must exceed 1");
    if (!(adj_main > 0.0 && adj_main < 1.0 && adj_second > 0.0 && adj_second < 1.0)) {
        throw ConfigError("claim " + id + ": adjustment factors must lie in (0, 1)");
    }
}

const std::vector<RegionClaim>& h3_claims() {
    static const std::vector<RegionClaim> table = {
        {"5.9", .002329, .00274, .01, .00001, .00001, 11.46, 10.95},
        {"5.10", .0085, .01, .1, .00005, .00005, 7.475, 7.15},
        {"5.11", .085, .1, 1., .0005, .0005, 3.56, 3.415},
        {"5.12", .85, 1., 15., .005, .005, 1.849, 1.787},
        {"5.13", 12.75, 15., 25., .01, .01, 1.15204, 1.1352},
        {"5.14", 21.25, 25., 45., .02, .02, 1.1027, 1.09054},
        {"5.15", 38.25, 45., 65., .02, .02, 1.0637, 1.05562},
        {"5.16", 55.25, 65., 85., .02, .02, 1.04658, 1.040469},
        {"5.17", 72.25, 85., 110., .015, .015, 1.03684, 1.031905},
        {"5.18", 93.5, 110., 130., .015, .015, 1.02927, 1.025276},
        {"5.19", 110.5, 130., 150., .015, .015, 1.025161, 1.021693},
        {"5.20", 127.5, 150., 300., .01, .01, 1.022077, 1.019009, .9999, .9995, true},
    };
    return table;
}

const RegionClaim& find_claim(const std::string& id) {
    for (const auto& c : h3_claims()) {
        if (c.id == id) return c;
    }
    throw ConfigError("unknown claim '" + id + "'");
}

namespace {

const Enclosure kRatio(0.85, std::nextafter(0.85, 1.0));

double row_lo(const RegionClaim& c, long row) { return c.w_min + static_cast<double>(row) * c.box_height; }
double col_lo(const RegionClaim& c, long col) { return c.v_min + static_cast<double>(col) * c.box_width; }

std::string point_text(double v, double w) {
    std::ostringstream os;
    os << "(" << exact_decimal(v) << ", " << exact_decimal(w) << ")";
    return os.str();
}

}  // namespace

long claim_rows(const RegionClaim& c) {
    long n = static_cast<long>(std::ceil((c.w_max - c.w_min) / c.box_height));
    while (row_lo(c, n) < c.w_max) ++n;
    while (n > 1 && row_lo(c, n - 1) >= c.w_max) --n;
    return n;
}

std::pair<long, long> claim_columns(const RegionClaim& c, long row) {
    double w_lo = row_lo(c, row), w_hi = row_lo(c, row + 1);
    double left = (kRatio * Enclosure(w_lo)).lo();
    long first = static_cast<long>(std::floor((left - c.v_min) / c.box_width));
    while (col_lo(c, first) > left) --first;
    while (col_lo(c, first + 1) <= left) ++first;
    double right = c.ray ? (kRatio * Enclosure(w_hi)).hi() : w_hi;
    long last = first;
    while (col_lo(c, last + 1) < right) ++last;
    return {first, last};
}

Rect claim_box(const RegionClaim& c, const BoxIndex& b) {
    return Rect{col_lo(c, b.col), row_lo(c, b.row), col_lo(c, b.col + 1), row_lo(c, b.row + 1)};
}

namespace {

class H3Sweeper {
public:
    H3Sweeper(const RegionClaim& claim, const H3ProofOptions& opt)
        : claim_(claim),
          opt_(opt),
          bounds_(Space::H3, opt.band > 0.0 ? opt.band : claim.box_width / 2.0, opt.slack.delta) {}

    StepperState seed() const {
        StepperState s;
        s.k1 = claim_.k1_start;
        s.k2 = claim_.k2_start;
        s.scale1 = claim_.adj_main;
        s.scale2 = claim_.adj_second;
        return s;
    }

    // Certifies one box given the curvatures left by the previous box.
    Certificate box(const Rect& r, StepperState& state) {
        Certificate c;
        c.space = Space::H3;
        c.region = {RegionKind::rect, {r.v_lo, r.w_lo, r.v_hi, r.w_hi}};
        c.method = Method::direct_hit;
        Enclosure V(r.v_lo), W(r.w_lo);
        c.g_min = add_down(add_down(2.0 * bounds_.at(V / 2.0), bounds_.at(W)), bounds_.at(V + W));
        try {
            SweepBox sb{r.v_hi, r.w_hi, claim_.box_width, claim_.box_height};
            StepResult step = curvature_pair_step(state, sb, opt_.slack.delta);
            state = step.state;
            Enclosure area = sdb_area_h3(Enclosure(state.k1), Enclosure(state.k2));
            c.h_max = 2.0 * pad_upper(area, 3.0 * opt_.slack.delta);
        } catch (const StepFailure& e) {
            c.failure = std::string("curvature step failed at ") + point_text(r.v_lo, r.w_lo) + ": " + e.what();
            return c;
        } catch (const CurvatureUnderflow& e) {
            c.failure = std::string("curvature underflow at ") + point_text(r.v_lo, r.w_lo) + ": " + e.what();
            return c;
        }
        c.proved = c.g_min > c.h_max;
        if (!c.proved) c.failure = "g <= h at " + point_text(r.v_lo, r.w_lo);
        return c;
    }

    StepperState row_start(const Rect& first) const {
        double tv = first.v_hi + claim_.box_width / 2.0;
        double tw = first.w_hi + claim_.box_height / 2.0;
        StepperState s = solve_curvature_pair(std::min(tv, tw), std::max(tv, tw), seed());
        if (tv > tw) std::swap(s.k1, s.k2);
        s.scale1 = claim_.adj_main;
        s.scale2 = claim_.adj_second;
        return s;
    }

    Certificate row(long m) {
        auto [first, last] = claim_columns(claim_, m);
        Rect a = claim_box(claim_, {m, first}), z = claim_box(claim_, {m, last});
        Certificate c;
        c.space = Space::H3;
        c.depth = 1;
        c.method = Method::sweep_row;
        c.region = {RegionKind::rect, {a.v_lo, a.w_lo, z.v_hi, z.w_hi}};
        if (aborted_) {
            c.failure = "not evaluated after an earlier failure";
            return c;
        }
        StepperState state;
        try {
            state = row_start(a);
        } catch (const std::runtime_error& e) {
            c.failure = std::string("row start solve failed at ") + point_text(a.v_lo, a.w_lo) + ": " + e.what();
            aborted_ = true;
            return c;
        }
        for (long j = first; j <= last; ++j) {
            Certificate b = box(claim_box(claim_, {m, j}), state);
            b.depth = 2;
            bool ok = b.proved;
            c.children.push_back(std::move(b));
            if (!ok) {
                c.failure = c.children.back().failure;
                aborted_ = true;
                return c;
            }
        }
        c.proved = true;
        return c;
    }

    Certificate run() {
        long rows = claim_rows(claim_);
        Certificate c;
        c.space = Space::H3;
        c.method = Method::composite;
        c.region = {RegionKind::band, {claim_.v_min, claim_.w_min, claim_.w_max, claim_.box_height, claim_.box_width}};
        c.label = claim_.id + (claim_.ray ? " ray" : "");
        c.children.resize(static_cast<std::size_t>(rows));
        auto body = [&](long m) { c.children[static_cast<std::size_t>(m)] = row(m); };
        if (opt_.jobs > 1) {
            tbb::task_arena arena(effective_jobs(opt_.jobs));
            arena.execute([&] { tbb::parallel_for(0L, rows, body); });
        } else {
            for (long m = 0; m < rows; ++m) body(m);
        }
        c.proved = std::all_of(c.children.begin(), c.children.end(), [](const Certificate& k) { return k.proved; });
        if (!c.proved) {
            for (const auto& k : c.children) {
                if (!k.failure.empty() && k.failure.find("not evaluated") == std::string::npos) {
                    c.failure = k.failure;
                    break;
                }
            }
        }
        return c;
    }

private:
    RegionClaim claim_;
    H3ProofOptions opt_;
    AreaLowerBounds bounds_;
    std::atomic<bool> aborted_{false};
};

}  // namespace

Certificate sweep_band_h3(const RegionClaim& claim, const H3ProofOptions& opt) {
    claim.validate();
    opt.slack.validate();
    set_working_precision(opt.slack.precision_bits);
    H3Sweeper s(claim, opt);
    return s.run();
}

Certificate check_claim_box(const RegionClaim& claim, const BoxIndex& b, const H3ProofOptions& opt) {
    claim.validate();
    opt.slack.validate();
    set_working_precision(opt.slack.precision_bits);
    H3Sweeper s(claim, opt);
    Rect r = claim_box(claim, b);
    Certificate c;
    c.space = Space::H3;
    c.region = {RegionKind::rect, {r.v_lo, r.w_lo, r.v_hi, r.w_hi}};
    StepperState state;
    try {
        state = s.row_start(r);
    } catch (const std::runtime_error& e) {
        c.failure = std::string("start solve failed: ") + e.what();
        return c;
    }
    return s.box(r, state);
}

}  // namespace bubble
