#include "bubble/proof.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include <tbb/parallel_for.h>
#include <tbb/info.h>
#include <tbb/task_arena.h>

namespace bubble {

Triangle triangle_under_line(double y_bottom, double y_top) {
    if (!(y_bottom <= y_top)) throw DomainError("triangle legs out of order");
    return Triangle{1.0 - 2.0 * y_top, y_bottom, 1.0 - 2.0 * y_bottom, y_top};
}

Rect s3_domain_rect() {
    double lo = std::nextafter(0.1, 0.0);
    return Rect{lo, lo, 1.0 / 3.0, 1.0 / 3.0};
}

Triangle s3_domain_triangle() { return triangle_under_line(1.0 / 3.0, 0.45); }

namespace {

std::string point_text(double x, double y) {
    std::ostringstream os;
    os << "(" << exact_decimal(x) << ", " << exact_decimal(y) << ")";
    return os.str();
}

class S3Prover {
public:
    explicit S3Prover(const S3ProofOptions& opt)
        : opt_(opt), bounds_(Space::S3, opt.band, opt.slack.delta) {}

    Certificate rect(const Rect& r, int depth) {
        Certificate c = base(depth);
        c.region = {RegionKind::rect, {r.v_lo, r.w_lo, r.v_hi, r.w_hi}};
        if (r.v_lo > r.w_hi) return reduction(std::move(c), kReductionBalancing);
        if (r.v_lo == r.v_hi || r.w_lo == r.w_hi) return reduction(std::move(c), kReductionZeroMeasure);
        if (aborted_) return skipped(std::move(c));

        c.g_min = std::min({g(r.v_lo, r.w_lo), g(r.v_hi, r.w_lo), g(r.v_lo, r.w_hi), g(r.v_hi, r.w_hi)});
        c.h_max = h(r.v_hi, r.w_hi);
        if (c.g_min > c.h_max) {
            c.proved = true;
            return c;
        }
        if (!may_split(c, r.v_lo, r.w_lo, depth)) return c;

        double xm = (r.v_lo + r.v_hi) / 2.0;
        double ym = (r.w_lo + r.w_hi) / 2.0;
        Rect parts[4] = {{r.v_lo, r.w_lo, xm, ym}, {xm, r.w_lo, r.v_hi, ym}, {r.v_lo, ym, xm, r.w_hi},
                         {xm, ym, r.v_hi, r.w_hi}};
        c.method = Method::split4;
        c.children.resize(4);
        run(4, [&](int i) { c.children[i] = rect(parts[i], depth + 1); });
        c.proved = std::all_of(c.children.begin(), c.children.end(), [](const Certificate& k) { return k.proved; });
        return c;
    }

    Certificate triangle(const Triangle& t, int depth) {
        Certificate c = base(depth);
        c.region = {RegionKind::triangle, {t.x1, t.y1, t.x3, t.y3}};
        if (t.x1 > t.y3) return reduction(std::move(c), kReductionBalancing);
        if (t.y1 == t.y3 || t.x1 == t.x3) return reduction(std::move(c), kReductionZeroMeasure);
        if (aborted_) return skipped(std::move(c));

        c.g_min = std::min({g(t.x1, t.y1), g(t.x1, t.y3), g(t.x3, t.y1)});
        c.h_max = h(t.x3, t.y1);
        if (c.g_min > c.h_max) {
            c.proved = true;
            return c;
        }
        if (!may_split(c, t.x1, t.y1, depth)) return c;

        double ym = (t.y1 + t.y3) / 2.0;
        double xm = 1.0 - 2.0 * ym;
        c.method = Method::split3;
        c.children.resize(3);
        run(3, [&](int i) {
            if (i == 0) c.children[0] = rect(Rect{t.x1, t.y1, xm, ym}, depth + 1);
            if (i == 1) c.children[1] = triangle(Triangle{t.x1, ym, xm, t.y3}, depth + 1);
            if (i == 2) c.children[2] = triangle(Triangle{xm, t.y1, t.x3, ym}, depth + 1);
        });
        c.proved = std::all_of(c.children.begin(), c.children.end(), [](const Certificate& k) { return k.proved; });
        return c;
    }

private:
    Certificate base(int depth) const {
        Certificate c;
        c.space = Space::S3;
        c.depth = depth;
        return c;
    }

    static Certificate reduction(Certificate c, std::string_view why) {
        c.method = Method::reduction;
        c.label = std::string(why);
        c.proved = true;
        return c;
    }

    static Certificate skipped(Certificate c) {
        c.failure = "not evaluated after an earlier failure";
        return c;
    }

    // A miss splits unless the depth budget is spent or the bounds already
    // cross at the lower-left corner.
    bool may_split(Certificate& c, double x, double y, int depth) {
        if (depth >= opt_.depth_budget) {
            c.failure = "depth budget exhausted at " + point_text(x, y);
            aborted_ = true;
            return false;
        }
        double gp = g(x, y);
        // A is symmetric in its two volumes; at a single point the ordered pair suffices.
        double hp = h(std::min(x, y), std::max(x, y));
        if (!(gp > hp)) {
            c.failure = "g <= h at " + point_text(x, y);
            aborted_ = true;
            return false;
        }
        return true;
    }

    double g(double x, double y) { return g_lower_point(bounds_, x, y); }
    double h(double x, double y) { return h_upper_corner_s3(x, y, opt_.band, opt_.slack.delta).value; }

    template <class F>
    void run(int n, F&& f) {
        if (opt_.jobs > 1) {
            tbb::parallel_for(0, n, [&](int i) { f(i); });
        } else {
            for (int i = 0; i < n; ++i) f(i);
        }
    }

    S3ProofOptions opt_;
    AreaLowerBounds bounds_;
    std::atomic<bool> aborted_{false};
};

}  // namespace

int effective_jobs(int jobs) { return std::max(1, std::min(jobs, tbb::info::default_concurrency())); }

Certificate verify_rectangle_s3(const Rect& r, const S3ProofOptions& opt) {
    opt.slack.validate();
    set_working_precision(opt.slack.precision_bits);
    S3Prover p(opt);
    if (opt.jobs <= 1) return p.rect(r, 0);
    tbb::task_arena arena(effective_jobs(opt.jobs));
    return arena.execute([&] { return p.rect(r, 0); });
}

Certificate verify_triangle_s3(const Triangle& t, const S3ProofOptions& opt) {
    opt.slack.validate();
    set_working_precision(opt.slack.precision_bits);
    if (!(t.x1 == 1.0 - 2.0 * t.y3 && t.x3 == 1.0 - 2.0 * t.y1)) {
        throw DomainError("triangle tips must lie on the line w = u");
    }
    S3Prover p(opt);
    if (opt.jobs <= 1) return p.triangle(t, 0);
    tbb::task_arena arena(effective_jobs(opt.jobs));
    return arena.execute([&] { return p.triangle(t, 0); });
}

}  // namespace bubble
