#include <catch_amalgamated.hpp>

#include <functional>

#include "bubble/proof.hpp"

using namespace bubble;

namespace {

void for_each_leaf(const Certificate& c, const std::function<void(const Certificate&)>& f) {
    if (c.children.empty()) {
        f(c);
        return;
    }
    for (const auto& k : c.children) for_each_leaf(k, f);
}

double rect_area(const std::vector<double>& x) { return (x[2] - x[0]) * (x[3] - x[1]); }
double triangle_area(const std::vector<double>& x) { return 0.5 * (x[2] - x[0]) * (x[3] - x[1]); }

double region_area(const Region& r) {
    return r.kind == RegionKind::rect ? rect_area(r.coords) : triangle_area(r.coords);
}

}  // namespace

TEST_CASE("the S3 computer domain is proved", "[proof_s3]") {
    S3ProofOptions opt;
    Certificate rect = verify_rectangle_s3(s3_domain_rect(), opt);
    CHECK(rect.proved);
    CHECK(rect.failure.empty());
    Certificate tri = verify_triangle_s3(s3_domain_triangle(), opt);
    CHECK(tri.proved);
    CHECK(verify_certificate({opt.slack, std::string(kEngineVersion), rect}).ok);
    CHECK(verify_certificate({opt.slack, std::string(kEngineVersion), tri}).ok);
    // Every proved leaf separates its bounds.
    for_each_leaf(rect, [](const Certificate& c) {
        if (c.method != Method::reduction) CHECK(c.g_min > c.h_max);
    });
}

TEST_CASE("split children tile their parent", "[proof_s3]") {
    Certificate rect = verify_rectangle_s3(s3_domain_rect(), S3ProofOptions{});
    std::function<void(const Certificate&)> check = [&](const Certificate& c) {
        if (c.children.empty()) return;
        double sum = 0.0;
        for (const auto& k : c.children) {
            CHECK(k.depth == c.depth + 1);
            sum += region_area(k.region);
            check(k);
        }
        CHECK_THAT(sum, Catch::Matchers::WithinRel(region_area(c.region), 1e-12));
    };
    check(rect);
    CHECK(leaf_count(rect) > 1);
    CHECK(max_depth(rect) <= kDefaultDepthBudget);
}

TEST_CASE("rectangles past the diagonal reduce by balancing", "[proof_s3]") {
    Certificate c = verify_rectangle_s3({0.3, 0.1, 0.32, 0.2}, S3ProofOptions{});
    CHECK(c.proved);
    CHECK(c.method == Method::reduction);
    CHECK(c.label == kReductionBalancing);
}

TEST_CASE("degenerate regions are zero-measure leaves", "[proof_s3]") {
    Certificate t = verify_triangle_s3(triangle_under_line(0.4, 0.4), S3ProofOptions{});
    CHECK(t.proved);
    CHECK(t.label == kReductionZeroMeasure);
    Certificate r = verify_rectangle_s3({0.15, 0.2, 0.15, 0.3}, S3ProofOptions{});
    CHECK(r.proved);
    CHECK(r.label == kReductionZeroMeasure);
}

TEST_CASE("tiny first volumes cannot be proved", "[proof_s3]") {
    S3ProofOptions opt;
    opt.depth_budget = 6;
    Certificate c = verify_rectangle_s3({0.001, 0.2, 0.005, 0.21}, opt);
    CHECK_FALSE(c.proved);
    std::string where = failure_location(c);
    CHECK_FALSE(where.empty());
    bool named = false;
    for_each_leaf(c, [&](const Certificate& k) {
        if (!k.proved && k.failure.find("g <= h") != std::string::npos) named = true;
        if (!k.proved && k.failure.find("depth budget") != std::string::npos) named = true;
    });
    CHECK(named);
    // The failed tree still verifies as a failed tree.
    VerifyResult v = verify_certificate({opt.slack, std::string(kEngineVersion), c});
    CHECK(v.ok);
}

TEST_CASE("triangle tips must sit on the line", "[proof_s3]") {
    CHECK_THROWS_AS(verify_triangle_s3({0.2, 0.2, 0.5, 0.4}, S3ProofOptions{}), DomainError);
    CHECK_THROWS_AS(triangle_under_line(0.4, 0.3), DomainError);
    S3ProofOptions bad;
    bad.slack.delta = 0.0;
    CHECK_THROWS_AS(verify_rectangle_s3(s3_domain_rect(), bad), ConfigError);
}

TEST_CASE("worker count does not change the result", "[proof_s3]") {
    S3ProofOptions one, many;
    many.jobs = 4;
    Certificate a = verify_triangle_s3(s3_domain_triangle(), one);
    Certificate b = verify_triangle_s3(s3_domain_triangle(), many);
    SlackConfig s;
    CHECK(to_json({s, std::string(kEngineVersion), a}) == to_json({s, std::string(kEngineVersion), b}));
    CHECK(effective_jobs(0) == 1);
    CHECK(effective_jobs(1 << 20) >= 1);
}
