#include <catch_amalgamated.hpp>

#include <mpfr.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bubble/enclosure.hpp"

using namespace bubble;

namespace {

// 256-bit reference value of f at a double argument.
class Oracle {
public:
    Oracle() {
        mpfr_init2(x_, 256);
        mpfr_init2(y_, 256);
        mpfr_init2(t_, 256);
    }
    ~Oracle() {
        mpfr_clear(x_);
        mpfr_clear(y_);
        mpfr_clear(t_);
    }
    Oracle(const Oracle&) = delete;
    Oracle& operator=(const Oracle&) = delete;

    // True when lo <= f(a) <= hi.
    bool inside(const std::string& f, double a, const Enclosure& e) {
        mpfr_set_d(x_, a, MPFR_RNDN);
        eval(f);
        return mpfr_cmp_d(y_, e.lo()) >= 0 && mpfr_cmp_d(y_, e.hi()) <= 0;
    }

private:
    void eval(const std::string& f) {
        if (f == "sin") mpfr_sin(y_, x_, MPFR_RNDN);
        else if (f == "cos") mpfr_cos(y_, x_, MPFR_RNDN);
        else if (f == "tan") mpfr_tan(y_, x_, MPFR_RNDN);
        else if (f == "cot") mpfr_cot(y_, x_, MPFR_RNDN);
        else if (f == "sinh") mpfr_sinh(y_, x_, MPFR_RNDN);
        else if (f == "cosh") mpfr_cosh(y_, x_, MPFR_RNDN);
        else if (f == "tanh") mpfr_tanh(y_, x_, MPFR_RNDN);
        else if (f == "asin") mpfr_asin(y_, x_, MPFR_RNDN);
        else if (f == "acos") mpfr_acos(y_, x_, MPFR_RNDN);
        else if (f == "atan") mpfr_atan(y_, x_, MPFR_RNDN);
        else if (f == "acot") {
            mpfr_atan(t_, x_, MPFR_RNDN);
            mpfr_const_pi(y_, MPFR_RNDN);
            mpfr_div_2ui(y_, y_, 1, MPFR_RNDN);
            mpfr_sub(y_, y_, t_, MPFR_RNDN);
        } else if (f == "atanh") mpfr_atanh(y_, x_, MPFR_RNDN);
        else if (f == "acoth") {
            mpfr_ui_div(t_, 1, x_, MPFR_RNDN);
            mpfr_atanh(y_, t_, MPFR_RNDN);
        } else if (f == "acosh") mpfr_acosh(y_, x_, MPFR_RNDN);
        else if (f == "log") mpfr_log(y_, x_, MPFR_RNDN);
        else if (f == "exp") mpfr_exp(y_, x_, MPFR_RNDN);
        else if (f == "sqrt") mpfr_sqrt(y_, x_, MPFR_RNDN);
        else if (f == "cbrt") mpfr_cbrt(y_, x_, MPFR_RNDN);
        else if (f == "sqr") mpfr_sqr(y_, x_, MPFR_RNDN);
        else FAIL("no oracle for " << f);
    }

    mpfr_t x_, y_, t_;
};

struct Case {
    std::string name;
    double lo, hi;
    std::function<Enclosure(const Enclosure&)> f;
};

std::vector<Case> cases() {
    return {
        {"sin", -20.0, 20.0, [](const Enclosure& x) { return sin(x); }},
        {"cos", -20.0, 20.0, [](const Enclosure& x) { return cos(x); }},
        {"tan", -1.5, 1.5, [](const Enclosure& x) { return tan(x); }},
        {"cot", 0.01, 3.1, [](const Enclosure& x) { return cot(x); }},
        {"sinh", -30.0, 30.0, [](const Enclosure& x) { return sinh(x); }},
        {"cosh", -30.0, 30.0, [](const Enclosure& x) { return cosh(x); }},
        {"tanh", -20.0, 20.0, [](const Enclosure& x) { return tanh(x); }},
        {"asin", -1.0, 1.0, [](const Enclosure& x) { return asin(x); }},
        {"acos", -1.0, 1.0, [](const Enclosure& x) { return acos(x); }},
        {"atan", -50.0, 50.0, [](const Enclosure& x) { return atan(x); }},
        {"acot", -50.0, 50.0, [](const Enclosure& x) { return acot(x); }},
        {"atanh", -0.999, 0.999, [](const Enclosure& x) { return atanh(x); }},
        {"acoth", 1.001, 40.0, [](const Enclosure& x) { return acoth(x); }},
        {"acosh", 1.0, 50.0, [](const Enclosure& x) { return acosh(x); }},
        {"log", 1e-6, 1e6, [](const Enclosure& x) { return log(x); }},
        {"exp", -40.0, 40.0, [](const Enclosure& x) { return exp(x); }},
        {"sqrt", 0.0, 1e4, [](const Enclosure& x) { return sqrt(x); }},
        {"cbrt", -1e3, 1e3, [](const Enclosure& x) { return cbrt(x); }},
        {"sqr", -1e3, 1e3, [](const Enclosure& x) { return sqr(x); }},
    };
}

void check_containment(int precision_bits, int per_function) {
    set_working_precision(precision_bits);
    Oracle oracle;
    std::mt19937_64 rng(7);
    for (const auto& c : cases()) {
        std::uniform_real_distribution<double> dist(c.lo, c.hi);
        for (int i = 0; i < per_function; ++i) {
            double a = dist(rng);
            Enclosure e = c.f(Enclosure(a));
            if (!oracle.inside(c.name, a, e)) FAIL(c.name << "(" << a << ") escapes " << e);
            // A wider argument must still contain the image of every member.
            double b = std::min(c.hi, a + 1e-3 * std::abs(dist(rng)));
            Enclosure wide = c.f(Enclosure(a, b));
            double m = a + (b - a) * 0.37;
            if (!oracle.inside(c.name, m, wide)) FAIL(c.name << " on [" << a << ", " << b << "] misses " << m);
        }
    }
    set_working_precision(53);
}

}  // namespace

TEST_CASE("point enclosures of elementary functions", "[enclosure]") {
    const double half_pi = std::numbers::pi / 2;
    Enclosure s = sin(Enclosure(half_pi));
    CHECK(s.contains(1.0));
    CHECK(s.width() <= 2.0 * std::nextafter(1.0, 2.0) - 2.0);
    CHECK(sqrt(Enclosure(4.0)).contains(2.0));
    Enclosure z = sinh(Enclosure(0.0));
    CHECK(z.contains(0.0));
    CHECK(z.width() <= std::numeric_limits<double>::denorm_min());
}

TEST_CASE("padding moves the endpoints by delta", "[enclosure]") {
    const double d = 0x1p-24;
    CHECK(pad_lower(Enclosure(3.0), d) == 3.0 - d);
    CHECK(pad_upper(Enclosure(3.0), 0.0) == 3.0);
    CHECK(pad_upper(Enclosure(1.0, 2.0), 3.0 * d) == 2.0 + 3.0 * d);
    // Sums that are not representable round outward.
    CHECK(pad_lower(Enclosure(1e16), 1.0) < 1e16);
    CHECK(pad_upper(Enclosure(1e16), 1.0) > 1e16);
}

TEST_CASE("padding widens an enclosure monotonically", "[enclosure][property]") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> x(-1e3, 1e3), d(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        double a = x(rng), b = a + std::abs(x(rng));
        double d1 = d(rng), d2 = d1 + d(rng);
        Enclosure e(a, b);
        CHECK(pad_lower(e, d2) <= pad_lower(e, d1));
        CHECK(pad_upper(e, d2) >= pad_upper(e, d1));
        CHECK(pad_lower(e, d1) <= a);
        CHECK(pad_upper(e, d1) >= b);
    }
}

TEST_CASE("domain errors leave the real domain", "[enclosure]") {
    CHECK_THROWS_AS(acoth(Enclosure(-1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(sqrt(Enclosure(-2.0, -1.0)), DomainError);
    CHECK_THROWS_AS(log(Enclosure(-1.0, 0.5)), DomainError);
    CHECK_THROWS_AS(asin(Enclosure(1.5, 2.0)), DomainError);
    CHECK_THROWS_AS(atanh(Enclosure(1.0)), DomainError);
    CHECK_THROWS_AS(Enclosure(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(Enclosure(1.0) / Enclosure(-1.0, 1.0), DomainError);
}

TEST_CASE("slack configuration is validated", "[enclosure]") {
    SlackConfig ok;
    CHECK(ok.delta == 0x1p-24);
    CHECK_NOTHROW(ok.validate());
    CHECK_THROWS_AS((SlackConfig{0.0, 53}.validate()), ConfigError);
    CHECK_THROWS_AS((SlackConfig{1e-8, 40}.validate()), ConfigError);
}

TEST_CASE("enclosures contain the high-precision oracle at double precision", "[enclosure][property]") {
    check_containment(53, 100000 / 19 + 1);
}

TEST_CASE("enclosures contain the high-precision oracle at extended precision", "[enclosure][property]") {
    check_containment(113, 2000);
}

TEST_CASE("arithmetic contains every member result", "[enclosure][property]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> x(-100.0, 100.0), t(0.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        double a = x(rng), b = a + std::abs(x(rng)) * 0.01;
        double c = x(rng), d = c + std::abs(x(rng)) * 0.01;
        Enclosure A(a, b), C(c, d);
        double p = a + (b - a) * t(rng), q = c + (d - c) * t(rng);
        // Exact results of the double operations are bracketed by the rounded ones.
        CHECK((A + C).contains(p + q));
        CHECK((A - C).contains(p - q));
        CHECK((A * C).contains(p * q));
        if (!C.contains(0.0)) CHECK((A / C).contains(p / q));
        CHECK((A + C).lo() <= (A + C).hi());
    }
    CHECK(pi_enclosure().contains(std::numbers::pi));
    CHECK(pi_enclosure().lo() < pi_enclosure().hi());
}
