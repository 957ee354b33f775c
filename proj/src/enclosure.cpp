#include "bubble/enclosure.hpp"

#include <mpfr.h>

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <limits>
#include <ostream>
#include <string>

namespace bubble {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPiLo = 3.141592653589793;
// Below this magnitude the fma residuals used for directed rounding may underflow.
constexpr double kTiny = 0x1p-960;

std::atomic<int> g_precision_bits{53};

double next_down(double x) noexcept { return std::nextafter(x, -kInf); }
double next_up(double x) noexcept { return std::nextafter(x, kInf); }

double step_down(double x, int n) noexcept {
    for (int i = 0; i < n; ++i) x = next_down(x);
    return x;
}

double step_up(double x, int n) noexcept {
    for (int i = 0; i < n; ++i) x = next_up(x);
    return x;
}

void check_nan(double lo, double hi, const char* what) {
    if (std::isnan(lo) || std::isnan(hi)) throw DomainError(std::string(what) + ": result is not a number");
}

double mul_down(double a, double b) noexcept {
    double p = a * b;
    if (a == 0.0 || b == 0.0) return 0.0;
    if (!std::isfinite(p) || std::abs(p) < kTiny) return next_down(p);
    double e = std::fma(a, b, -p);
    return e < 0.0 ? next_down(p) : p;
}

double mul_up(double a, double b) noexcept {
    double p = a * b;
    if (a == 0.0 || b == 0.0) return 0.0;
    if (!std::isfinite(p) || std::abs(p) < kTiny) return next_up(p);
    double e = std::fma(a, b, -p);
    return e > 0.0 ? next_up(p) : p;
}

// Sign of (a/b - q) where q = fl(a/b): the residual a - q*b has the sign of
// (a/b - q) times the sign of b.
double div_down(double a, double b) noexcept {
    double q = a / b;
    if (a == 0.0) return 0.0;
    if (!std::isfinite(q) || std::abs(q) < kTiny || std::abs(a) < kTiny) return next_down(q);
    double r = std::fma(-q, b, a);
    double s = (b > 0.0) ? r : -r;
    return s < 0.0 ? next_down(q) : q;
}

double div_up(double a, double b) noexcept {
    double q = a / b;
    if (a == 0.0) return 0.0;
    if (!std::isfinite(q) || std::abs(q) < kTiny || std::abs(a) < kTiny) return next_up(q);
    double r = std::fma(-q, b, a);
    double s = (b > 0.0) ? r : -r;
    return s > 0.0 ? next_up(q) : q;
}

double sqrt_down(double x) noexcept {
    double s = std::sqrt(x);
    if (x == 0.0) return 0.0;
    if (x < kTiny) return std::max(0.0, next_down(s));
    double r = std::fma(-s, s, x);
    return r < 0.0 ? next_down(s) : s;
}

double sqrt_up(double x) noexcept {
    double s = std::sqrt(x);
    if (x == 0.0) return 0.0;
    if (x < kTiny) return next_up(s);
    double r = std::fma(-s, s, x);
    return r > 0.0 ? next_up(s) : s;
}

enum class Fn { Exp, Log, Sin, Cos, Tan, Cot, Sinh, Cosh, Tanh, Asin, Acos, Atan, Atanh, Acosh, Cbrt };

// Ulps of slack added around the libm result at 53-bit precision.
int libm_slack(Fn f) noexcept {
    switch (f) {
        case Fn::Exp:
        case Fn::Log:
        case Fn::Sin:
        case Fn::Cos:
        case Fn::Atan:
        case Fn::Asin:
        case Fn::Acos:
            return 2;
        default:
            return 4;
    }
}

double libm_eval(Fn f, double x) noexcept {
    switch (f) {
        case Fn::Exp: return std::exp(x);
        case Fn::Log: return std::log(x);
        case Fn::Sin: return std::sin(x);
        case Fn::Cos: return std::cos(x);
        case Fn::Tan: return std::tan(x);
        case Fn::Cot: return std::cos(x) / std::sin(x);
        case Fn::Sinh: return std::sinh(x);
        case Fn::Cosh: return std::cosh(x);
        case Fn::Tanh: return std::tanh(x);
        case Fn::Asin: return std::asin(x);
        case Fn::Acos: return std::acos(x);
        case Fn::Atan: return std::atan(x);
        case Fn::Atanh: return std::atanh(x);
        case Fn::Acosh: return std::acosh(x);
        case Fn::Cbrt: return std::cbrt(x);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

MpfrUnary mpfr_fn(Fn f) noexcept {
    switch (f) {
        case Fn::Exp: return mpfr_exp;
        case Fn::Log: return mpfr_log;
        case Fn::Sin: return mpfr_sin;
        case Fn::Cos: return mpfr_cos;
        case Fn::Tan: return mpfr_tan;
        case Fn::Cot: return mpfr_cot;
        case Fn::Sinh: return mpfr_sinh;
        case Fn::Cosh: return mpfr_cosh;
        case Fn::Tanh: return mpfr_tanh;
        case Fn::Asin: return mpfr_asin;
        case Fn::Acos: return mpfr_acos;
        case Fn::Atan: return mpfr_atan;
        case Fn::Atanh: return mpfr_atanh;
        case Fn::Acosh: return mpfr_acosh;
        case Fn::Cbrt: return mpfr_cbrt;
    }
    return nullptr;
}

struct MpfrScratch {
    mpfr_t a, b, r;
    MpfrScratch() {
        mpfr_inits2(64, a, b, r, static_cast<mpfr_ptr>(nullptr));
    }
    ~MpfrScratch() { mpfr_clears(a, b, r, static_cast<mpfr_ptr>(nullptr)); }
    void set_prec(int bits) {
        mpfr_set_prec(a, bits);
        mpfr_set_prec(b, bits);
        mpfr_set_prec(r, bits);
    }
};

MpfrScratch& scratch() {
    thread_local MpfrScratch s;
    return s;
}

// Returns a double that is a lower (up = false) or upper (up = true) bound for f(x).
double eval_dir(Fn f, double x, bool up) {
    int bits = g_precision_bits.load(std::memory_order_relaxed);
    if (bits > 53) {
        MpfrScratch& s = scratch();
        s.set_prec(bits);
        mpfr_set_d(s.a, x, MPFR_RNDN);
        mpfr_rnd_t rnd = up ? MPFR_RNDU : MPFR_RNDD;
        mpfr_fn(f)(s.r, s.a, rnd);
        return mpfr_get_d(s.r, rnd);
    }
    double y = libm_eval(f, x);
    int n = libm_slack(f);
    return up ? step_up(y, n) : step_down(y, n);
}

double eval_atan2_dir(double y, double x, bool up) {
    int bits = g_precision_bits.load(std::memory_order_relaxed);
    if (bits > 53) {
        MpfrScratch& s = scratch();
        s.set_prec(bits);
        mpfr_set_d(s.a, y, MPFR_RNDN);
        mpfr_set_d(s.b, x, MPFR_RNDN);
        mpfr_rnd_t rnd = up ? MPFR_RNDU : MPFR_RNDD;
        mpfr_atan2(s.r, s.a, s.b, rnd);
        return mpfr_get_d(s.r, rnd);
    }
    double v = std::atan2(y, x);
    return up ? step_up(v, 2) : step_down(v, 2);
}

// Increasing function on an interval inside its domain.
Enclosure increasing(Fn f, const Enclosure& x) {
    double lo = eval_dir(f, x.lo(), false);
    double hi = eval_dir(f, x.hi(), true);
    check_nan(lo, hi, "increasing function");
    return Enclosure(lo, hi);
}

Enclosure decreasing(Fn f, const Enclosure& x) {
    double lo = eval_dir(f, x.hi(), false);
    double hi = eval_dir(f, x.lo(), true);
    check_nan(lo, hi, "decreasing function");
    return Enclosure(lo, hi);
}

// True when some point (offset + period*k)*pi may lie in x.
bool may_contain_multiple(const Enclosure& x, double offset, double period) {
    if (std::abs(x.lo()) > 1e8 || std::abs(x.hi()) > 1e8) return true;
    Enclosure p = pi_enclosure();
    double k0 = std::floor((x.mid() / kPiLo - offset) / period);
    for (double k = k0 - 2; k <= k0 + 2; k += 1) {
        Enclosure c = Enclosure(offset + period * k) * p;
        if (c.intersects(x)) return true;
    }
    return x.width() >= period * kPiLo;
}

Enclosure clamp(Enclosure e, double lo, double hi) {
    return Enclosure(std::max(e.lo(), lo), std::min(e.hi(), hi));
}

}  // namespace

void SlackConfig::validate() const {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("slack delta must be positive and finite");
    if (precision_bits < 53) throw ConfigError("precision_bits must be at least 53");
}

Enclosure::Enclosure(double x) : lo_(x), hi_(x) {
    if (std::isnan(x)) throw DomainError("enclosure of NaN");
}

Enclosure::Enclosure(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi)) throw DomainError("enclosure endpoint is NaN");
    if (lo > hi) throw DomainError("enclosure with lo > hi");
}

double Enclosure::mid() const noexcept {
    if (lo_ == hi_) return lo_;
    return lo_ * 0.5 + hi_ * 0.5;
}

Enclosure& Enclosure::operator+=(const Enclosure& o) { return *this = *this + o; }
Enclosure& Enclosure::operator-=(const Enclosure& o) { return *this = *this - o; }
Enclosure& Enclosure::operator*=(const Enclosure& o) { return *this = *this * o; }
Enclosure& Enclosure::operator/=(const Enclosure& o) { return *this = *this / o; }

Enclosure hull(const Enclosure& a, const Enclosure& b) noexcept {
    return Enclosure(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Enclosure intersect(const Enclosure& a, const Enclosure& b) {
    double lo = std::max(a.lo(), b.lo());
    double hi = std::min(a.hi(), b.hi());
    if (lo > hi) throw DomainError("empty intersection");
    return Enclosure(lo, hi);
}

double add_down(double a, double b) noexcept {
    double s = a + b;
    if (!std::isfinite(s)) return std::isinf(s) && s > 0 && std::isfinite(a) && std::isfinite(b) ? DBL_MAX : s;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return err < 0.0 ? next_down(s) : s;
}

double add_up(double a, double b) noexcept {
    double s = a + b;
    if (!std::isfinite(s)) return std::isinf(s) && s < 0 && std::isfinite(a) && std::isfinite(b) ? -DBL_MAX : s;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return err > 0.0 ? next_up(s) : s;
}

Enclosure operator-(const Enclosure& a) { return Enclosure(-a.hi(), -a.lo()); }

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    double lo = add_down(a.lo(), b.lo());
    double hi = add_up(a.hi(), b.hi());
    check_nan(lo, hi, "addition");
    return Enclosure(lo, hi);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    double lo = add_down(a.lo(), -b.hi());
    double hi = add_up(a.hi(), -b.lo());
    check_nan(lo, hi, "subtraction");
    return Enclosure(lo, hi);
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    if (a.is_point() && b.is_point()) {
        return Enclosure(mul_down(a.lo(), b.lo()), mul_up(a.lo(), b.lo()));
    }
    double c[4][2] = {{a.lo(), b.lo()}, {a.lo(), b.hi()}, {a.hi(), b.lo()}, {a.hi(), b.hi()}};
    double lo = kInf, hi = -kInf;
    for (auto& p : c) {
        lo = std::min(lo, mul_down(p[0], p[1]));
        hi = std::max(hi, mul_up(p[0], p[1]));
    }
    check_nan(lo, hi, "multiplication");
    return Enclosure(lo, hi);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.lo() <= 0.0 && b.hi() >= 0.0) throw DomainError("division by an enclosure containing zero");
    double c[4][2] = {{a.lo(), b.lo()}, {a.lo(), b.hi()}, {a.hi(), b.lo()}, {a.hi(), b.hi()}};
    double lo = kInf, hi = -kInf;
    for (auto& p : c) {
        lo = std::min(lo, div_down(p[0], p[1]));
        hi = std::max(hi, div_up(p[0], p[1]));
    }
    check_nan(lo, hi, "division");
    return Enclosure(lo, hi);
}

Enclosure sqr(const Enclosure& x) {
    double a = std::abs(x.lo()), b = std::abs(x.hi());
    double mx = std::max(a, b);
    double mn = (x.lo() <= 0.0 && x.hi() >= 0.0) ? 0.0 : std::min(a, b);
    return Enclosure(mul_down(mn, mn), mul_up(mx, mx));
}

Enclosure abs(const Enclosure& x) {
    if (x.lo() >= 0.0) return x;
    if (x.hi() <= 0.0) return -x;
    return Enclosure(0.0, std::max(-x.lo(), x.hi()));
}

Enclosure sqrt(const Enclosure& x) {
    if (x.hi() < 0.0) throw DomainError("sqrt of a negative enclosure");
    double lo = std::max(0.0, x.lo());
    return Enclosure(sqrt_down(lo), sqrt_up(x.hi()));
}

Enclosure cbrt(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return x;
    return increasing(Fn::Cbrt, x);
}

Enclosure exp(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return Enclosure(1.0);
    Enclosure e = increasing(Fn::Exp, x);
    return Enclosure(std::max(0.0, e.lo()), e.hi());
}

Enclosure log(const Enclosure& x) {
    if (x.lo() <= 0.0) throw DomainError("log of an enclosure reaching zero or below");
    if (x.is_point() && x.lo() == 1.0) return Enclosure(0.0);
    return increasing(Fn::Log, x);
}

Enclosure sin(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return x;
    if (x.width() >= 2 * kPiLo) return Enclosure(-1.0, 1.0);
    double a0 = eval_dir(Fn::Sin, x.lo(), false), a1 = eval_dir(Fn::Sin, x.lo(), true);
    double b0 = eval_dir(Fn::Sin, x.hi(), false), b1 = eval_dir(Fn::Sin, x.hi(), true);
    double lo = std::min(a0, b0), hi = std::max(a1, b1);
    if (may_contain_multiple(x, 0.5, 2.0)) hi = 1.0;
    if (may_contain_multiple(x, 1.5, 2.0)) lo = -1.0;
    return clamp(Enclosure(lo, hi), -1.0, 1.0);
}

Enclosure cos(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return Enclosure(1.0);
    if (x.width() >= 2 * kPiLo) return Enclosure(-1.0, 1.0);
    double a0 = eval_dir(Fn::Cos, x.lo(), false), a1 = eval_dir(Fn::Cos, x.lo(), true);
    double b0 = eval_dir(Fn::Cos, x.hi(), false), b1 = eval_dir(Fn::Cos, x.hi(), true);
    double lo = std::min(a0, b0), hi = std::max(a1, b1);
    if (may_contain_multiple(x, 0.0, 2.0)) hi = 1.0;
    if (may_contain_multiple(x, 1.0, 2.0)) lo = -1.0;
    return clamp(Enclosure(lo, hi), -1.0, 1.0);
}

Enclosure tan(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return x;
    if (may_contain_multiple(x, 0.5, 1.0)) throw DomainError("tan enclosure reaches a pole");
    return increasing(Fn::Tan, x);
}

Enclosure cot(const Enclosure& x) {
    if (may_contain_multiple(x, 0.0, 1.0)) throw DomainError("cot enclosure reaches a pole");
    return decreasing(Fn::Cot, x);
}

Enclosure sinh(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return x;
    return increasing(Fn::Sinh, x);
}

Enclosure cosh(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return Enclosure(1.0);
    Enclosure r;
    if (x.lo() >= 0.0) {
        r = increasing(Fn::Cosh, x);
    } else if (x.hi() <= 0.0) {
        r = decreasing(Fn::Cosh, x);
    } else {
        double m = std::max(-x.lo(), x.hi());
        r = Enclosure(1.0, eval_dir(Fn::Cosh, m, true));
    }
    return Enclosure(std::max(1.0, r.lo()), std::max(1.0, r.hi()));
}

Enclosure tanh(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return x;
    return clamp(increasing(Fn::Tanh, x), -1.0, 1.0);
}

Enclosure asin(const Enclosure& x) {
    if (x.hi() < -1.0 || x.lo() > 1.0) throw DomainError("asin outside [-1, 1]");
    Enclosure d(std::max(-1.0, x.lo()), std::min(1.0, x.hi()));
    if (d.is_point() && d.lo() == 0.0) return d;
    return increasing(Fn::Asin, d);
}

Enclosure acos(const Enclosure& x) {
    if (x.hi() < -1.0 || x.lo() > 1.0) throw DomainError("acos outside [-1, 1]");
    Enclosure d(std::max(-1.0, x.lo()), std::min(1.0, x.hi()));
    if (d.is_point() && d.lo() == 1.0) return Enclosure(0.0);
    Enclosure r = decreasing(Fn::Acos, d);
    return Enclosure(std::max(0.0, r.lo()), r.hi());
}

Enclosure atan(const Enclosure& x) {
    if (x.is_point() && x.lo() == 0.0) return x;
    return increasing(Fn::Atan, x);
}

Enclosure acot(const Enclosure& x) {
    return pi_enclosure() * Enclosure(0.5) - atan(x);
}

Enclosure atanh(const Enclosure& x) {
    if (x.lo() <= -1.0 || x.hi() >= 1.0) throw DomainError("atanh outside (-1, 1)");
    if (x.is_point() && x.lo() == 0.0) return x;
    return increasing(Fn::Atanh, x);
}

Enclosure acoth(const Enclosure& x) {
    if (!(x.lo() > 1.0 || x.hi() < -1.0)) throw DomainError("acoth on an enclosure meeting [-1, 1]");
    return atanh(Enclosure(1.0) / x);
}

Enclosure acosh(const Enclosure& x) {
    if (x.hi() < 1.0) throw DomainError("acosh below 1");
    Enclosure d(std::max(1.0, x.lo()), x.hi());
    if (d.is_point() && d.lo() == 1.0) return Enclosure(0.0);
    Enclosure r = increasing(Fn::Acosh, d);
    return Enclosure(std::max(0.0, r.lo()), r.hi());
}

Enclosure atan2(const Enclosure& y, const Enclosure& x) {
    // atan2 has no critical points away from the origin, so off the branch
    // cut its extremes over a box sit at the corners.
    bool ok = y.lo() > 0.0 || y.hi() < 0.0 || x.lo() > 0.0;
    if (!ok) throw DomainError("atan2 enclosure meets the branch cut or the origin");
    double ys[2] = {y.lo(), y.hi()};
    double xs[2] = {x.lo(), x.hi()};
    double lo = kInf, hi = -kInf;
    for (double yy : ys) {
        for (double xx : xs) {
            lo = std::min(lo, eval_atan2_dir(yy, xx, false));
            hi = std::max(hi, eval_atan2_dir(yy, xx, true));
        }
    }
    check_nan(lo, hi, "atan2");
    return Enclosure(lo, hi);
}

Enclosure pi_enclosure() noexcept {
    static const Enclosure p(kPiLo, std::nextafter(kPiLo, kInf));
    return p;
}

double pad_lower(const Enclosure& x, double delta) {
    if (delta < 0.0) throw DomainError("negative padding");
    return add_down(x.lo(), -delta);
}

double pad_upper(const Enclosure& x, double delta) {
    if (delta < 0.0) throw DomainError("negative padding");
    return add_up(x.hi(), delta);
}

void set_working_precision(int bits) {
    if (bits < 53) throw ConfigError("precision_bits must be at least 53");
    if (bits > MPFR_PREC_MAX) throw ConfigError("precision_bits exceeds the MPFR limit");
    g_precision_bits.store(bits, std::memory_order_relaxed);
}

int working_precision() noexcept { return g_precision_bits.load(std::memory_order_relaxed); }

std::ostream& operator<<(std::ostream& os, const Enclosure& x) {
    auto old = os.precision(17);
    os << '[' << x.lo() << ", " << x.hi() << ']';
    os.precision(old);
    return os;
}

}  // namespace bubble
