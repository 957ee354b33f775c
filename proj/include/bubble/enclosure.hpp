#pragma once

#include <cmath>
#include <iosfwd>
#include <numbers>

#include "bubble/errors.hpp"

namespace bubble {

// Global slack and working precision. The delta is extra padding layered on
// top of the enclosure arithmetic; precision_bits above 53 routes the
// transcendental functions through MPFR.
struct SlackConfig {
    double delta = 0x1p-24;
    int precision_bits = 53;

    void validate() const;
};

// Closed interval [lo, hi] that contains the true value of whatever was
// computed. Endpoints are doubles; every operation rounds outward.
class Enclosure {
public:
    constexpr Enclosure() noexcept = default;
    Enclosure(double x);  // NOLINT(google-explicit-constructor): point enclosure
    Enclosure(double lo, double hi);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double mid() const noexcept;
    double width() const noexcept { return hi_ - lo_; }
    bool is_point() const noexcept { return lo_ == hi_; }

    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    bool contains(const Enclosure& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Enclosure& o) const noexcept { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    bool certainly_positive() const noexcept { return lo_ > 0.0; }
    bool certainly_negative() const noexcept { return hi_ < 0.0; }

    Enclosure& operator+=(const Enclosure& o);
    Enclosure& operator-=(const Enclosure& o);
    Enclosure& operator*=(const Enclosure& o);
    Enclosure& operator/=(const Enclosure& o);

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Enclosure hull(const Enclosure& a, const Enclosure& b) noexcept;
Enclosure intersect(const Enclosure& a, const Enclosure& b);

Enclosure operator-(const Enclosure& a);
Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const Enclosure& b);

Enclosure sqr(const Enclosure& x);
Enclosure abs(const Enclosure& x);
Enclosure sqrt(const Enclosure& x);
Enclosure cbrt(const Enclosure& x);
Enclosure exp(const Enclosure& x);
Enclosure log(const Enclosure& x);
Enclosure sin(const Enclosure& x);
Enclosure cos(const Enclosure& x);
Enclosure tan(const Enclosure& x);
Enclosure cot(const Enclosure& x);
Enclosure sinh(const Enclosure& x);
Enclosure cosh(const Enclosure& x);
Enclosure tanh(const Enclosure& x);
Enclosure asin(const Enclosure& x);
Enclosure acos(const Enclosure& x);
Enclosure atan(const Enclosure& x);
Enclosure acot(const Enclosure& x);
Enclosure atanh(const Enclosure& x);
Enclosure acoth(const Enclosure& x);
Enclosure acosh(const Enclosure& x);
Enclosure atan2(const Enclosure& y, const Enclosure& x);

Enclosure pi_enclosure() noexcept;

// Certified one-sided padding: x.lo - delta rounded down, x.hi + delta rounded up.
double pad_lower(const Enclosure& x, double delta);
double pad_upper(const Enclosure& x, double delta);

// Directed rounding of a single sum, exact when the sum is representable.
double add_down(double a, double b) noexcept;
double add_up(double a, double b) noexcept;

void set_working_precision(int bits);
int working_precision() noexcept;

std::ostream& operator<<(std::ostream& os, const Enclosure& x);

// Scalar helpers so numeric kernels can be written once for double and Enclosure.
// The double overloads keep unqualified calls inside namespace bubble from
// converting a double into a point enclosure.
inline double sqrt(double x) { return std::sqrt(x); }
inline double cbrt(double x) { return std::cbrt(x); }
inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double tan(double x) { return std::tan(x); }
inline double sinh(double x) { return std::sinh(x); }
inline double cosh(double x) { return std::cosh(x); }
inline double tanh(double x) { return std::tanh(x); }
inline double asin(double x) { return std::asin(x); }
inline double acos(double x) { return std::acos(x); }
inline double atan(double x) { return std::atan(x); }
inline double atanh(double x) { return std::atanh(x); }
inline double acosh(double x) { return std::acosh(x); }
inline double abs(double x) { return std::abs(x); }
inline double atan2(double y, double x) { return std::atan2(y, x); }
inline double cot(double x) { return std::cos(x) / std::sin(x); }
inline double acot(double x) { return std::numbers::pi / 2 - std::atan(x); }
inline double acoth(double x) { return std::atanh(1.0 / x); }
inline double sqr(double x) { return x * x; }

inline double lower(double x) noexcept { return x; }
inline double upper(double x) noexcept { return x; }
inline double lower(const Enclosure& x) noexcept { return x.lo(); }
inline double upper(const Enclosure& x) noexcept { return x.hi(); }
inline double midpoint(double x) noexcept { return x; }
inline double midpoint(const Enclosure& x) noexcept { return x.mid(); }

template <class T>
T pi_const();
template <>
inline double pi_const<double>() { return std::numbers::pi; }
template <>
inline Enclosure pi_const<Enclosure>() { return pi_enclosure(); }

// Selects the first branch when pred <= 0. An enclosure that straddles zero
// returns the hull of both branches.
template <class F, class G>
double branch_nonpositive(double pred, F&& first, G&& second) {
    return pred <= 0.0 ? first() : second();
}

template <class F, class G>
Enclosure branch_nonpositive(const Enclosure& pred, F&& first, G&& second) {
    if (pred.hi() <= 0.0) return first();
    if (pred.lo() > 0.0) return second();
    return hull(first(), second());
}

}  // namespace bubble
