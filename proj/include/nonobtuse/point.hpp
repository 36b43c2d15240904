#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "rational.hpp"

namespace nonobtuse {

// Closed double interval certified to contain an exact value. Used as a
// floating-point filter in front of the exact predicates; whenever a sign
// cannot be certified the caller falls back to rational arithmetic.
struct Interval {
    double lo, hi;

    static Interval everything() {
        const double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }
    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

namespace detail {

inline double next_up(double v) {
    return std::nextafter(v, std::numeric_limits<double>::infinity());
}
inline double next_down(double v) {
    return std::nextafter(v, -std::numeric_limits<double>::infinity());
}

}  // namespace detail

inline Interval interval_of(const Rational& q) {
    const double d = q.approx();  // rounded toward zero, < 1 ulp off
    if (!std::isfinite(d)) return Interval::everything();
    if (q.sign() >= 0) return {d, detail::next_up(d)};
    return {detail::next_down(d), d};
}

// Ordinary round-to-nearest arithmetic nudged outward one ulp per bound;
// keeps the enclosure valid without touching the FPU rounding mode.
inline Interval operator+(const Interval& a, const Interval& b) {
    if (!a.finite() || !b.finite()) return Interval::everything();
    return {detail::next_down(a.lo + b.lo), detail::next_up(a.hi + b.hi)};
}
inline Interval operator-(const Interval& a, const Interval& b) {
    if (!a.finite() || !b.finite()) return Interval::everything();
    return {detail::next_down(a.lo - b.hi), detail::next_up(a.hi - b.lo)};
}
inline Interval operator*(const Interval& a, const Interval& b) {
    if (!a.finite() || !b.finite()) return Interval::everything();
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {detail::next_down(lo), detail::next_up(hi)};
}

// +1 / -1 when the sign is certain, 0 for a certified zero, and nullopt-like
// sentinel 2 when the interval straddles zero.
inline int interval_sign(const Interval& v) {
    if (v.lo > 0) return +1;
    if (v.hi < 0) return -1;
    if (v.lo == 0 && v.hi == 0) return 0;
    return 2;
}

// 2D point over exact rationals. Immutable; caches a double enclosure per
// coordinate and, when both coordinates are modest integers, their int64
// values, so predicates can take fast exact paths.
class Point {
public:
    Point() { init(); }
    Point(Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) { init(); }
    Point(std::int64_t x, std::int64_t y) : x_(static_cast<long long>(x)), y_(static_cast<long long>(y)) { init(); }

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Interval& xi() const { return xi_; }
    const Interval& yi() const { return yi_; }

    bool int_coords() const { return int_coords_; }
    std::int64_t x64() const { return x64_; }
    std::int64_t y64() const { return y64_; }

    friend bool operator==(const Point& a, const Point& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

private:
    void init() {
        xi_ = interval_of(x_);
        yi_ = interval_of(y_);
        int_coords_ = x_.fits_int64() && y_.fits_int64();
        if (int_coords_) {
            x64_ = x_.to_int64();
            y64_ = y_.to_int64();
            const std::int64_t cap = std::int64_t{1} << 31;
            int_coords_ = x64_ > -cap && x64_ < cap && y64_ > -cap && y64_ < cap;
        }
        if (!int_coords_) { x64_ = 0; y64_ = 0; }
    }

    Rational x_, y_;
    Interval xi_{}, yi_{};
    std::int64_t x64_ = 0, y64_ = 0;
    bool int_coords_ = false;
};

// Lexicographic (x, then y) exact order; doubles as the "along a common
// line" order for collinear points.
inline bool lex_less(const Point& a, const Point& b) {
    const int cx = compare(a.x(), b.x());
    if (cx != 0) return cx < 0;
    return compare(a.y(), b.y()) < 0;
}

}  // namespace nonobtuse
