#pragma once

#include <cmath>

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used internally to evaluate strongly cancelling alternating series
// (Bessel-type) whose condition number I(|x|)/|J(x)| approaches 1e18 at the
// edge of the series validity window.  Only the operations the series
// recurrences need are provided.

namespace umbra::detail {

struct DD {
    double hi = 0.0, lo = 0.0;
    DD() = default;
    constexpr DD(double h, double l = 0.0) : hi(h), lo(l) {}
    explicit operator double() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_sub(const DD& a, const DD& b) {
    return dd_add(a, DD{-b.hi, -b.lo});
}

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul(const DD& a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div(const DD& a, const DD& b) {
    const double q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul(b, q1));
    const double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    const double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return dd_add(q, DD{q3});
}

inline DD dd_div(const DD& a, double b) { return dd_div(a, DD{b}); }

inline double dd_abs(const DD& a) { return std::abs(a.hi + a.lo); }

// Double-double constants (hi/lo splits of the 32-digit values).
inline constexpr DD dd_ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DD dd_euler_gamma{0.5772156649015329, -4.942915152430645e-18};

// ln(u) for u > 0 to double-double accuracy: u = m 2^k with m in [1, 2),
// ln m = 2 atanh((m-1)/(m+1)) summed termwise in double-double.
inline DD dd_log(double u) {
    int k;
    const double m = std::frexp(u, &k) * 2.0;  // m in [1, 2)
    --k;
    const DD z = dd_div(DD{m - 1.0}, DD{m + 1.0});  // m-1, m+1 exact
    const DD z2 = dd_mul(z, z);
    DD power = z;
    DD sum = z;
    for (int j = 3; j < 60; j += 2) {
        power = dd_mul(power, z2);
        const DD term = dd_div(power, DD{double(j)});
        sum = dd_add(sum, term);
        if (dd_abs(term) < 1e-34 * dd_abs(sum)) break;
    }
    sum = dd_mul(sum, 2.0);
    return dd_add(sum, dd_mul(dd_ln2, double(k)));
}

}  // namespace umbra::detail
