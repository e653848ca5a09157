#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: brute-force series, asymptotic evaluators for out-of-policy
// arguments, block-integration with Euler acceleration for conditionally
// convergent oscillatory integrals, and finite differences.

#include <cmath>
#include <functional>
#include <vector>

#include "umbra/detail/dd.hpp"
#include "umbra/numerics.hpp"
#include "umbra/specfun.hpp"

namespace oracles {

// Direct J0 series, written independently of umbra::bessel_j.
inline double j0_series(double x) {
    const double u = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int r = 1; r < 400; ++r) {
        term *= -u / (double(r) * double(r));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// J0 for large arguments through the two-term Hankel expansion; used only
// by oracles that integrate past the library's series window.
inline double j0_any(double x) {
    x = std::abs(x);
    if (x <= 35.0) return umbra::bessel_j(0.0, x);
    const double ph = x - 0.25 * umbra::pi;
    const double x2 = x * x;
    const double p = 1.0 - 9.0 / (128.0 * x2) + 11025.0 / (98304.0 * x2 * x2);
    const double q = -1.0 / (8.0 * x) + 75.0 / (1024.0 * x2 * x);
    return std::sqrt(2.0 / (umbra::pi * x)) *
           (p * std::cos(ph) - q * std::sin(ph));
}

inline double j1_any(double x) {
    const double s = x < 0.0 ? -1.0 : 1.0;
    x = std::abs(x);
    if (x <= 35.0) return s * umbra::bessel_j(1.0, x);
    const double ph = x - 0.75 * umbra::pi;
    const double x2 = x * x;
    const double p = 1.0 + 15.0 / (128.0 * x2) - 14175.0 / (98304.0 * x2 * x2);
    const double q = 3.0 / (8.0 * x) - 105.0 / (1024.0 * x2 * x);
    return s * std::sqrt(2.0 / (umbra::pi * x)) *
           (p * std::cos(ph) - q * std::sin(ph));
}

// 0F2(;1,1;-x) in double-double: the hyper-Bessel image of the b-umbra.
inline double hyper0f2(double x) {
    using namespace umbra::detail;
    DD term{1.0};
    DD sum{1.0};
    for (int n = 0; n < 600; ++n) {
        term = dd_mul(term, -x);
        const double d = double(n + 1);
        term = dd_div(term, DD{d * d * d});
        sum = dd_add(sum, term);
        if (dd_abs(term) < 1e-24 * dd_abs(sum)) break;
    }
    return static_cast<double>(sum);
}

// Conditionally convergent oscillatory integral over (a, infinity):
// integrate fixed-width blocks, then iterate pairwise averaging (Euler
// transformation) on the partial-sum sequence.
inline double oscillatory_tail(const std::function<double(double)>& f, double a,
                               double block, int nblocks) {
    umbra::QuadratureConfig qc;
    qc.rel_tol = 1e-11;
    std::vector<double> partial;
    double acc = 0.0;
    for (int k = 0; k < nblocks; ++k) {
        acc += umbra::integrate_finite(f, a + k * block, a + (k + 1) * block, qc);
        partial.push_back(acc);
    }
    while (partial.size() > 1) {
        for (size_t i = 0; i + 1 < partial.size(); ++i)
            partial[i] = 0.5 * (partial[i] + partial[i + 1]);
        partial.pop_back();
    }
    return partial[0];
}

// Symmetric finite difference stencils.
inline double fd1(const std::function<double(double)>& f, double x,
                  double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double fd2(const std::function<double(double)>& f, double x,
                  double h = 1e-4) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace oracles
