#include "umbra/umbral.hpp"

#include <cmath>
#include <limits>

namespace umbra {

namespace {

bool is_multiple_of(double nu, int m, double tol = 1e-9) {
    const double q = nu / m;
    return std::abs(q - std::round(q)) <= tol;
}

}  // namespace

MomentFunctional moment_trivial() {
    return {"trivial", [](double) { return Complex(1.0); }, "none"};
}

MomentFunctional moment_c() {
    return {"c", [](double nu) { return Complex(1.0) / gamma_fn(Complex(nu + 1.0)); },
            "none (entire reciprocal gamma)"};
}

MomentFunctional moment_b() {
    return {"b",
            [](double nu) {
                const Complex g = gamma_fn(Complex(nu + 1.0));
                return Complex(1.0) / (g * g);
            },
            "none"};
}

MomentFunctional moment_d(double alpha, double beta) {
    return {"d_{" + std::to_string(alpha) + "," + std::to_string(beta) + "}",
            [alpha, beta](double nu) {
                return gamma_fn(Complex(nu + 1.0)) /
                       gamma_fn(Complex(alpha * nu + beta));
            },
            "nu at non-positive integers"};
}

MomentFunctional moment_c_shift(double alpha) {
    return {"c^(" + std::to_string(alpha) + "+.)",
            [alpha](double nu) {
                return Complex(1.0) / gamma_fn(Complex(nu + alpha + 1.0));
            },
            "none"};
}

MomentFunctional moment_hermite(double y, int m) {
    if (m < 1) throw DomainError("moment_hermite: order must be >= 1");
    return {"yh_" + std::to_string(m),
            [y, m](double nu) -> Complex {
                if (nu < -0.5) throw DomainError("hermite moment: negative index");
                if (!is_multiple_of(nu, m)) return Complex(0.0);
                const int s = static_cast<int>(std::round(nu / m));
                const int n = m * s;
                // y^s n! / s!
                double v = std::pow(y, s);
                v *= factorial(n) / factorial(s);
                return Complex(v);
            },
            "nu < 0"};
}

MomentFunctional moment_pochhammer(double nu) {
    return {"gamma_poch(" + std::to_string(nu) + ")",
            [nu](double r) -> Complex {
                const double ri = std::round(r);
                if (std::abs(r - ri) < 1e-9 && ri >= 0.0)
                    return Complex(pochhammer(nu, static_cast<int>(ri)));
                // Real order: Gamma(nu+r)/Gamma(nu).
                return gamma_fn(Complex(nu + r)) / gamma_fn(Complex(nu));
            },
            "nu + r at non-positive integers for non-integer r"};
}

MomentFunctional moment_factorial() {
    return {"f", [](double r) { return gamma_fn(Complex(r + 1.0)); },
            "r at negative integers"};
}

MomentFunctional moment_digamma() {
    return {"chi", [](double a) { return Complex(digamma(a + 1.0)); },
            "a at negative integers"};
}

MomentFunctional moment_harmonic() {
    // The vacuum term is 1 (empty action) even though h_0 = 0; positive real
    // index through h_x = psi(x+1) + gamma, equivalent to the Euler integral
    // of (1-t^x)/(1-t) on (0,1).
    return {"h",
            [](double n) {
                if (n == 0.0) return Complex(1.0);
                return Complex(digamma(n + 1.0) + euler_gamma);
            },
            "n at negative integers; vacuum value 1 at n = 0"};
}

MomentFunctional moment_trunc_exp() {
    return {"e",
            [](double a) -> Complex {
                // e_a = (1/Gamma(a+1)) int_0^inf e^{-s} (1+s)^a ds
                const double g = gamma_fn(a + 1.0);
                QuadratureConfig qc;
                qc.rel_tol = 1e-12;
                const double v = integrate_halfline(
                    [a](double s) { return std::exp(-s) * std::pow(1.0 + s, a); },
                    qc);
                return Complex(v / g);
            },
            "a at negative integers (Gamma pole)"};
}

SeriesResult umbral_exp(const MomentFunctional& m, Complex x, double slope_a,
                        double offset_b, const SeriesConfig& cfg) {
    Complex power(1.0, 0.0);
    double rfact = 1.0;
    return sum_series(
        [&](int r) {
            if (r > 0) {
                power *= x;
                rfact *= r;
            }
            return power / rfact * m(slope_a * r + offset_b);
        },
        cfg);
}

SeriesResult umbral_geometric(const MomentFunctional& m, Complex x,
                              double slope_a, double offset_b,
                              const SeriesConfig& cfg) {
    Complex power(1.0, 0.0);
    return sum_series(
        [&](int r) {
            if (r > 0) power *= x;
            return power * m(slope_a * r + offset_b);
        },
        cfg);
}

Complex umbral_binomial_pow(const MomentFunctional& m, Complex x, Complex y,
                            int n) {
    if (n < 0) throw DomainError("umbral_binomial_pow: n must be >= 0");
    Complex sum(0.0);
    double binom = 1.0;
    for (int r = 0; r <= n; ++r) {
        sum += binom * std::pow(x, n - r) * std::pow(y, r) * m(r);
        binom *= static_cast<double>(n - r) / (r + 1);
    }
    return sum;
}

Complex tensor_binomial_pow(const MomentFunctional& m1,
                            const MomentFunctional& m2, Complex xi,
                            Complex eta, int n, double alpha, double beta) {
    if (n < 0) throw DomainError("tensor_binomial_pow: n must be >= 0");
    Complex sum(0.0);
    double binom = 1.0;
    for (int r = 0; r <= n; ++r) {
        sum += binom * std::pow(xi, n - r) * std::pow(eta, r) *
               m1(n - r + alpha) * m2(r + beta);
        binom *= static_cast<double>(n - r) / (r + 1);
    }
    return sum;
}

WeightSequence weight_lbs() {
    return {"lbs", [](int n) {
                if (n > 170) return std::numeric_limits<double>::infinity();
                const double f = factorial(n);
                return f * f;
            }};
}

WeightSequence weight_ml(double alpha) {
    if (alpha <= 0.0) throw DomainError("weight_ml: alpha must be > 0");
    return {"ml(" + std::to_string(alpha) + ")", [alpha](int n) {
                return std::exp(std::lgamma(alpha * n + 1.0));
            }};
}

WeightSequence weight_gegenbauer(double nu) {
    if (nu <= 0.0) throw DomainError("weight_gegenbauer: nu must be > 0");
    return {"gegenbauer(" + std::to_string(nu) + ")", [nu](int n) {
                double w = 1.0;  // n!/(nu)_n as a stable ratio product
                for (int k = 1; k <= n; ++k) w *= k / (nu + k - 1.0);
                return w;
            }};
}

WeightSequence weight_laguerre_alpha(double alpha) {
    if (alpha < 0.0) throw DomainError("weight_laguerre_alpha: alpha >= 0");
    return {"laguerre_alpha(" + std::to_string(alpha) + ")", [alpha](int n) {
                return std::exp(std::lgamma(n + 1.0) +
                                std::lgamma(n + alpha + 1.0) -
                                std::lgamma(alpha + 1.0));
            }};
}

WeightSequence weight_humbert(double alpha, double beta) {
    if (alpha < 0.0 || beta < 0.0)
        throw DomainError("weight_humbert: orders must be >= 0");
    return {"humbert", [alpha, beta](int n) {
                return std::exp(std::lgamma(n + 1.0) +
                                std::lgamma(n + alpha + 1.0) +
                                std::lgamma(n + beta + 1.0) -
                                std::lgamma(alpha + 1.0) -
                                std::lgamma(beta + 1.0));
            }};
}

Complex deformed_binomial_pow(const WeightSequence& w, Complex x, Complex y,
                              int n) {
    if (n < 0) throw DomainError("deformed_binomial_pow: n must be >= 0");
    const double wn = w(n);
    if (!std::isfinite(wn))
        throw DomainError("deformed_binomial_pow: weight overflow at n = " +
                          std::to_string(n));
    Complex sum(0.0);
    for (int r = 0; r <= n; ++r)
        sum += wn / (w(n - r) * w(r)) * std::pow(x, n - r) * std::pow(y, r);
    return sum;
}

SeriesResult deformed_exp(const WeightSequence& w, Complex x,
                          const SeriesConfig& cfg) {
    Complex power(1.0);
    return sum_series(
        [&](int n) {
            if (n > 0) power *= x;
            return power / w(n);
        },
        cfg);
}

Complex ramanujan_master(const MomentFunctional& m, double nu) {
    if (nu <= 0.0) throw DomainError("ramanujan_master: nu must be > 0");
    return gamma_fn(Complex(nu)) * m(-nu);
}

}  // namespace umbra
