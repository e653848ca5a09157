#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "umbra/fractional.hpp"
#include "umbra/specfun.hpp"

using namespace umbra;

TEST_CASE("Riemann-Liouville derivative of powers") {
    CHECK(rl_derivative_power(1.0, 2.0, 3.0) == doctest::Approx(6.0));
    // Fractional derivative of a constant does not vanish.
    CHECK(rl_derivative_power(0.5, 0.0, 1.0) ==
          doctest::Approx(0.5641895835477563).epsilon(1e-14));
    // Semigroup spot check: half-derivative applied twice equals d/dx.
    for (double x : {0.5, 1.0, 2.5}) {
        const double once = rl_derivative_power(0.5, 1.0, x);  // ~ x^{1/2}
        const double coeff = once / std::pow(x, 0.5);
        const double twice = coeff * rl_derivative_power(0.5, 0.5, x);
        CHECK(twice == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(rl_derivative_power(0.5, 0.0, -1.0), DomainError);
}

TEST_CASE("Mittag-Leffler eigenfunction residual") {
    SeriesConfig sc;
    CHECK(ml_eigen_residual(1.0, -0.8, 1.3, sc) < 1e-10);
    CHECK(ml_eigen_residual(0.5, -1.0, 1.0, sc) < 1e-9);
    CHECK(ml_eigen_residual(0.75, 0.3, 2.0, sc) < 1e-9);
}

TEST_CASE("fractional diffusion solver") {
    auto gaussian_grid = [](int n, double half_width) {
        GridFunction f;
        f.x0 = -half_width;
        f.dx = 2.0 * half_width / n;
        f.samples.resize(n);
        for (int j = 0; j < n; ++j)
            f.samples[j] = std::exp(-f.x(j) * f.x(j));
        return f;
    };
    // t = 0 returns the input exactly (multiplier is 1).
    {
        const GridFunction f = gaussian_grid(128, 8.0);
        const GridFunction out = frac_diffusion_solve(f, 1.3, 0.0);
        for (int j = 0; j < f.size(); ++j)
            CHECK(std::abs(out.samples[j] - f.samples[j]) < 1e-12);
    }
    // Glaisher closed form at alpha = 1.
    {
        const GridFunction f = gaussian_grid(256, 10.0);
        const GridFunction out = frac_diffusion_solve(f, 1.0, 0.25);
        for (int j = 0; j < f.size(); ++j) {
            const double x = out.x(j);
            CHECK(std::abs(out.samples[j] -
                           Complex(std::exp(-x * x / 2.0) / std::sqrt(2.0))) <
                  1e-7);
        }
    }
    // Mass conservation at alpha = 1.5 (k = 0 multiplier is 1).
    {
        const GridFunction f = gaussian_grid(256, 10.0);
        const GridFunction out = frac_diffusion_solve(f, 1.5, 0.5);
        Complex mass(0.0);
        for (const auto& v : out.samples) mass += v;
        mass *= out.dx;
        CHECK(std::abs(mass.real() - std::sqrt(pi)) <= 1e-6 * std::sqrt(pi));
        CHECK(std::abs(mass.imag()) <= 1e-9);
    }
    // Linearity.
    {
        const GridFunction f = gaussian_grid(128, 8.0);
        GridFunction g = f;
        for (int j = 0; j < g.size(); ++j) {
            const double x = g.x(j);
            g.samples[j] = x * std::exp(-x * x);
        }
        GridFunction combo = f;
        for (int j = 0; j < combo.size(); ++j)
            combo.samples[j] = 2.0 * f.samples[j] - 0.5 * g.samples[j];
        const GridFunction a = frac_diffusion_solve(f, 1.5, 0.3);
        const GridFunction b = frac_diffusion_solve(g, 1.5, 0.3);
        const GridFunction c = frac_diffusion_solve(combo, 1.5, 0.3);
        for (int j = 0; j < c.size(); ++j) {
            CHECK(std::abs(c.samples[j] -
                           (2.0 * a.samples[j] - 0.5 * b.samples[j])) < 1e-10);
        }
    }
    // Edge-decay precondition.
    GridFunction bad;
    bad.x0 = -1.0;
    bad.dx = 2.0 / 64;
    bad.samples.assign(64, Complex(1.0));
    CHECK_THROWS_AS(frac_diffusion_solve(bad, 1.0, 0.1), DomainError);
}

TEST_CASE("fractional Poisson distribution") {
    SeriesConfig sc;
    sc.max_terms = 3000;
    // alpha = 1 collapses to the classical Poisson law.
    const FracPoissonParams classical{1.0, 2.0, 1.0};
    for (int m = 0; m <= 10; ++m) {
        const double expect = std::exp(-2.0) * std::pow(2.0, m) / factorial(m);
        CHECK(frac_poisson_pmf(classical, m, sc) ==
              doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(frac_poisson_mean(classical) == doctest::Approx(2.0));
    CHECK(frac_poisson_var(classical) == doctest::Approx(2.0).epsilon(1e-14));
    // Normalization and first moment, brute force.
    const FracPoissonParams p{0.7, 2.0, 1.0};
    double s0 = 0.0, s1 = 0.0;
    for (int m = 0; m <= 80; ++m) {
        const double pm = frac_poisson_pmf(p, m, sc);
        s0 += pm;
        s1 += m * pm;
    }
    CHECK(std::abs(s0 - 1.0) < 1e-8);
    CHECK(s1 == doctest::Approx(frac_poisson_mean(p)).epsilon(1e-7));
    // Policy errors.
    CHECK_THROWS_AS(frac_poisson_pmf({0.5, 25.0, 1.0}, 0, sc), NonConvergence);
    // (alpha, w) = (0.3, 5): the series cancellation exceeds any fixed
    // precision (largest term ~ exp(w^{1/alpha})).
    CHECK_THROWS_AS(frac_poisson_pmf({0.3, 5.0, 1.0}, 0, sc), NonConvergence);
}

TEST_CASE("fractional Schroedinger photon statistics") {
    SeriesConfig sc;
    sc.max_terms = 3000;
    CHECK(fse_mean(1.0, 1.7) == doctest::Approx(1.7).epsilon(1e-14));
    for (double X : {0.5, 1.0, 2.0})
        CHECK(std::abs(mandel_q(1.0, X)) < 1e-10);
    // alpha = 1: coherent state, Poisson in X.
    for (int m = 0; m <= 8; ++m) {
        const double expect = std::exp(-1.0) / factorial(m);
        CHECK(fse_pmf(1.0, 1.0, m, sc) ==
              doctest::Approx(expect).epsilon(1e-11));
    }
    // Normalization at alpha = 0.8.
    double s0 = 0.0;
    for (int m = 0; m <= 60; ++m) s0 += fse_pmf(0.8, 1.0, m, sc);
    CHECK(std::abs(s0 - 1.0) < 1e-7);
    // The pmf is not positively defined and is returned without clamping:
    // deep-tail values come back signed as computed.
    double most_negative = 0.0;
    for (int m = 0; m <= 50; ++m)
        most_negative = std::min(most_negative, fse_pmf(0.55, 0.2, m, sc));
    CHECK(most_negative < 0.0);
    // The series representation diverges for alpha <= 1/2 and loses all
    // precision just above it at moderate X.
    CHECK_THROWS_AS(fse_pmf(0.3, 1.0, 0, sc), NonConvergence);
    CHECK_THROWS_AS(fse_pmf(0.7, 2.0, 20, sc), NonConvergence);
    CHECK_THROWS_AS(fse_pmf(1.0, 20.0, 0, sc), NonConvergence);
}
