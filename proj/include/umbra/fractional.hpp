#pragma once

#include <vector>

#include "umbra/numerics.hpp"

// Riemann-Liouville derivatives of powers, the time-fractional diffusion
// solver (spectral multiplier E_{alpha,1}(-t^alpha k^2) over a direct DFT)
// and the fractional Poisson / fractional Schroedinger photon statistics.

namespace umbra {

struct GridFunction {
    double x0 = 0.0;
    double dx = 1.0;
    std::vector<Complex> samples;
    int size() const { return static_cast<int>(samples.size()); }
    double x(int j) const { return x0 + j * dx; }
};

// d^alpha/dx^alpha x^nu = Gamma(nu+1)/Gamma(nu-alpha+1) x^{nu-alpha}.
double rl_derivative_power(double alpha, double nu, double x);

// |d^alpha E_{a,1}(l x^a) - l E - x^{-a}/Gamma(1-a)| with the derivative
// applied termwise through rl_derivative_power.
double ml_eigen_residual(double alpha, double lambda, double x,
                         const SeriesConfig& cfg = {});

GridFunction frac_diffusion_solve(const GridFunction& f, double alpha, double t,
                                  const SeriesConfig& cfg = {});

struct FracPoissonParams {
    double alpha;  // in (0, 1]
    double omega;  // > 0, units t^{-alpha}
    double t;      // >= 0
};

double frac_poisson_pmf(const FracPoissonParams& p, int m,
                        const SeriesConfig& cfg = {});
double frac_poisson_mean(const FracPoissonParams& p);
double frac_poisson_var(const FracPoissonParams& p);

// Fractional Schroedinger photon statistics; X = (Omega t^alpha)^2.
// The pmf is not positively defined for all (alpha, X) and is returned
// as computed.
double fse_pmf(double alpha, double X, int m, const SeriesConfig& cfg = {});
double fse_mean(double alpha, double X);
double fse_var(double alpha, double X);
double mandel_q(double alpha, double X);

}  // namespace umbra
