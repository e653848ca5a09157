#pragma once

#include <functional>
#include <vector>

#include "umbra/numerics.hpp"

// Free-Electron-Laser Volterra solver:
//   da/dtau = i pi g0 int_0^tau tau' K(tau') a(tau - tau') dtau',  a(0) = 1,
// with the Gaussian-broadened kernel K(tau') = e^{-i nu tau' - (pi mu tau')^2/2}.
// Three routes: nested Hermite expansion (kernel expanded in powers of tau'),
// iterated quadrature reference, and the exact third-order ODE reduction for
// mu = 0.

namespace umbra {

struct FelParams {
    double g0 = 5.0;      // small-signal gain coefficient
    double nu = 0.0;      // detuning
    double mu_eps = 0.0;  // inhomogeneous broadening
    int order = 2;        // Volterra iteration depth, <= 3
    int trunc = 25;       // Hermite truncation M, <= 60
};

struct FelSolution {
    Complex a;                    // a(tau = 1) = 1 + sum of orders
    std::vector<Complex> orders;  // a_1 .. a_order at tau = 1
    bool truncation_warning = false;
    double gain() const { return std::norm(a) - 1.0; }
};

// Kernel plug-in point: coefficients c_m of K(tau') = sum_m c_m tau'^m.
using FelKernel = std::function<Complex(int)>;

// The FEL kernel c_m = H_m(-i nu, -(pi mu)^2/2)/m!.
FelKernel fel_gaussian_kernel(double nu, double mu_eps);
// Alternative kernel e^{-i nu tau'}/((1 - i a tau')(1 - i b tau')) expanded
// through two-variable Chebyshev polynomials.
FelKernel fel_rational_kernel(double nu, double a, double b);

FelSolution fel_hermite_solve(const FelParams& p);
FelSolution fel_hermite_solve_kernel(double g0, const FelKernel& kernel,
                                     int order, int trunc);

// Iterated trapezoid/Simpson reference on an N-point uniform tau grid.
FelSolution fel_quadrature_solve(const FelParams& p, int grid_n);
FelSolution fel_quadrature_solve_kernel(
    double g0, const std::function<Complex(double)>& kernel, int order,
    int grid_n);

struct DegenerateRoots : Error {
    using Error::Error;
};

// mu = 0 reduction: a''' + 2 i nu a'' - nu^2 a' = i pi g0 a, a(0)=1,
// a'(0)=a''(0)=0, solved through the cubic characteristic roots.
Complex fel_ode_solve(double g0, double nu, double tau_end);

}  // namespace umbra
