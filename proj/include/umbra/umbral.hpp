#pragma once

#include <functional>
#include <string>

#include "umbra/numerics.hpp"

// The umbral core.  A MomentFunctional is a pure map nu -> value realizing
// an operator acting on its vacuum; series and binomial evaluators expand
// every expression into a linear combination of single moments before
// evaluation.  Moments are never multiplied where exponents should add.

namespace umbra {

struct MomentFunctional {
    std::string name;
    std::function<Complex(double)> moment;   // nu -> c^nu acting on the vacuum
    std::string pole_set;                    // description of undefined nu
    Complex operator()(double nu) const { return moment(nu); }
};

// Shipped moment functionals --------------------------------------------------

MomentFunctional moment_trivial();                 // nu -> 1
MomentFunctional moment_c();                       // nu -> 1/Gamma(nu+1)
MomentFunctional moment_b();                       // nu -> 1/Gamma(nu+1)^2
MomentFunctional moment_d(double alpha, double beta);  // Gamma(nu+1)/Gamma(a nu+b)
MomentFunctional moment_c_shift(double alpha);     // nu -> 1/Gamma(nu+alpha+1)
MomentFunctional moment_hermite(double y, int m = 2);  // y^(nu/m) nu!/ (nu/m)! on multiples of m
MomentFunctional moment_pochhammer(double nu);     // r -> (nu)_r
MomentFunctional moment_factorial();               // r -> r!
MomentFunctional moment_digamma();                 // a -> psi(a+1)
MomentFunctional moment_harmonic();                // n -> h_n, real index via psi(x+1)+gamma
MomentFunctional moment_trunc_exp();               // a -> e_a (truncated exponential number)

// Evaluators ------------------------------------------------------------------

// sum_r x^r / r! * m(a r + b): the umbral exponential image.
SeriesResult umbral_exp(const MomentFunctional& m, Complex x, double slope_a,
                        double offset_b, const SeriesConfig& cfg = {});

// sum_r x^r * m(a r + b): the umbral geometric image (narrower convergence,
// reported through the flag).
SeriesResult umbral_geometric(const MomentFunctional& m, Complex x,
                              double slope_a, double offset_b,
                              const SeriesConfig& cfg = {});

// sum_r C(n,r) x^(n-r) y^r m(r): exact finite binomial image.
Complex umbral_binomial_pow(const MomentFunctional& m, Complex x, Complex y,
                            int n);

// Two independent umbrae: c1^alpha c2^beta [c1 xi + c2 eta]^n phi phi.
// Expands to sum_r C(n,r) xi^(n-r) eta^r m1(n-r+alpha) m2(r+beta).
Complex tensor_binomial_pow(const MomentFunctional& m1,
                            const MomentFunctional& m2, Complex xi,
                            Complex eta, int n, double alpha = 0.0,
                            double beta = 0.0);

// Deformed binomials ----------------------------------------------------------

struct WeightSequence {
    std::string name;
    std::function<double(int)> w;  // w(n) > 0, w(0) = 1
    double operator()(int n) const { return w(n); }
};

WeightSequence weight_lbs();                        // (n!)^2
WeightSequence weight_ml(double alpha);             // Gamma(alpha n + 1)
WeightSequence weight_gegenbauer(double nu);        // n!/(nu)_n
WeightSequence weight_laguerre_alpha(double alpha); // n! G(n+a+1)/G(a+1)
WeightSequence weight_humbert(double alpha, double beta);

// (x (+)_w y)^n = sum_r [w(n)/(w(n-r) w(r))] x^(n-r) y^r
Complex deformed_binomial_pow(const WeightSequence& w, Complex x, Complex y,
                              int n);

// f_w(x) = sum_n x^n / w(n)
SeriesResult deformed_exp(const WeightSequence& w, Complex x,
                          const SeriesConfig& cfg = {});

// Ramanujan Master Theorem prediction for int_0^inf x^(nu-1) f(x) dx when
// f(x) = sum m(n) (-x)^n / n!:  Gamma(nu) m(-nu).
Complex ramanujan_master(const MomentFunctional& m, double nu);

}  // namespace umbra
