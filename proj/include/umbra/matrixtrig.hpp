#pragma once

#include <array>

#include "umbra/numerics.hpp"

// Generalized trigonometric functions of 2x2/3x3 matrices through
// Cayley-Hamilton eigen-interpolation, matrix-to-exponent parameterization,
// matrix roots (eigen and Levy-transform routes) and the scalar Laguerre /
// pseudo-hyperbolic trigonometries.  Degenerate spectra are rejected:
// the interpolation divides by eigenvalue differences.

namespace umbra {

struct Gtf2Result {
    Complex C, S;     // e^{tM} = C 1 + S M
    EigenPair2 eig;
};

struct Gtf3Result {
    Complex C0, C1, C2;  // e^{tM} = C0 1 + C1 M + C2 M^2
    EigenTriple3 eig;
};

// The eigenvalue pair acts as a conjugate pair of generalized imaginary
// units: any zeta = x + lambda y forms a two-component number system with
// modulus x^2 + Tr x y + Det y^2 (not implemented beyond this note).
Gtf2Result gtf2(const MatC2& M, double t);
// c_nu, s_nu: GTF with e^{lambda t} replaced by lambda^nu (principal branch).
std::pair<Complex, Complex> gtf2_coeff(const MatC2& M, double nu);
Gtf3Result gtf3(const MatC3& M, double t);
std::array<Complex, 3> gtf3_coeff(const MatC3& M, double nu);

// Reconstruction helpers.
MatC2 gtf2_reconstruct(const Gtf2Result& r, const MatC2& M);
MatC3 gtf3_reconstruct(const Gtf3Result& r, const MatC3& M);

// Fresnel-type integrals int_R C(-t^2) dt = sqrt(pi) c_{-1/2} (and the S
// analogue); requires Re lambda > 0 for convergence.
std::pair<Complex, Complex> gtf2_gauss_integral(const MatC2& M);

// Courant-Snyder style parameterization: T with e^T = Sigma.
MatC2 matrix_log_param2(const MatC2& sigma);
MatC3 matrix_log_param3(const MatC3& sigma);

// e^{tau A^{1/n}} assembled as e^{f0 tau} e^{f1 tau A} (e^{f2 tau A^2}),
// every factor reconstructed on A's spectrum.
MatC2 matrix_root_exp_eigen(const MatC2& A, double tau, int root);
MatC3 matrix_root_exp_eigen(const MatC3& A, double tau, int root);

// e^{-tau sqrt(A)} = int_0^inf g_{1/2}(eta) e^{-eta tau^2 A} d eta with the
// Levy-Smirnov density; requires Re lambda(A) > 0.
MatC2 matrix_sqrt_exp_levy(const MatC2& A, double tau,
                           const QuadratureConfig& cfg = {});

using Vec2 = std::array<Complex, 2>;

// Y(t) = C(t sqrt(A)) Y0 + (1/sqrt(A)) S(t sqrt(A)) Ydot0 for Y'' = -A Y.
Vec2 second_order_evolve(const MatC2& A, const Vec2& y0, const Vec2& ydot0,
                         double t);

struct AxionParams {
    double n_refr;    // photon refractive index
    double coupling;  // G = g B / omega
    double mass_ratio;  // mu = m_a / omega
};

// (|gamma|^2, |a|^2) for the axion-photon two-state system at phase
// omega t, initial state (1, 0).
std::pair<double, double> axion_photon_prob(const AxionParams& p, double omega_t);
// Small-coupling closed form |a|^2 = sin^2(f1 G omega t) valid for
// n ~ 1, mu << 1.
double axion_photon_prob_smallg(const AxionParams& p, double omega_t);

// --- scalar Laguerre trigonometry -------------------------------------------

double l_exp(double x, const SeriesConfig& cfg = {});   // sum x^r/(r!)^2
double l_cos(double x, const SeriesConfig& cfg = {});
double l_sin(double x, const SeriesConfig& cfg = {});
double oplus_l_pow(double x, double y, int n);          // (x (+)_l y)^n
double otimes_l_pow(int k, double x, int n);            // (k (x)_l x)^n

// --- pseudo-hyperbolic functions of order 3 ----------------------------------

double phf3(int k, double x, const SeriesConfig& cfg = {});  // sum x^{3r+k}/(3r+k)!
double phf3_ch(double x, const SeriesConfig& cfg = {});
double phf3_sh(double x, const SeriesConfig& cfg = {});
// (x (+)_{[0,3]} y)^N = (1/3) sum_p (x + w_p y)^N over cubic roots of unity.
double oplus_phf3_pow(double x, double y, int N);

}  // namespace umbra
