#pragma once

#include <span>
#include <vector>

#include "umbra/numerics.hpp"
#include "umbra/rational.hpp"

// Polynomial families with dual evaluation paths: floating point for
// numerics and exact rationals for the identity batteries.  Negative-order
// members are functions, evaluated by quadrature of their integral
// representations.

namespace umbra {

// --- direct floating evaluations -------------------------------------------

double hermite2(int n, double x, double y);              // H_n(x,y)
Complex hermite2_c(int n, Complex x, Complex y);
double hermite_m(int n, int m, double x, double y);      // lacunary H_n^{(m)}
// Complete p-variable Hermite H_n^{(p,p-1,...,1)}(x_1..x_p) by the nested
// recurrence (cost O(n^2/p) per value, not multinomial enumeration).
double hermite_multi(int n, std::span<const double> xs);
double laguerre2(int n, double x, double y);             // L_n(x,y)
double laguerre_lambda(int n, double alpha, double x, double y);  // c^a (y-c x)^n
double laguerre_assoc(int n, double alpha, double x, double y);   // L_n^{(a)}
double gegenbauer_k(int n, double nu, double xi, double eta);     // K_n^{(nu)}
double jacobi_r(int n, double alpha, double beta, double xi, double eta);
double jacobi_p(int n, double alpha, double beta, double x);
double legendre_p(int n, double x);
double legendre_pi(int n, double x, double y);           // hybrid Pi_n
double legendre2(int n, double x, double y);             // P_n(x,y), 1/sqrt gen.
Complex chebyshev_u2(int n, Complex x, Complex y);       // U_n(x,y)
double chebyshev_u2(int n, double x, double y);
double chebyshev_u_lacunary(int n, int m, double x, double y);
double lambda_poly(int n, double x, double y);           // lambda_n
double lambda_assoc(int n, double nu, double x, double y);
double mlh(int n, double alpha, double x, double y);     // Mittag-Leffler-Hermite
double harmonic_poly(int n, double x);                   // h_n(x)
double harmonic_hermite(int n, double x);                // H_n(x, h-umbra)
double trunc_exp_poly(int n, double x);                  // e_n(x)
double hybrid_p(int n, int q, double x, double y);       // P_n^{(q)}(x,y)

// --- negative order / real index functions (quadrature) --------------------

double hermite_neg(double nu, double x, double y, const QuadratureConfig& = {});
double laguerre_neg(double nu, double x, double y, const QuadratureConfig& = {});
double legendre_pi_neg(double nu, double x, double y,
                       const QuadratureConfig& = {});
// H_nu(x, -y) through the cosine integral representation, real nu.
double hermite_frac(double nu, double x, double y, const QuadratureConfig& = {});

// d^n/dx^n (1+x^2)^{-nu} via the Gegenbauer K-polynomial closed form.
double gegenbauer_derivative_formula(int n, double nu, double x);

// Laguerre heat evolution, dF/dy = -d_x x d_x F.
double laguerre_heat_evolve_exp(double y, double x);      // F(x,0) = e^{-x}
double laguerre_heat_evolve_monomial(int n, double y, double x);

// Burchnall expansion (x + 2y d_x)^n f given f^{(0..n)} at x.
double burchnall_expand(int n, double x, double y,
                        std::span<const double> f_derivatives);

enum class NegDerivativeKind { Plain, CosWeight };
// int_0^x f = sum_s (-1)^s x^{s+1}/(s+1)! f^{(s)}(x); CosWeight integrates
// f(xi) cos(xi) with the same machinery.
double neg_derivative_integral(std::span<const double> f_derivatives, double x,
                               NegDerivativeKind kind = NegDerivativeKind::Plain,
                               const SeriesConfig& cfg = {});

// --- PolynomialSpec-driven evaluation (CLI surface) -------------------------

enum class PolyFamily {
    Hermite2,
    HermiteM,
    HermiteMulti,
    HermiteNeg,
    Laguerre2,
    LaguerreAssoc,
    LaguerreNeg,
    GegenbauerK,
    JacobiR,
    JacobiP,
    Legendre,
    LegendrePi,
    Legendre2,
    ChebyshevU,
    ChebyshevULacunary,
    Lambda,
    LambdaAssoc,
    MLH,
    HarmonicPoly,
    HarmonicHermite,
    TruncExpPoly,
    Hybrid,
};

struct PolynomialSpec {
    PolyFamily family;
    double n = 0;                 // degree (real for the *Neg families)
    std::vector<double> params;   // family parameters (m, alpha, beta, nu, q)
    std::vector<double> point;    // evaluation point
};

double poly_eval(const PolynomialSpec& spec);
PolyFamily poly_family_from_name(const std::string& name);

// Exact evaluation at rational points for the families whose coefficients
// are rational (identity-test backbone).  DomainError for families that
// need transcendental coefficients.
Rational poly_eval_exact(PolyFamily family, int n,
                         const std::vector<Rational>& params,
                         const std::vector<Rational>& point);

// --- exact rational path ----------------------------------------------------

RatPoly2 hermite2_poly_q(int n);                    // H_n as polynomial in (x,y)
RatPoly2 laguerre2_poly_q(int n);                   // L_n(x,y)
std::vector<Rational> legendre_coeffs_q(int n);     // P_n(x), coeff of x^k
std::vector<Rational> jacobi_coeffs_q(int n, const Rational& alpha,
                                      const Rational& beta);
Rational laguerre2_q(int n, const Rational& x, const Rational& y);
Rational hermite2_q(int n, const Rational& x, const Rational& y);
// MLH coefficient of x^{n-2r} g_r (g_r = 1/Gamma(alpha r + 1) kept formal).
std::vector<Rational> mlh_formal_coeffs_q(int n);

}  // namespace umbra
