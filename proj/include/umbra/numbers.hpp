#pragma once

#include <vector>

#include "umbra/numerics.hpp"
#include "umbra/rational.hpp"

// Exact and real-index special numbers: harmonic families, the harmonic
// based exponential function with its Gosper closed form, truncated
// exponential numbers, and the Motzkin/telephone machinery.  All sequence
// identities run in exact arithmetic; floats appear only for real-index
// extensions.

namespace umbra {

// --- harmonic numbers -------------------------------------------------------

Rational harmonic(int n);                      // h_n exact
double harmonic_real(double x);                // psi(x+1) + gamma, x > -1
Rational hohn(int m, int n);                   // higher order mh_n exact
double hohn_real(int m, long n);               // float accumulation, large n

// Harmonic based exponential function 1 + sum h_n x^n/n! (|x| <= 20).
double hbef(double x, const SeriesConfig& cfg = {});
// m-th derivative h_m + sum h_{n+m} x^n/n!.
double hbef_deriv(double x, int m, const SeriesConfig& cfg = {});
// Gosper closed form 1 + e^x (ln x + E1(x) + gamma), x > 0.
double hbef_gosper(double x);
// Generating function of order-p harmonic numbers, 1 + sum ph_n t^n/n!.
double hohn_genfun(int p, double t, const SeriesConfig& cfg = {});
// Same value through the truncated-exponential transform
// e^t - sum_{n>=1} [e^t - e_n(t)] / (n+1)^p  (test cross-route).
double hohn_genfun_transform(int p, double t, const SeriesConfig& cfg = {});

// --- truncated exponential numbers ------------------------------------------

// e_alpha = (1/Gamma(alpha+1)) int_0^inf e^{-s} (1+s)^alpha ds.
double trunc_exp_number(double alpha, const QuadratureConfig& cfg = {});

// --- Motzkin family ----------------------------------------------------------

BigInt motzkin(int n);                          // m_n
std::vector<BigInt> motzkin_row(int n);         // triangle row m_{n,s}, s=0..n
Rational motzkin_assoc_frac(int q, int n);      // m_n^{(q)} = P_n^{(q)}(1,1)
BigInt motzkin_assoc(int q, int n);             // integerized (n+q)!/n! m_n^{(q)}
// Exact check of sum_s m_{n-s} m_s == 2 (n+1) m_n^{(2)}.
bool motzkin_selfconv_check(int n);

// --- telephone family ---------------------------------------------------------

BigInt telephone(int n);                        // T(n) = H_n(1, 1/2)
std::vector<BigInt> telephone_row(int n);       // t_{n,s}
BigInt telephone_m(int m, int n);               // recurrence path
BigInt telephone_m_series(int m, int n);        // H_n^{(m)}(1, 1/m) exact path

}  // namespace umbra
