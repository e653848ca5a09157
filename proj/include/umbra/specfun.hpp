#pragma once

#include <vector>

#include "umbra/numerics.hpp"

// Special functions realized through umbral images.  Evaluation is
// series-only with explicit validity windows: out-of-policy arguments throw
// NonConvergence instead of silently losing precision to cancellation.
// Cancelling alternating series are accumulated in double-double precision;
// series with irrational term ratios carry a cancellation guard based on
// the largest term encountered.

namespace umbra {

// Validity policies (|x| windows for the direct series).
inline constexpr double bessel_series_xmax = 40.0;
inline constexpr double tricomi_series_xmax = 400.0;  // J argument 2*sqrt(x)
inline constexpr double ml_series_xmax = 30.0;
inline constexpr double ltrig_series_xmax = 50.0;

double bessel_j(double nu, double x, const SeriesConfig& cfg = {});
// k-th termwise derivative of the series, k in {1, 2}.
double bessel_j_deriv(double nu, double x, int k, const SeriesConfig& cfg = {});
double bessel_i(double nu, double x, const SeriesConfig& cfg = {});
Complex bessel_i_c(double nu, Complex x, const SeriesConfig& cfg = {});

double tricomi_c(double nu, double x, const SeriesConfig& cfg = {});
double bessel_wright(double alpha, double beta, double x,
                     const SeriesConfig& cfg = {});

// Mittag-Leffler E_{alpha,beta}.  Closed forms are used where the series
// definition reduces to one exactly (alpha = 1 with beta in {1,2},
// alpha = 2 with beta = 1, and alpha = 1/2 with beta = 1); everything else
// is the direct series with a cancellation guard.
double mittag_leffler(double alpha, double beta, double x,
                      const SeriesConfig& cfg = {});

// Neumann-Bessel function of integer order, assembled from the logarithmic
// term, the finite (n-k-1)! sum and the two renormalized Bessel series.
double bessel_y_int(int n, double x, const SeriesConfig& cfg = {});
// The renormalized pieces; internal to Y_n but exposed for tests.
double bessel_y_delta_big(int n, double x, const SeriesConfig& cfg = {});
double bessel_y_delta_small(int n, double x, const SeriesConfig& cfg = {});

double bessel_k0(double x, const SeriesConfig& cfg = {});

// cos(x; n): spherical-cosine family, cos(x; 0) = cos x and
// cos(x; n+1) = j_n(x) / (2^{n+1} x^n).
double spherical_cos(double x, int n, const SeriesConfig& cfg = {});

// c_{mu,alpha}^{(nu)}(x) = sum_r Gamma(nu r + alpha + 1)/(r! Gamma(r+mu+1)) (-x)^r
double tricomi_gen(double mu, double alpha, double nu, double x,
                   const SeriesConfig& cfg = {});

// Voigt functions: E = K + i L.
Complex voigt_e(double x, double y, double z, const SeriesConfig& cfg = {});
double voigt_k(double x, double y, double z, const SeriesConfig& cfg = {});
double voigt_l(double x, double y, double z, const SeriesConfig& cfg = {});

// Bessel-product machinery.
struct LrPolyParams {
    std::vector<double> orders;     // nu_1..nu_k
    std::vector<double> arguments;  // x_1..x_k
};
// Integer r: exact multinomial sum.  r = -1/2 with two arguments: the
// hypergeometric series (requires |x2| < |x1|).
double lr_poly(const LrPolyParams& p, double r);
// 2F1(1/2, 1/2; 1; k2) by its own series.
double hyp2f1_half(double k2, const SeriesConfig& cfg = {});
// int_R J0(a x) J0(b x) dx = (2/|a|) 2F1(1/2,1/2;1;(b/a)^2), |a| > |b|.
double bessel_product_integral(double a, double b, const SeriesConfig& cfg = {});
// Humbert function I_{m1,m2}(x) = sum_s x^s/(s! (m1+s)! (m2+s)!).
double humbert_i(int m1, int m2, double x, const SeriesConfig& cfg = {});

}  // namespace umbra
