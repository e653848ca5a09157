#pragma once

#include <complex>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Foundation layer: gamma-family scalars, series summation, adaptive
// quadrature and small complex-matrix eigen solvers.  Everything here is
// pure and deterministic; no shared mutable state.

namespace umbra {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct NonConvergence : Error {
    using Error::Error;
};
struct DegenerateSpectrum : Error {
    using Error::Error;
};
struct BranchError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct SeriesConfig {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
    int max_terms = 500;
    int small_streak = 3;  // consecutive negligible terms required to stop
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_refinements = 20;
};

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

double factorial(int n);                 // exact for n <= 170
double gamma_fn(double x);               // exact factorial table on integers
Complex gamma_fn(Complex z);             // Lanczos g=7, 9 coefficients
double log_gamma(double x);              // x > 0
double digamma(double x);
double beta_fn(double x, double y);
double erf_real(double x);
double erfc_real(double x);
double erfcx_real(double x);             // exp(x^2) erfc(x), no overflow
Complex erfc_fn(Complex z);
double exp_integral_e1(double x);        // E1(x), x > 0
double incomplete_gamma_lower(double nu, double x);   // lower, non-normalised
double incomplete_gamma_upper(double nu, double x);   // upper, non-normalised
double pochhammer(double nu, int r);     // (nu)_r

// ---------------------------------------------------------------------------
// Series summation
// ---------------------------------------------------------------------------

struct SeriesResult {
    Complex value{0.0, 0.0};
    int terms_used = 0;
    bool converged = false;
    double max_term = 0.0;  // largest |term| seen; cancellation diagnostic
};

// Kahan-compensated partial sum of term(0) + term(1) + ...  Stops once
// |term| < rel_tol*|sum| + abs_tol for small_streak consecutive indices.
// Never throws: callers decide what a failed convergence flag means.
SeriesResult sum_series(const std::function<Complex(int)>& term,
                        const SeriesConfig& cfg = {});

// ---------------------------------------------------------------------------
// Adaptive quadrature (Gauss-Kronrod 7-15 with interval bisection)
// ---------------------------------------------------------------------------

namespace detail {

struct GK15Sample {
    double abscissa, kronrod, gauss;
};
extern const std::array<GK15Sample, 8> gk15_nodes;

template <class F>
auto gk15(const F& f, double a, double b, double& err) {
    using R = decltype(f(0.0));
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    R fc = f(mid);
    R k = fc * gk15_nodes[0].kronrod;
    R g = fc * gk15_nodes[0].gauss;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * gk15_nodes[i].abscissa;
        R fs = f(mid + dx) + f(mid - dx);
        k += fs * gk15_nodes[i].kronrod;
        if (gk15_nodes[i].gauss != 0.0) g += fs * gk15_nodes[i].gauss;
    }
    k *= h;
    g *= h;
    err = std::abs(k - g);
    err = 200.0 * err * std::sqrt(200.0 * err);
    return k;
}

// Globally adaptive bisection: the piece with the largest error estimate is
// split until the summed error estimate meets the tolerance against the
// accumulated value (QUADPACK-style acceptance).
template <class F>
auto adaptive(const F& f, double a, double b, const QuadratureConfig& cfg) {
    using R = decltype(f(0.0));
    struct Piece {
        double a, b, err;
        R val;
        int depth;
    };
    std::vector<Piece> pieces;
    double err0;
    R val0 = gk15(f, a, b, err0);
    pieces.push_back({a, b, err0, val0, 0});
    const size_t piece_budget = 4096;
    for (;;) {
        R total{};
        double total_err = 0.0;
        double scale = 0.0;
        for (const auto& p : pieces) {
            total += p.val;
            total_err += p.err;
            scale += std::abs(p.val);
        }
        if (total_err <= cfg.abs_tol + cfg.rel_tol * std::abs(total))
            return total;
        size_t worst = 0;
        for (size_t i = 1; i < pieces.size(); ++i)
            if (pieces[i].err > pieces[worst].err) worst = i;
        Piece p = pieces[worst];
        if (p.err <= 5e-16 * scale) return total;  // roundoff floor reached
        if (p.depth >= cfg.max_refinements || pieces.size() >= piece_budget)
            throw NonConvergence("quadrature: refinement limit reached on [" +
                                 std::to_string(p.a) + "," +
                                 std::to_string(p.b) + "]");
        const double mid = 0.5 * (p.a + p.b);
        double el, er;
        R vl = gk15(f, p.a, mid, el);
        R vr = gk15(f, mid, p.b, er);
        pieces[worst] = {p.a, mid, el, vl, p.depth + 1};
        pieces.push_back({mid, p.b, er, vr, p.depth + 1});
    }
}

}  // namespace detail

template <class F>
auto integrate_finite(const F& f, double a, double b,
                      const QuadratureConfig& cfg = {}) {
    return detail::adaptive(f, a, b, cfg);
}

// Half line (0, inf): x = t/(1-t^2) on t in (0,1), dx = (1+t^2)/(1-t^2)^2 dt.
template <class F>
auto integrate_halfline(const F& f, const QuadratureConfig& cfg = {}) {
    auto g = [&f](double t) {
        const double om = 1.0 - t * t;
        const double x = t / om;
        const double jac = (1.0 + t * t) / (om * om);
        return f(x) * jac;
    };
    return detail::adaptive(g, 0.0, 1.0, cfg);
}

// Real line: x = t/(1-t^2) on t in (-1,1).
template <class F>
auto integrate_realline(const F& f, const QuadratureConfig& cfg = {}) {
    auto g = [&f](double t) {
        const double om = 1.0 - t * t;
        const double x = t / om;
        const double jac = (1.0 + t * t) / (om * om);
        return f(x) * jac;
    };
    return detail::adaptive(g, -1.0, 1.0, cfg);
}

// ---------------------------------------------------------------------------
// Small dense complex matrices with closed-form eigen decomposition
// ---------------------------------------------------------------------------

struct MatC2 {
    std::array<Complex, 4> m{};  // row-major
    Complex& operator()(int i, int j) { return m[2 * i + j]; }
    const Complex& operator()(int i, int j) const { return m[2 * i + j]; }
    static MatC2 identity();
    Complex trace() const { return m[0] + m[3]; }
    Complex det() const { return m[0] * m[3] - m[1] * m[2]; }
    double norm() const;  // Frobenius
};

struct MatC3 {
    std::array<Complex, 9> m{};
    Complex& operator()(int i, int j) { return m[3 * i + j]; }
    const Complex& operator()(int i, int j) const { return m[3 * i + j]; }
    static MatC3 identity();
    Complex trace() const { return m[0] + m[4] + m[8]; }
    double norm() const;
};

MatC2 operator+(const MatC2&, const MatC2&);
MatC2 operator-(const MatC2&, const MatC2&);
MatC2 operator*(const MatC2&, const MatC2&);
MatC2 operator*(Complex, const MatC2&);
MatC3 operator+(const MatC3&, const MatC3&);
MatC3 operator-(const MatC3&, const MatC3&);
MatC3 operator*(const MatC3&, const MatC3&);
MatC3 operator*(Complex, const MatC3&);

struct EigenPair2 {
    std::array<Complex, 2> lambda;  // lexicographic on (re, im)
    double separation;              // |lambda0 - lambda1|
};

struct EigenTriple3 {
    std::array<Complex, 3> lambda;
    double separation;  // min pairwise distance
};

// Quadratic formula / Cardano.  Degeneracy is reported through the
// separation field, never as an error; consumers enforce their own floor.
EigenPair2 eig2(const MatC2& M);
EigenTriple3 eig3(const MatC3& M);

}  // namespace umbra
