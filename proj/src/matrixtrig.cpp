#include "umbra/matrixtrig.hpp"

#include <cmath>
#include <functional>

#include "umbra/specfun.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

namespace {

double degeneracy_floor2(const MatC2& M) { return 1e-10 * (1.0 + M.norm()); }
double degeneracy_floor3(const MatC3& M) { return 1e-10 * (1.0 + M.norm()); }

void require_branch(Complex lambda, double nu) {
    if (std::abs(nu - std::round(nu)) < 1e-12) return;  // integer powers safe
    if (std::abs(lambda) == 0.0)
        throw BranchError("gtf: zero eigenvalue under fractional power");
    if (std::abs(std::arg(lambda)) >= pi - 1e-9)
        throw BranchError("gtf: eigenvalue on the negative real axis");
}

// Interpolation coefficients of f over a 2-point spectrum:
// f(M) = c 1 + s M.
std::pair<Complex, Complex> cayley2(const EigenPair2& e,
                                    const std::function<Complex(Complex)>& f) {
    const Complex lp = e.lambda[0], lm = e.lambda[1];
    const Complex fp = f(lp), fm = f(lm);
    const Complex s = (fp - fm) / (lp - lm);
    const Complex c = fp - s * lp;
    return {c, s};
}

// Interpolation over a 3-point spectrum: f(M) = C0 1 + C1 M + C2 M^2
// (inverse Vandermonde in Lagrange form).
std::array<Complex, 3> cayley3(const EigenTriple3& e,
                               const std::function<Complex(Complex)>& f) {
    std::array<Complex, 3> c{Complex(0.0), Complex(0.0), Complex(0.0)};
    for (int k = 0; k < 3; ++k) {
        const Complex lk = e.lambda[k];
        const Complex l1 = e.lambda[(k + 1) % 3];
        const Complex l2 = e.lambda[(k + 2) % 3];
        const Complex den = (lk - l1) * (lk - l2);
        const Complex fk = f(lk) / den;
        c[0] += fk * l1 * l2;
        c[1] -= fk * (l1 + l2);
        c[2] += fk;
    }
    return c;
}

// Stable closed form of the 2x2 GTF pieces: with lbar = Tr/2 and
// delta^2 = lbar^2 - det,
//   C(t) = e^{lbar t}(cosh(delta t) - lbar sinh(delta t)/delta),
//   S(t) = e^{lbar t} sinh(delta t)/delta,
// uniformly valid through delta -> 0 (used only where the public
// degeneracy contract does not apply, e.g. inside integrands).
std::pair<Complex, Complex> gtf2_stable(const MatC2& M, Complex t) {
    const Complex lbar = 0.5 * M.trace();
    const Complex delta = std::sqrt(lbar * lbar - M.det());
    const Complex dt = delta * t;
    if (std::abs(dt.real()) > 30.0) {
        // Exponentials dominate: evaluate both branches directly (the
        // confluent cancellation only matters for small |delta t|, and
        // cosh would overflow before exp(lbar t) underflows).
        const Complex ep = std::exp((lbar + delta) * t);
        const Complex em = std::exp((lbar - delta) * t);
        const Complex S = (ep - em) / (2.0 * delta);
        return {0.5 * (ep + em) - lbar * S, S};
    }
    Complex sinhc;  // sinh(delta t)/delta
    if (std::abs(dt) < 1e-4) {
        const Complex w = dt * dt;
        sinhc = t * (1.0 + w / 6.0 * (1.0 + w / 20.0));
    } else {
        sinhc = std::sinh(dt) / delta;
    }
    const Complex e = std::exp(lbar * t);
    const Complex S = e * sinhc;
    const Complex C = e * std::cosh(dt) - lbar * S;
    return {C, S};
}

MatC2 expm2_stable(const MatC2& M, Complex t) {
    auto [C, S] = gtf2_stable(M, t);
    return C * MatC2::identity() + S * M;
}

}  // namespace

Gtf2Result gtf2(const MatC2& M, double t) {
    const EigenPair2 e = eig2(M);
    if (e.separation <= degeneracy_floor2(M))
        throw DegenerateSpectrum("gtf2: eigenvalue separation below threshold");
    auto [C, S] = gtf2_stable(M, Complex(t));
    return {C, S, e};
}

std::pair<Complex, Complex> gtf2_coeff(const MatC2& M, double nu) {
    const EigenPair2 e = eig2(M);
    if (e.separation <= degeneracy_floor2(M))
        throw DegenerateSpectrum("gtf2_coeff: degenerate spectrum");
    require_branch(e.lambda[0], nu);
    require_branch(e.lambda[1], nu);
    return cayley2(e, [nu](Complex l) { return std::pow(l, nu); });
}

Gtf3Result gtf3(const MatC3& M, double t) {
    const EigenTriple3 e = eig3(M);
    if (e.separation <= degeneracy_floor3(M))
        throw DegenerateSpectrum("gtf3: eigenvalue separation below threshold");
    auto c = cayley3(e, [t](Complex l) { return std::exp(l * t); });
    return {c[0], c[1], c[2], e};
}

std::array<Complex, 3> gtf3_coeff(const MatC3& M, double nu) {
    const EigenTriple3 e = eig3(M);
    if (e.separation <= degeneracy_floor3(M))
        throw DegenerateSpectrum("gtf3_coeff: degenerate spectrum");
    for (const auto& l : e.lambda) require_branch(l, nu);
    return cayley3(e, [nu](Complex l) { return std::pow(l, nu); });
}

MatC2 gtf2_reconstruct(const Gtf2Result& r, const MatC2& M) {
    return r.C * MatC2::identity() + r.S * M;
}

MatC3 gtf3_reconstruct(const Gtf3Result& r, const MatC3& M) {
    return r.C0 * MatC3::identity() + r.C1 * M + r.C2 * (M * M);
}

std::pair<Complex, Complex> gtf2_gauss_integral(const MatC2& M) {
    const EigenPair2 e = eig2(M);
    if (e.separation <= degeneracy_floor2(M))
        throw DegenerateSpectrum("gtf2_gauss_integral: degenerate spectrum");
    if (e.lambda[0].real() <= 0.0 || e.lambda[1].real() <= 0.0)
        throw DomainError(
            "gtf2_gauss_integral: requires Re(lambda) > 0 for convergence");
    auto [c, s] = cayley2(e, [](Complex l) { return std::pow(l, -0.5); });
    const double sq = std::sqrt(pi);
    return {sq * c, sq * s};
}

MatC2 matrix_log_param2(const MatC2& sigma) {
    const EigenPair2 e = eig2(sigma);
    if (e.separation <= degeneracy_floor2(sigma))
        throw DegenerateSpectrum("matrix_log_param2: degenerate spectrum");
    for (const auto& s : e.lambda) {
        if (std::abs(s) == 0.0)
            throw DomainError("matrix_log_param2: singular matrix");
        require_branch(s, 0.5);  // non-integer: enforce off the cut
    }
    // C(1), S(1) built from ln sigma: T = (Sigma - C(1) 1)/S(1).
    auto [C1, S1] = cayley2(e, [](Complex s) { return std::log(s); });
    // Here cayley2 interpolates ln over the spectrum: ln(Sigma) = C1 1 + S1 Sigma
    // which matches T directly.
    return C1 * MatC2::identity() + S1 * sigma;
}

MatC3 matrix_log_param3(const MatC3& sigma) {
    const EigenTriple3 e = eig3(sigma);
    if (e.separation <= degeneracy_floor3(sigma))
        throw DegenerateSpectrum("matrix_log_param3: degenerate spectrum");
    for (const auto& s : e.lambda) {
        if (std::abs(s) == 0.0)
            throw DomainError("matrix_log_param3: singular matrix");
        require_branch(s, 0.5);
    }
    auto c = cayley3(e, [](Complex s) { return std::log(s); });
    return c[0] * MatC3::identity() + c[1] * sigma + c[2] * (sigma * sigma);
}

namespace {

template <class Mat, class Eig>
Mat root_exp_impl(const Mat& A, const Eig& e, Complex tau, int root) {
    const double inv = 1.0 / root;
    for (const auto& l : e.lambda) require_branch(l, inv);
    // Interpolate lambda^{1/n} to get the f coefficients, then build each
    // commuting factor by reconstruction over A's spectrum.
    if constexpr (std::is_same_v<Mat, MatC2>) {
        auto [f0, f1] = cayley2(e, [inv](Complex l) { return std::pow(l, inv); });
        auto [C, S] =
            cayley2(e, [&](Complex l) { return std::exp(f1 * tau * l); });
        const Mat factor = C * MatC2::identity() + S * A;
        return std::exp(f0 * tau) * factor;
    } else {
        auto f = cayley3(e, [inv](Complex l) { return std::pow(l, inv); });
        auto c1 = cayley3(e, [&](Complex l) { return std::exp(f[1] * tau * l); });
        auto c2 = cayley3(
            e, [&](Complex l) { return std::exp(f[2] * tau * l * l); });
        const Mat aa = A * A;
        const Mat factor1 =
            c1[0] * MatC3::identity() + c1[1] * A + c1[2] * aa;
        const Mat factor2 =
            c2[0] * MatC3::identity() + c2[1] * A + c2[2] * aa;
        return std::exp(f[0] * tau) * (factor1 * factor2);
    }
}

}  // namespace

MatC2 matrix_root_exp_eigen(const MatC2& A, double tau, int root) {
    if (root < 2) throw DomainError("matrix_root_exp_eigen: root >= 2");
    const EigenPair2 e = eig2(A);
    if (e.separation <= degeneracy_floor2(A))
        throw DegenerateSpectrum("matrix_root_exp_eigen: degenerate spectrum");
    return root_exp_impl(A, e, Complex(tau), root);
}

MatC3 matrix_root_exp_eigen(const MatC3& A, double tau, int root) {
    if (root < 2) throw DomainError("matrix_root_exp_eigen: root >= 2");
    const EigenTriple3 e = eig3(A);
    if (e.separation <= degeneracy_floor3(A))
        throw DegenerateSpectrum("matrix_root_exp_eigen: degenerate spectrum");
    return root_exp_impl(A, e, Complex(tau), root);
}

MatC2 matrix_sqrt_exp_levy(const MatC2& A, double tau,
                           const QuadratureConfig& cfg) {
    if (tau < 0.0) throw DomainError("matrix_sqrt_exp_levy: tau >= 0");
    const EigenPair2 e = eig2(A);
    if (e.lambda[0].real() <= 0.0 || e.lambda[1].real() <= 0.0)
        throw DomainError("matrix_sqrt_exp_levy: requires Re(lambda) > 0");
    // eta = u^2/(1-u)^2 maps (0,1) -> (0,inf); the Levy density times the
    // Jacobian is smooth up to both endpoints:
    //   g(eta) deta = (1/sqrt(pi)) u^{-2} exp(-(1-u)^2/(4u^2)) du.
    // The matrix exponential inside uses the confluent-stable closed form,
    // since eta tau^2 A sweeps through all scales.
    const double t2 = tau * tau;
    MatC2 result;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double entry = integrate_finite(
                [&](double u) {
                    if (u <= 0.0) return 0.0;
                    const double om = 1.0 - u;
                    const double weight = std::exp(-om * om / (4.0 * u * u)) /
                                          (std::sqrt(pi) * u * u);
                    if (weight == 0.0) return 0.0;
                    const double eta = u * u / (om * om);
                    const MatC2 em = expm2_stable(A, Complex(-eta * t2));
                    return weight * em(i, j).real();
                },
                0.0, 1.0, cfg);
            result(i, j) = entry;
        }
    }
    return result;
}

namespace {

// Two-point interpolation with a confluent fallback: for nearly coincident
// eigenvalues the divided difference degrades, so the analytic derivative
// takes over.  Needed because the harmonic-oscillator evolution must accept
// A = 1 (the uncoupled case).
std::pair<Complex, Complex> cayley2_confluent(
    const EigenPair2& e, const std::function<Complex(Complex)>& f,
    const std::function<Complex(Complex)>& fprime, double scale) {
    const Complex lp = e.lambda[0], lm = e.lambda[1];
    Complex s;
    if (e.separation > 1e-6 * (1.0 + scale)) {
        s = (f(lp) - f(lm)) / (lp - lm);
    } else {
        s = fprime(0.5 * (lp + lm));
    }
    const Complex c = f(lp) - s * lp;
    return {c, s};
}

}  // namespace

Vec2 second_order_evolve(const MatC2& A, const Vec2& y0, const Vec2& ydot0,
                         double t) {
    const EigenPair2 e = eig2(A);
    for (const auto& l : e.lambda) {
        if (std::abs(l) == 0.0)
            throw DomainError("second_order_evolve: singular matrix");
        require_branch(l, 0.5);
    }
    const double scale = A.norm();
    // C(t sqrt(A)) and sqrt(A)^{-1} S(t sqrt(A)) as functions of A.
    auto [cC, sC] = cayley2_confluent(
        e, [&](Complex l) { return std::cos(t * std::sqrt(l)); },
        [&](Complex l) {
            const Complex r = std::sqrt(l);
            return -t * std::sin(t * r) / (2.0 * r);
        },
        scale);
    auto [cS, sS] = cayley2_confluent(
        e,
        [&](Complex l) {
            const Complex r = std::sqrt(l);
            return std::sin(t * r) / r;
        },
        [&](Complex l) {
            const Complex r = std::sqrt(l);
            return (t * std::cos(t * r) - std::sin(t * r) / r) / (2.0 * l);
        },
        scale);
    Vec2 out;
    for (int i = 0; i < 2; ++i) {
        Complex acc(0.0);
        for (int j = 0; j < 2; ++j) {
            const Complex cmat =
                (i == j ? cC : Complex(0.0)) + sC * A(i, j);
            const Complex smat =
                (i == j ? cS : Complex(0.0)) + sS * A(i, j);
            acc += cmat * y0[j] + smat * ydot0[j];
        }
        out[i] = acc;
    }
    return out;
}

std::pair<double, double> axion_photon_prob(const AxionParams& p,
                                            double omega_t) {
    const double N = 2.0 * p.n_refr - 1.0;
    const double M = 1.0 - p.mass_ratio * p.mass_ratio;
    const double G = p.coupling;
    if (G < 0.0 || p.mass_ratio < 0.0)
        throw DomainError("axion_photon_prob: G >= 0, mu >= 0");
    const double disc = std::sqrt((N - M) * (N - M) + 4.0 * G * G);
    const double lminus = 0.5 * (N + M - disc);
    if (lminus < 0.0)
        throw DomainError("axion_photon_prob: lambda- < 0 (mass above bound)");
    MatC2 A;
    A(0, 0) = N;
    A(0, 1) = G;
    A(1, 0) = G;
    A(1, 1) = M;
    // Y(t) = e^{i omega t sqrt(A)} (1,0): Ydot0 = i sqrt(A) Y0.
    const EigenPair2 e = eig2(A);
    if (e.separation <= degeneracy_floor2(A))
        throw DegenerateSpectrum("axion_photon_prob: degenerate spectrum");
    auto [c, s] =
        cayley2(e, [&](Complex l) {
            return std::exp(Complex(0.0, omega_t) * std::sqrt(l));
        });
    const Complex g_amp = c + s * A(0, 0);  // (e^{..})_{00}
    const Complex a_amp = s * A(1, 0);      // (e^{..})_{10}
    return {std::norm(g_amp), std::norm(a_amp)};
}

double axion_photon_prob_smallg(const AxionParams& p, double omega_t) {
    const double G = p.coupling;
    const double f1 = 0.5 + G * G / 16.0;
    const double s = std::sin(f1 * G * omega_t);
    return s * s;
}

// ---------------------------------------------------------------------------
// Scalar Laguerre trigonometry
// ---------------------------------------------------------------------------

namespace {

double ltrig_series(double x, int parity, const SeriesConfig& cfg) {
    // parity 0: sum (-1)^r x^{2r}/((2r)!)^2; parity 1: odd counterpart.
    if (std::abs(x) > ltrig_series_xmax)
        throw NonConvergence("l-trig: |x| outside series policy (<=50)");
    const double u = x * x;
    double term = parity ? x : 1.0;
    SeriesResult r = sum_series(
        [&](int k) {
            if (k > 0) {
                const int m = 2 * k + parity;  // current index
                term *= -u / (double(m) * double(m) * double(m - 1) * double(m - 1));
            }
            return Complex(term);
        },
        cfg);
    if (!r.converged) throw NonConvergence("l-trig series did not converge");
    return r.value.real();
}

}  // namespace

double l_exp(double x, const SeriesConfig& cfg) {
    if (std::abs(x) > ltrig_series_xmax * ltrig_series_xmax)
        throw NonConvergence("l_exp: |x| outside series policy");
    double term = 1.0;
    SeriesResult r = sum_series(
        [&](int k) {
            if (k > 0) term *= x / (double(k) * double(k));
            return Complex(term);
        },
        cfg);
    if (!r.converged) throw NonConvergence("l_exp series did not converge");
    return r.value.real();
}

double l_cos(double x, const SeriesConfig& cfg) { return ltrig_series(x, 0, cfg); }
double l_sin(double x, const SeriesConfig& cfg) { return ltrig_series(x, 1, cfg); }

double oplus_l_pow(double x, double y, int n) {
    return deformed_binomial_pow(weight_lbs(), Complex(x), Complex(y), n).real();
}

double otimes_l_pow(int k, double x, int n) {
    if (k < 1 || n < 0) throw DomainError("otimes_l_pow: k >= 1, n >= 0");
    // (k (x) x)^n = c_k(n) x^n with c_1 = 1, c_k(n) = sum_r C(n,r)^2 c_{k-1}(r).
    std::vector<double> c(n + 1, 1.0);  // c_1
    for (int level = 2; level <= k; ++level) {
        std::vector<double> next(n + 1, 0.0);
        for (int m = 0; m <= n; ++m) {
            double binom = 1.0, sum = 0.0;
            for (int r = 0; r <= m; ++r) {
                sum += binom * binom * c[r];
                binom *= double(m - r) / (r + 1);
            }
            next[m] = sum;
        }
        c.swap(next);
    }
    return c[n] * std::pow(x, n);
}

// ---------------------------------------------------------------------------
// Pseudo-hyperbolic functions of order 3
// ---------------------------------------------------------------------------

double phf3(int k, double x, const SeriesConfig& cfg) {
    if (k < 0 || k > 2) throw DomainError("phf3: k in {0,1,2}");
    if (std::abs(x) > ltrig_series_xmax)
        throw NonConvergence("phf3: |x| outside series policy (<=50)");
    double term = std::pow(x, k) / factorial(k);
    const double x3 = x * x * x;
    SeriesResult r = sum_series(
        [&](int n) {
            if (n > 0) {
                const int m = 3 * n + k;
                term *= x3 / (double(m) * double(m - 1) * double(m - 2));
            }
            return Complex(term);
        },
        cfg);
    if (!r.converged) throw NonConvergence("phf3 series did not converge");
    return r.value.real();
}

namespace {

double phf3_even_series(double x, int offset, const SeriesConfig& cfg) {
    // sum x^{6r+offset}/(6r+offset)!
    if (std::abs(x) > ltrig_series_xmax)
        throw NonConvergence("phf3 ch/sh: |x| outside series policy");
    double term = std::pow(x, offset) / factorial(offset);
    const double x6 = std::pow(x, 6);
    SeriesResult r = sum_series(
        [&](int n) {
            if (n > 0) {
                double den = 1.0;
                for (int j = 0; j < 6; ++j) den *= 6.0 * n + offset - j;
                term *= x6 / den;
            }
            return Complex(term);
        },
        cfg);
    if (!r.converged) throw NonConvergence("phf3 ch/sh series did not converge");
    return r.value.real();
}

}  // namespace

double phf3_ch(double x, const SeriesConfig& cfg) {
    return phf3_even_series(x, 0, cfg);
}

double phf3_sh(double x, const SeriesConfig& cfg) {
    return phf3_even_series(x, 3, cfg);
}

double oplus_phf3_pow(double x, double y, int N) {
    if (N < 0) throw DomainError("oplus_phf3_pow: N >= 0");
    Complex sum(0.0);
    for (int p = 0; p < 3; ++p) {
        const Complex w = std::exp(Complex(0.0, 2.0 * pi * p / 3.0));
        sum += std::pow(Complex(x) + w * y, N);
    }
    return sum.real() / 3.0;
}

}  // namespace umbra
