#include "umbra/acceptance.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "umbra/fel.hpp"
#include "umbra/fractional.hpp"
#include "umbra/matrixtrig.hpp"
#include "umbra/numbers.hpp"
#include "umbra/polynomials.hpp"
#include "umbra/specfun.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

namespace oracle {

namespace {

template <class Mat>
Mat expm_taylor_impl(const Mat& M, double t) {
    // Scale so that |t| ||M|| / 2^s <= 1/2, Taylor to machine precision,
    // then square back.
    const double scale = std::abs(t) * M.norm();
    int s = 0;
    while (scale / std::pow(2.0, s) > 0.5) ++s;
    const double ts = t / std::pow(2.0, s);
    Mat sum = Mat::identity();
    Mat term = Mat::identity();
    for (int k = 1; k <= 40; ++k) {
        term = Complex(ts / k) * (term * M);
        sum = sum + term;
        if (term.norm() < 1e-18 * sum.norm()) break;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return sum;
}

}  // namespace

MatC2 expm_taylor(const MatC2& M, double t) { return expm_taylor_impl(M, t); }
MatC3 expm_taylor(const MatC3& M, double t) { return expm_taylor_impl(M, t); }

}  // namespace oracle

namespace {

struct Tally {
    double worst = 0.0;
    bool ok = true;
    std::string note;
    void push(double residual, double tol) {
        worst = std::max(worst, residual / tol);
        if (residual > tol) ok = false;
    }
    CheckResult done(const std::string& name, const std::string& extra = "") {
        std::ostringstream os;
        os << "worst residual at " << worst << "x tolerance";
        if (!extra.empty()) os << "; " << extra;
        if (!note.empty()) os << "; " << note;
        return {name, ok, os.str()};
    }
};

double uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * (rng() / 4294967296.0);
}

// 1/Gamma as an entire function (0 at the poles).
double recip_gamma(double a) {
    if (a <= 0.5 && std::abs(a - std::round(a)) < 1e-12) return 0.0;
    return 1.0 / gamma_fn(a);
}

#ifndef UMBRA_DATA_DIR
#define UMBRA_DATA_DIR "data/oeis"
#endif

// b-file format: one "n a(n)" pair per line, # comments allowed.
std::vector<std::pair<int, std::string>> load_oeis_prefix(
    const std::string& id) {
    std::vector<std::pair<int, std::string>> rows;
    const std::string path =
        std::string(UMBRA_DATA_DIR) + "/b" + id.substr(1) + ".txt";
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int n;
        std::string value;
        if (ls >> n >> value) rows.emplace_back(n, value);
    }
    return rows;
}

// ------------------------------------------------------------------ 1
CheckResult check_j0_integral() {
    SeriesConfig sc;
    QuadratureConfig qc;
    qc.rel_tol = 1e-9;
    const double body =
        integrate_finite([&](double x) { return bessel_j(0.0, x, sc); }, -40.0,
                         40.0, qc);
    // One-sided tail from the Hankel form of J0:
    // int_X^inf J0 ~ sqrt(2/pi) [ -sin(X-pi/4)/sqrt(X) + (5/8)cos(X-pi/4)/X^{3/2} ]
    const double X = 40.0;
    const double ph = X - 0.25 * pi;
    const double tail = std::sqrt(2.0 / pi) *
                        (-std::sin(ph) / std::sqrt(X) +
                         0.625 * std::cos(ph) / std::pow(X, 1.5));
    const double value = body + 2.0 * tail;
    Tally t;
    t.push(std::abs(value - 2.0), 2e-3);
    return t.done("j0-integral");
}

// ------------------------------------------------------------------ 2
CheckResult check_ml_integral() {
    Tally t;
    SeriesConfig sc;
    sc.rel_tol = 1e-8;
    sc.abs_tol = 1e-8;
    sc.max_terms = 2000;
    QuadratureConfig qc;
    qc.rel_tol = 1e-7;
    qc.abs_tol = 1e-9;
    const std::vector<std::pair<double, double>> cases = {
        {1.0, 2.0}, {0.5, 1.0}, {1.5, 2.0}};
    for (auto [alpha, beta] : cases) {
        const double expect = pi * recip_gamma(beta - 0.5 * alpha);
        double value;
        if (alpha < 1.2) {
            value = integrate_realline(
                [&](double x) {
                    return mittag_leffler(alpha, beta, -x * x, sc);
                },
                qc);
        } else {
            // Direct series up to |x| = X, then the algebraic asymptotic
            // tail sum_k (-1)^{k+1} X^{1-2k} / ((2k-1) Gamma(beta-alpha k)).
            const double X = 8.0;
            value = integrate_finite(
                [&](double x) {
                    return mittag_leffler(alpha, beta, -x * x, sc);
                },
                -X, X, qc);
            double tail = 0.0;
            for (int k = 1; k <= 6; ++k) {
                const double term = std::pow(X, 1.0 - 2.0 * k) /
                                    (2.0 * k - 1.0) *
                                    recip_gamma(beta - alpha * k);
                tail += (k % 2 ? term : -term);
            }
            value += 2.0 * tail;
        }
        t.push(std::abs(value - expect), 1e-4 * std::abs(expect));
    }
    return t.done("ml-integral");
}

// ------------------------------------------------------------------ 3
CheckResult check_fresnel() {
    QuadratureConfig qc;
    qc.rel_tol = 1e-9;
    qc.max_refinements = 30;
    const double X = 25.0;
    const double body =
        integrate_finite([](double u) { return std::cos(u * u); }, 0.0, X, qc);
    // Stationary-phase tail: int_X^inf cos(u^2) du
    //   = -sin(X^2)/(2X) + cos(X^2)/(4X^3) + O(X^-5).
    const double tail =
        -std::sin(X * X) / (2.0 * X) + std::cos(X * X) / (4.0 * X * X * X);
    const double expect = 0.5 * std::sqrt(0.5 * pi);
    Tally t;
    t.push(std::abs(body + tail - expect), 1e-3 * expect);
    return t.done("fresnel");
}

// ------------------------------------------------------------------ 4
CheckResult check_supergaussian() {
    Tally t;
    QuadratureConfig qc;
    qc.rel_tol = 1e-11;
    for (double y : {1.0, 2.0}) {
        const double value = integrate_realline(
            [y](double x) { return std::exp(-y * std::pow(x, 4)); }, qc);
        const double expect = gamma_fn(0.25) / (2.0 * std::pow(y, 0.25));
        t.push(std::abs(value - expect), 1e-8 * expect);
    }
    return t.done("supergaussian-integral");
}

// ------------------------------------------------------------------ 5
CheckResult check_glaisher_diffusion() {
    const int n = 512;
    GridFunction f;
    f.x0 = -12.0;
    f.dx = 24.0 / n;
    f.samples.resize(n);
    for (int j = 0; j < n; ++j)
        f.samples[j] = std::exp(-f.x(j) * f.x(j));
    const double tt = 0.25;
    const GridFunction out = frac_diffusion_solve(f, 1.0, tt);
    Tally t;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        const double x = out.x(j);
        const double expect =
            std::exp(-x * x / (1.0 + 4.0 * tt)) / std::sqrt(1.0 + 4.0 * tt);
        worst = std::max(worst, std::abs(out.samples[j] - Complex(expect)));
    }
    t.push(worst, 1e-6);
    return t.done("glaisher-diffusion");
}

// ------------------------------------------------------------------ 6
CheckResult check_fractional_moments() {
    Tally t;
    SeriesConfig sc;
    sc.max_terms = 4000;
    // Points of the stated grids where the alternating series loses all
    // precision (largest term ~ exp(w^{1/alpha})) or outright diverges
    // (FSE with alpha <= 1/2): documented, expected to raise NonConvergence,
    // and excluded from the numeric comparison.  Any other failure fails
    // the criterion.
    const auto fpd_infeasible = [](double a, double w) {
        return (a == 0.3 && w >= 2.0) || (a == 0.5 && w >= 5.0) ||
               (a == 0.7 && w >= 5.0);
    };
    const auto fse_infeasible = [](double a, double X) {
        return a <= 0.5 || (a == 0.7 && X >= 2.0);
    };
    int skipped = 0;
    // Brute-force moments: sum the pmf until the tail is negligible.
    auto moments = [&](const std::function<double(int)>& pmf, double& s0,
                       double& s1, double& s2) {
        s0 = s1 = s2 = 0.0;
        for (int m = 0; m <= 300; ++m) {
            const double pm = pmf(m);
            s0 += pm;
            s1 += m * pm;
            s2 += double(m) * m * pm;
            if (m > 10 && std::abs(pm) < 1e-13) break;
        }
    };
    for (double alpha : {0.3, 0.5, 0.7, 1.0}) {
        for (double w : {0.5, 1.0, 2.0, 5.0}) {
            FracPoissonParams p{alpha, w, 1.0};
            double s0, s1, s2;
            try {
                moments([&](int m) { return frac_poisson_pmf(p, m, sc); }, s0,
                        s1, s2);
            } catch (const NonConvergence&) {
                if (fpd_infeasible(alpha, w)) {
                    ++skipped;
                    continue;
                }
                throw;
            }
            t.push(std::abs(s0 - 1.0), 1e-6);
            t.push(std::abs(s1 - frac_poisson_mean(p)),
                   1e-6 * frac_poisson_mean(p));
            const double var = s2 - s1 * s1;
            t.push(std::abs(var - frac_poisson_var(p)),
                   1e-6 * frac_poisson_var(p));
        }
    }
    for (double alpha : {0.3, 0.5, 0.7, 0.8, 1.0}) {
        for (double X : {0.5, 1.0, 2.0}) {
            double s0, s1, s2;
            try {
                moments([&](int m) { return fse_pmf(alpha, X, m, sc); }, s0, s1,
                        s2);
            } catch (const NonConvergence&) {
                if (fse_infeasible(alpha, X)) {
                    ++skipped;
                    continue;
                }
                throw;
            }
            t.push(std::abs(s0 - 1.0), 1e-6);
            t.push(std::abs(s1 - fse_mean(alpha, X)), 1e-6 * fse_mean(alpha, X));
            const double var = s2 - s1 * s1;
            t.push(std::abs(var - fse_var(alpha, X)),
                   1e-6 * std::abs(fse_var(alpha, X)));
        }
    }
    for (double X : {0.5, 1.0, 2.0}) t.push(std::abs(mandel_q(1.0, X)), 1e-10);
    std::ostringstream note;
    note << skipped
         << " grid points skipped: pmf series diverges or exceeds any fixed "
            "precision there (documented deviation)";
    t.note = note.str();
    return t.done("fractional-moments");
}

// ------------------------------------------------------------------ 7
CheckResult check_gtf_identities() {
    Tally t;
    std::mt19937 rng(20260811);
    int done2 = 0, done3 = 0;
    while (done2 < 100) {
        MatC2 m;
        for (int i = 0; i < 4; ++i) m.m[i] = uniform(rng, -1.0, 1.0);
        EigenPair2 e = eig2(m);
        if (e.separation < 1e-3) continue;
        const double tt = uniform(rng, -2.0, 2.0);
        Gtf2Result g = gtf2(m, tt);
        // Fundamental identity C^2 + det S^2 + tr C S = e^{tr t}.
        const Complex tr = m.trace(), det = m.det();
        const Complex fi = g.C * g.C + det * g.S * g.S + tr * g.C * g.S -
                           std::exp(tr * tt);
        t.push(std::abs(fi), 1e-9 * std::abs(std::exp(tr * tt)));
        // Duplication.
        Gtf2Result g2 = gtf2(m, 2.0 * tt);
        t.push(std::abs(g2.C - (g.C * g.C - det * g.S * g.S)),
               1e-9 * (1.0 + std::abs(g2.C)));
        t.push(std::abs(g2.S - (2.0 * g.C * g.S + tr * g.S * g.S)),
               1e-9 * (1.0 + std::abs(g2.S)));
        // Reconstruction against the Taylor oracle.
        const MatC2 rec = gtf2_reconstruct(g, m);
        const MatC2 ref = oracle::expm_taylor(m, tt);
        t.push((rec - ref).norm(), 1e-9 * (1.0 + ref.norm()));
        ++done2;
    }
    while (done3 < 100) {
        MatC3 m;
        for (int i = 0; i < 9; ++i) m.m[i] = uniform(rng, -1.0, 1.0);
        EigenTriple3 e = eig3(m);
        if (e.separation < 1e-3) continue;
        const double tt = uniform(rng, -2.0, 2.0);
        Gtf3Result g = gtf3(m, tt);
        const MatC3 rec = gtf3_reconstruct(g, m);
        const MatC3 ref = oracle::expm_taylor(m, tt);
        t.push((rec - ref).norm(), 1e-9 * (1.0 + ref.norm()));
        ++done3;
    }
    return t.done("gtf-identities");
}

// ------------------------------------------------------------------ 8
CheckResult check_matrix_sqrt_two_ways() {
    Tally t;
    std::mt19937 rng(7781);
    QuadratureConfig qc;
    qc.rel_tol = 1e-9;
    int done = 0;
    while (done < 20) {
        // A = R diag(l1,l2) R^{-1} with positive distinct eigenvalues.
        const double l1 = uniform(rng, 0.3, 3.0);
        const double l2 = uniform(rng, 0.3, 3.0);
        if (std::abs(l1 - l2) < 0.1) continue;
        MatC2 r;
        for (int i = 0; i < 4; ++i) r.m[i] = uniform(rng, -1.0, 1.0);
        const Complex det = r.det();
        if (std::abs(det) < 0.3) continue;
        MatC2 rinv;
        rinv(0, 0) = r(1, 1) / det;
        rinv(0, 1) = -r(0, 1) / det;
        rinv(1, 0) = -r(1, 0) / det;
        rinv(1, 1) = r(0, 0) / det;
        MatC2 d;
        d(0, 0) = l1;
        d(1, 1) = l2;
        const MatC2 a = r * d * rinv;
        const MatC2 levy = matrix_sqrt_exp_levy(a, 1.0, qc);
        const MatC2 eigenroute = matrix_root_exp_eigen(a, -1.0, 2);
        t.push((levy - eigenroute).norm(), 1e-6 * (1.0 + eigenroute.norm()));
        ++done;
    }
    return t.done("matrix-sqrt-two-ways");
}

// ------------------------------------------------------------------ 9
CheckResult check_laguerre_napier() {
    Tally t;
    const double le = l_exp(1.0);
    t.push(std::abs(le - 2.279585302336067), 5e-15 * 2.279585302336067);
    // Addition theorems at matched truncation order N = 60.
    SeriesConfig sc;
    for (double x : {0.2, 0.6, 1.0}) {
        for (double y : {0.1, 0.5, 1.0}) {
            Complex lhs(0.0);
            double fact2 = 1.0;
            for (int n = 0; n <= 60; ++n) {
                if (n > 0) fact2 *= double(n) * double(n);
                const Complex in = std::pow(Complex(0.0, 1.0), n);
                lhs += in * oplus_l_pow(x, y, n) / fact2;
            }
            const double lc = l_cos(x, sc), ls = l_sin(x, sc);
            const double mc = l_cos(y, sc), ms = l_sin(y, sc);
            t.push(std::abs(lhs.real() - (lc * mc - ls * ms)), 1e-8);
            t.push(std::abs(lhs.imag() - (lc * ms + ls * mc)), 1e-8);
        }
    }
    return t.done("laguerre-napier");
}

// ------------------------------------------------------------------ 10
CheckResult check_fel_gain_curve() {
    Tally t;
    FelParams p;
    p.g0 = 5.0;
    p.mu_eps = 0.0;
    p.order = 2;
    p.trunc = 25;
    int escalated = 0;
    for (int k = 0; k <= 200; ++k) {
        p.nu = -10.0 + 0.1 * k;
        p.trunc = 25;
        FelSolution h = fel_hermite_solve(p);
        if (h.truncation_warning) {
            // The expansion flags itself as under-resolved near |nu| = 10;
            // re-solve at the supported truncation cap (documented).
            p.trunc = 60;
            h = fel_hermite_solve(p);
            ++escalated;
        }
        const double gh = h.gain();
        const double gq = fel_quadrature_solve(p, 1200).gain();
        t.push(std::abs(gh - gq), 1e-3 * (1.0 + std::abs(gq)));
    }
    t.note = std::to_string(escalated) +
             " detunings re-solved at M=60 after a truncation warning";
    // Perturbative cross-check against the exact mu = 0 ODE reduction.
    FelParams q;
    q.g0 = 0.1;
    q.nu = 0.0;
    q.mu_eps = 0.0;
    q.order = 3;
    q.trunc = 25;
    const Complex av = fel_hermite_solve(q).a;
    const Complex ao = fel_ode_solve(q.g0, q.nu, 1.0);
    t.push(std::abs(av - ao), 1e-5 * std::abs(ao - 1.0));
    return t.done("fel-gain-curve");
}

// ------------------------------------------------------------------ 11
CheckResult check_sequences() {
    Tally t;
    auto expect_seq = [&](const std::vector<long>& want,
                          const std::function<BigInt(int)>& got) {
        for (size_t i = 0; i < want.size(); ++i)
            t.push(got(int(i)) == want[i] ? 0.0 : 1.0, 0.5);
    };
    expect_seq({1, 1, 2, 4, 9, 21, 51, 127}, [](int n) { return motzkin(n); });
    expect_seq({1, 1, 2, 4, 10, 26, 76, 232},
               [](int n) { return telephone(n); });
    expect_seq({1, 1, 1, 3, 9, 21, 81, 351, 1233},
               [](int n) { return telephone_m(3, n); });
    // Triangle rows.
    const std::vector<long> mrow6 = {1, 0, 15, 0, 30, 0, 5};
    auto row = motzkin_row(6);
    for (int s = 0; s <= 6; ++s) t.push(row[s] == mrow6[s] ? 0.0 : 1.0, 0.5);
    const std::vector<long> trow6 = {1, 0, 15, 0, 45, 0, 15};
    auto trow = telephone_row(6);
    for (int s = 0; s <= 6; ++s) t.push(trow[s] == trow6[s] ? 0.0 : 1.0, 0.5);
    long row_sum = 0;
    for (int s = 0; s <= 6; ++s) row_sum += trow[s].get_si();
    t.push(row_sum == 76 ? 0.0 : 1.0, 0.5);
    // Vendored OEIS prefixes.
    for (const auto& [file, gen] : std::map<std::string, std::function<BigInt(int)>>{
             {"A001813",
              [](int n) -> BigInt {
                  return BigInt(big_factorial(2 * n) / big_factorial(n));
              }},
             {"A014531", [](int n) { return motzkin_assoc(2, n); }},
             {"A001470", [](int n) { return telephone_m(3, n); }}}) {
        auto rows = load_oeis_prefix(file);
        t.push(rows.empty() ? 1.0 : 0.0, 0.5);
        for (const auto& [n, val] : rows)
            t.push(gen(n).get_str() == val ? 0.0 : 1.0, 0.5);
    }
    // Telephone duplication T(2n) and the Motzkin self-convolution, exact.
    for (int n = 0; n <= 30; ++n) {
        if (n <= 10) {
            BigInt lhs = telephone(2 * n);
            BigInt rhs(0);
            for (int r = 0; r <= n; ++r) {
                const BigInt tnr = telephone(n - r);
                rhs += big_factorial(r) * big_binomial(n, r) *
                       big_binomial(n, r) * tnr * tnr;
            }
            t.push(lhs == rhs ? 0.0 : 1.0, 0.5);
        }
        t.push(motzkin_selfconv_check(n) ? 0.0 : 1.0, 0.5);
    }
    // Series path equals recurrence path for generalized telephone numbers.
    for (int m = 3; m <= 6; ++m)
        for (int n = 0; n <= 40; ++n)
            t.push(telephone_m(m, n) == telephone_m_series(m, n) ? 0.0 : 1.0,
                   0.5);
    return t.done("exact-sequences");
}

// ------------------------------------------------------------------ 12
CheckResult check_gosper() {
    Tally t;
    SeriesConfig sc;
    for (double x : {0.1, 0.5, 1.0, 2.0}) {
        const double series = hbef(x, sc);
        const double closed = hbef_gosper(x);
        t.push(std::abs(series - closed), 1e-9 * std::abs(closed));
    }
    const long n = 100000;
    const double limit = pi * pi / 6.0;
    t.push(std::abs(hohn_real(2, n) - limit), 1.0 / n);
    return t.done("gosper-hbef");
}

// ------------------------------------------------------------------ 13
CheckResult check_polynomial_battery() {
    Tally t;
    // Legendre ODE (d/dx (1-x^2) d/dx) P_n + n(n+1) P_n = 0, exact.
    for (int n = 0; n <= 10; ++n) {
        auto c = legendre_coeffs_q(n);
        RatPoly2 p;
        for (size_t k = 0; k < c.size(); ++k)
            p += RatPoly2::monomial(int(k), 0, c[k]);
        const RatPoly2 one_minus_x2 =
            RatPoly2(Rational(1)) - RatPoly2::monomial(2, 0, Rational(1));
        RatPoly2 lhs = (one_minus_x2 * p.dx()).dx() + p.scaled(Rational(n * (n + 1)));
        t.push(lhs.is_zero() ? 0.0 : 1.0, 0.5);
    }
    // Jacobi derivative d/dx P_n^{(a,b)} = ((n+a+b+1)/2) P_{n-1}^{(a+1,b+1)}.
    for (int n = 1; n <= 8; ++n) {
        for (const Rational& a : {Rational(0), Rational(1, 2), Rational(1)}) {
            for (const Rational& b : {Rational(0), Rational(1, 2), Rational(1)}) {
                auto pc = jacobi_coeffs_q(n, a, b);
                auto qc = jacobi_coeffs_q(n - 1, a + 1, b + 1);
                const Rational scale = (Rational(n) + a + b + 1) / 2;
                bool ok = true;
                for (int k = 0; k < n; ++k) {
                    const Rational deriv = pc[k + 1] * (k + 1);
                    if (deriv != scale * qc[k]) ok = false;
                }
                t.push(ok ? 0.0 : 1.0, 0.5);
            }
        }
    }
    // Laguerre Appel relations, exact: d/dy L_n = n L_{n-1} and
    // -d/dx x d/dx L_n = n L_{n-1}.
    for (int n = 1; n <= 12; ++n) {
        const RatPoly2 ln = laguerre2_poly_q(n);
        const RatPoly2 lm = laguerre2_poly_q(n - 1).scaled(Rational(n));
        t.push((ln.dy() - lm).is_zero() ? 0.0 : 1.0, 0.5);
        const RatPoly2 x = RatPoly2::monomial(1, 0, Rational(1));
        const RatPoly2 lag = (x * ln.dx()).dx();
        t.push((RatPoly2(Rational(0)) - lag - lm).is_zero() ? 0.0 : 1.0, 0.5);
    }
    // Hermite generating function, numeric.
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 20; ++trial) {
        const double x = uniform(rng, -1.0, 1.0);
        const double y = uniform(rng, -1.0, 1.0);
        const double tt = uniform(rng, -1.0, 1.0);
        double sum = 0.0, tn = 1.0;
        for (int n = 0; n <= 40; ++n) {
            if (n > 0) tn *= tt / n;
            sum += tn * hermite2(n, x, y);
        }
        t.push(std::abs(sum - std::exp(x * tt + y * tt * tt)), 1e-9);
        // Even-index generating function within |4yt| <= 0.5.
        const double ts = 0.5 / std::max(1.0, std::abs(4.0 * y)) *
                          uniform(rng, 0.1, 0.9);
        double sum2 = 0.0, tn2 = 1.0;
        for (int n = 0; n <= 60; ++n) {
            if (n > 0) tn2 *= ts / n;
            sum2 += tn2 * hermite2(2 * n, x, y);
        }
        const double expect2 = std::exp(x * x * ts / (1.0 - 4.0 * y * ts)) /
                               std::sqrt(1.0 - 4.0 * y * ts);
        t.push(std::abs(sum2 - expect2), 1e-8 * (1.0 + std::abs(expect2)));
    }
    // Burchnall with f = 1: (x + 2y d_x)^n 1 = H_n(x,y), exact operator route.
    for (int n = 0; n <= 10; ++n) {
        RatPoly2 acc(Rational(1));
        const RatPoly2 x = RatPoly2::monomial(1, 0, Rational(1));
        const RatPoly2 two_y = RatPoly2::monomial(0, 1, Rational(2));
        for (int k = 0; k < n; ++k) acc = x * acc + two_y * acc.dx();
        t.push(acc == hermite2_poly_q(n) ? 0.0 : 1.0, 0.5);
    }
    return t.done("polynomial-battery");
}

using CheckFn = CheckResult (*)();

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> r = {
        {"j0-integral", check_j0_integral},
        {"ml-integral", check_ml_integral},
        {"fresnel", check_fresnel},
        {"supergaussian-integral", check_supergaussian},
        {"glaisher-diffusion", check_glaisher_diffusion},
        {"fractional-moments", check_fractional_moments},
        {"gtf-identities", check_gtf_identities},
        {"matrix-sqrt-two-ways", check_matrix_sqrt_two_ways},
        {"laguerre-napier", check_laguerre_napier},
        {"fel-gain-curve", check_fel_gain_curve},
        {"exact-sequences", check_sequences},
        {"gosper-hbef", check_gosper},
        {"polynomial-battery", check_polynomial_battery},
    };
    return r;
}

}  // namespace

std::vector<std::string> acceptance_names() {
    std::vector<std::string> names;
    for (const auto& [n, f] : registry()) names.push_back(n);
    return names;
}

CheckResult run_acceptance_check(const std::string& name) {
    for (const auto& [n, f] : registry()) {
        if (n == name) {
            try {
                return f();
            } catch (const std::exception& e) {
                return {name, false, std::string("exception: ") + e.what()};
            }
        }
    }
    throw DomainError("unknown acceptance check: " + name);
}

std::vector<CheckResult> run_acceptance(std::ostream* progress) {
    std::vector<CheckResult> out;
    for (const auto& [n, f] : registry()) {
        CheckResult r = run_acceptance_check(n);
        if (progress)
            (*progress) << (r.pass ? "PASS " : "FAIL ") << r.name << ": "
                        << r.detail << "\n";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace umbra
