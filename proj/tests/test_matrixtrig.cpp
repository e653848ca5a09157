#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "umbra/acceptance.hpp"
#include "umbra/matrixtrig.hpp"

using namespace umbra;

namespace {

double urand(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * (rng() / 4294967296.0);
}

MatC2 circular() {
    MatC2 m;
    m(0, 1) = -1.0;
    m(1, 0) = 1.0;
    return m;
}

MatC2 random2(std::mt19937& rng, double lo = -1.0, double hi = 1.0) {
    for (;;) {
        MatC2 m;
        for (int i = 0; i < 4; ++i) m.m[i] = urand(rng, lo, hi);
        if (eig2(m).separation > 1e-2) return m;
    }
}

MatC3 random3(std::mt19937& rng) {
    for (;;) {
        MatC3 m;
        for (int i = 0; i < 9; ++i) m.m[i] = urand(rng, -1.0, 1.0);
        if (eig3(m).separation > 1e-2) return m;
    }
}

}  // namespace

TEST_CASE("gtf2 on the unit circular matrix is ordinary trigonometry") {
    const MatC2 i2 = circular();
    for (double t : {-1.3, 0.0, 0.4, 2.0}) {
        const Gtf2Result g = gtf2(i2, t);
        CHECK(g.C.real() == doctest::Approx(std::cos(t)).epsilon(1e-14));
        CHECK(std::abs(g.C.imag()) < 1e-14);
        CHECK(g.S.real() == doctest::Approx(std::sin(t)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(gtf2(MatC2::identity(), 1.0), DegenerateSpectrum);
}

TEST_CASE("gtf2 coefficients c_nu, s_nu") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 30; ++trial) {
        const MatC2 m = random2(rng);
        auto [cm1, sm1] = gtf2_coeff(m, -1.0);
        const Complex tr = m.trace(), det = m.det();
        CHECK(std::abs(cm1 - tr / det) <= 1e-11 * std::abs(tr / det) + 1e-13);
        CHECK(std::abs(sm1 + 1.0 / det) <= 1e-11 * std::abs(1.0 / det) + 1e-13);
        // Reconstruction really is the inverse.
        MatC2 inv = cm1 * MatC2::identity() + sm1 * m;
        const MatC2 prod = inv * m;
        CHECK((prod - MatC2::identity()).norm() < 1e-11 * (1.0 + inv.norm()));
        // Integer coefficients follow the two-term recurrence
        // c_m = -det c_{m-2} + tr c_{m-1} (and the same for s).
        for (int k = 2; k <= 6; ++k) {
            auto [ck, sk] = gtf2_coeff(m, double(k));
            auto [ck1, sk1] = gtf2_coeff(m, double(k - 1));
            auto [ck2, sk2] = gtf2_coeff(m, double(k - 2));
            CHECK(std::abs(ck - (-det * ck2 + tr * ck1)) <=
                  1e-11 * (1.0 + std::abs(ck)));
            CHECK(std::abs(sk - (-det * sk2 + tr * sk1)) <=
                  1e-11 * (1.0 + std::abs(sk)));
        }
    }
    // On the circular matrix c_{-1}, s_{-1} = (0, -1): i^{-1} = -i.
    auto [c, s] = gtf2_coeff(circular(), -1.0);
    CHECK(std::abs(c) < 1e-14);
    CHECK(s.real() == doctest::Approx(-1.0));
    // Fibonacci: tr = 1, det = -1 makes s_m the Fibonacci sequence.
    MatC2 fib;
    fib(0, 0) = 1.0;
    fib(0, 1) = 1.0;
    fib(1, 0) = 1.0;
    const double fibref[11] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (int k = 0; k <= 10; ++k) {
        auto [ck, sk] = gtf2_coeff(fib, double(k));
        CHECK(sk.real() == doctest::Approx(fibref[k]).epsilon(1e-12));
    }
    // Branch policy: non-integer power of a negative-real spectrum.
    MatC2 neg;
    neg(0, 0) = -2.0;
    neg(1, 1) = -3.0;
    CHECK_THROWS_AS(gtf2_coeff(neg, 0.5), BranchError);
}

TEST_CASE("pi_plus_minus identities") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        const MatC2 m = random2(rng);
        const EigenPair2 e = eig2(m);
        for (const auto& l : e.lambda) {
            if (std::abs(std::arg(l)) >= pi - 1e-6 || std::abs(l) < 1e-6)
                continue;
            const Complex pi_l = 2.0 * std::log(l) / l;
            CHECK(std::abs(std::exp(l * pi_l / 2.0) - l) <=
                  1e-12 * std::abs(l));
        }
    }
}

TEST_CASE("gtf2 subtraction formulae") {
    std::mt19937 rng(888);
    for (int trial = 0; trial < 25; ++trial) {
        const MatC2 m = random2(rng);
        const Complex s2 = m.trace();
        const Complex c2 = -m.det();
        const double t = urand(rng, -1.5, 1.5);
        const double tp = urand(rng, -1.5, 1.5);
        const Gtf2Result a = gtf2(m, t);
        const Gtf2Result b = gtf2(m, tp);
        const Gtf2Result d = gtf2(m, t - tp);
        const Complex ec = std::exp(-s2 * tp);
        const Complex crhs =
            ec * (s2 * b.S * a.C + b.C * a.C - c2 * a.S * b.S);
        const Complex srhs = -ec * (a.C * b.S - b.C * a.S);
        CHECK(std::abs(d.C - crhs) <= 1e-9 * (1.0 + std::abs(d.C)));
        CHECK(std::abs(d.S - srhs) <= 1e-9 * (1.0 + std::abs(d.S)));
    }
}

TEST_CASE("gtf3 basics and duplication") {
    MatC3 diag;
    diag(0, 0) = 1.0;
    diag(1, 1) = 2.0;
    diag(2, 2) = 3.0;
    const Gtf3Result g0 = gtf3(diag, 0.0);
    CHECK(g0.C0.real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(g0.C1) < 1e-12);
    CHECK(std::abs(g0.C2) < 1e-12);

    std::mt19937 rng(999);
    for (int trial = 0; trial < 10; ++trial) {
        const MatC3 m = random3(rng);
        const double t = 0.3;
        const Gtf3Result g = gtf3(m, t);
        const Gtf3Result g2 = gtf3(m, 2.0 * t);
        // Brute-force multinomial duplication: squaring the reconstruction
        // expands through M^{n2+2n3} = sum_a ac_{n2+2n3} M^a.
        std::array<Complex, 3> dup{Complex(0.0), Complex(0.0), Complex(0.0)};
        const Complex cs[3] = {g.C0, g.C1, g.C2};
        for (int n1 = 0; n1 <= 2; ++n1) {
            for (int n2 = 0; n2 + n1 <= 2; ++n2) {
                const int n3 = 2 - n1 - n2;
                const double multinom = factorial(2) /
                                        (factorial(n1) * factorial(n2) *
                                         factorial(n3));
                const int power = n2 + 2 * n3;
                const auto ac = gtf3_coeff(m, double(power));
                const Complex w = multinom * std::pow(cs[0], n1) *
                                  std::pow(cs[1], n2) * std::pow(cs[2], n3);
                for (int a = 0; a < 3; ++a) dup[a] += w * ac[a];
            }
        }
        CHECK(std::abs(g2.C0 - dup[0]) <= 1e-8 * (1.0 + std::abs(g2.C0)));
        CHECK(std::abs(g2.C1 - dup[1]) <= 1e-8 * (1.0 + std::abs(g2.C1)));
        CHECK(std::abs(g2.C2 - dup[2]) <= 1e-8 * (1.0 + std::abs(g2.C2)));
    }
}

TEST_CASE("matrix logarithm parameterization") {
    // Rotation by theta = 0.5: T = theta * circular.
    const double th = 0.5;
    MatC2 rot;
    rot(0, 0) = std::cos(th);
    rot(0, 1) = -std::sin(th);
    rot(1, 0) = std::sin(th);
    rot(1, 1) = std::cos(th);
    const MatC2 t2 = matrix_log_param2(rot);
    CHECK(std::abs(t2(0, 0)) < 1e-12);
    CHECK(t2(0, 1).real() == doctest::Approx(-th).epsilon(1e-12));
    CHECK(t2(1, 0).real() == doctest::Approx(th).epsilon(1e-12));

    MatC2 scaled = std::exp(1.0) * MatC2::identity();
    CHECK_THROWS_AS(matrix_log_param2(scaled), DegenerateSpectrum);

    // Round trips through the Taylor oracle, principal-branch-safe draws.
    std::mt19937 rng(1212);
    int done = 0;
    while (done < 20) {
        const MatC2 t = random2(rng);
        const EigenPair2 e = eig2(t);
        bool safe = true;
        for (const auto& l : e.lambda)
            if (std::abs(l.imag()) > 3.0) safe = false;
        if (!safe) continue;
        const MatC2 sigma = oracle::expm_taylor(t, 1.0);
        const MatC2 back = matrix_log_param2(sigma);
        CHECK((back - t).norm() <= 1e-8 * (1.0 + t.norm()));
        ++done;
    }
    done = 0;
    while (done < 10) {
        const MatC3 t = random3(rng);
        const MatC3 sigma = oracle::expm_taylor(t, 1.0);
        const MatC3 back = matrix_log_param3(sigma);
        CHECK((back - t).norm() <= 1e-8 * (1.0 + t.norm()));
        ++done;
    }
}

TEST_CASE("matrix roots through the eigen route") {
    // tau = 0 is the identity (spectrum drawn off the branch cut).
    std::mt19937 rng(4321);
    MatC2 a0;
    for (;;) {
        a0 = random2(rng);
        const EigenPair2 e = eig2(a0);
        bool off_cut = true;
        for (const auto& l : e.lambda)
            if (std::abs(std::arg(l)) > pi - 0.2) off_cut = false;
        if (off_cut) break;
    }
    CHECK((matrix_root_exp_eigen(a0, 0.0, 2) - MatC2::identity()).norm() <
          1e-12);
    // Damped matrix rotation: e^{-tau sqrt(i2)} with sqrt(i2) = a (1 + i2),
    // a = sqrt(2)/2.
    const double tau = 0.7;
    const double a = std::sqrt(2.0) / 2.0;
    const MatC2 damped = matrix_root_exp_eigen(circular(), -tau, 2);
    const double damp = std::exp(-a * tau);
    CHECK(damped(0, 0).real() ==
          doctest::Approx(damp * std::cos(a * tau)).epsilon(1e-12));
    CHECK(damped(0, 1).real() ==
          doctest::Approx(damp * std::sin(a * tau)).epsilon(1e-12));
    CHECK(damped(1, 0).real() ==
          doctest::Approx(-damp * std::sin(a * tau)).epsilon(1e-12));
    // (A^{1/2})^2 = A by squaring the interpolated root coefficients.
    MatC2 spd;
    spd(0, 0) = 1.0;
    spd(0, 1) = 0.5;
    spd(1, 0) = 0.5;
    spd(1, 1) = 1.0;
    {
        const EigenPair2 e = eig2(spd);
        const Complex f1 =
            (std::sqrt(e.lambda[0]) - std::sqrt(e.lambda[1])) /
            (e.lambda[0] - e.lambda[1]);
        const Complex f0 = std::sqrt(e.lambda[0]) - f1 * e.lambda[0];
        const MatC2 root = f0 * MatC2::identity() + f1 * spd;
        CHECK((root * root - spd).norm() < 1e-10);
    }
    // e^{tau A^{1/n}} against the Taylor oracle applied to the root.
    for (int root_n : {2, 3}) {
        const MatC2 m = random2(rng, 0.0, 1.0);  // eigenvalues off the cut
        const EigenPair2 e = eig2(m);
        if (e.lambda[0].real() <= 0.05 || e.lambda[1].real() <= 0.05) continue;
        const double inv = 1.0 / root_n;
        const Complex f1 = (std::pow(e.lambda[0], inv) -
                            std::pow(e.lambda[1], inv)) /
                           (e.lambda[0] - e.lambda[1]);
        const Complex f0 = std::pow(e.lambda[0], inv) - f1 * e.lambda[0];
        MatC2 root = f0 * MatC2::identity() + f1 * m;
        const MatC2 direct = oracle::expm_taylor(root, 0.8);
        const MatC2 viagtf = matrix_root_exp_eigen(m, 0.8, root_n);
        CHECK((direct - viagtf).norm() <= 1e-10 * (1.0 + direct.norm()));
    }
    // 3x3 root squares back.
    std::mt19937 rng3(11);
    for (int trial = 0; trial < 5; ++trial) {
        MatC3 m;
        for (int i = 0; i < 3; ++i) m(i, i) = 1.0 + i + 0.2 * trial;
        m(0, 1) = 0.3;
        m(1, 2) = -0.2;
        const MatC3 e1 = matrix_root_exp_eigen(m, 0.5, 2);
        const MatC3 e2 = matrix_root_exp_eigen(m, 1.0, 2);
        CHECK((e1 * e1 - e2).norm() <= 1e-9 * (1.0 + e2.norm()));
    }
}

TEST_CASE("Levy-transform matrix square root") {
    QuadratureConfig qc;
    qc.rel_tol = 1e-9;
    // A = identity: e^{-tau} I through the scalar Levy identity.
    const MatC2 lid = matrix_sqrt_exp_levy(MatC2::identity(), 1.0, qc);
    CHECK(lid(0, 0).real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));
    CHECK(std::abs(lid(0, 1)) < 1e-9);
    // Diagonal matrices go through per-eigenvalue.
    MatC2 d;
    d(0, 0) = 2.0;
    d(1, 1) = 3.0;
    const MatC2 ld = matrix_sqrt_exp_levy(d, 1.0, qc);
    CHECK(ld(0, 0).real() ==
          doctest::Approx(std::exp(-std::sqrt(2.0))).epsilon(1e-7));
    CHECK(ld(1, 1).real() ==
          doctest::Approx(std::exp(-std::sqrt(3.0))).epsilon(1e-7));
    // tau = 0: the Levy density integrates to one.
    const MatC2 l0 = matrix_sqrt_exp_levy(d, 0.0, qc);
    CHECK((l0 - MatC2::identity()).norm() < 1e-9);
    MatC2 neg;
    neg(0, 0) = -1.0;
    neg(1, 1) = 2.0;
    CHECK_THROWS_AS(matrix_sqrt_exp_levy(neg, 1.0, qc), DomainError);
}

TEST_CASE("second order evolution") {
    // A = 1 (uncoupled): Y = (cos t, 0).
    for (double t : {0.0, 0.7, 2.5}) {
        const Vec2 y = second_order_evolve(MatC2::identity(), {1.0, 0.0},
                                           {0.0, 0.0}, t);
        CHECK(y[0].real() == doctest::Approx(std::cos(t)).epsilon(1e-10));
        CHECK(std::abs(y[1]) < 1e-12);
    }
    // Reference matrix from the oscillator demo; residual of Y'' = -A Y by
    // finite differences over a time sweep.
    MatC2 a1;
    a1(0, 0) = 1.0;
    a1(0, 1) = 0.5;
    a1(1, 0) = 0.5;
    a1(1, 1) = 1.0;
    const Vec2 y0 = {1.0, 0.0};
    const Vec2 v0 = {-0.1, 0.2};
    // t = 0 returns the initial state exactly.
    const Vec2 at0 = second_order_evolve(a1, y0, v0, 0.0);
    CHECK(std::abs(at0[0] - y0[0]) < 1e-14);
    CHECK(std::abs(at0[1] - y0[1]) < 1e-14);
    const double h = 1e-4;
    for (double t = 0.5; t <= 30.0; t += 3.1) {
        const Vec2 ym = second_order_evolve(a1, y0, v0, t - h);
        const Vec2 yc = second_order_evolve(a1, y0, v0, t);
        const Vec2 yp = second_order_evolve(a1, y0, v0, t + h);
        for (int i = 0; i < 2; ++i) {
            const Complex ypp = (yp[i] - 2.0 * yc[i] + ym[i]) / (h * h);
            const Complex rhs = -(a1(i, 0) * yc[0] + a1(i, 1) * yc[1]);
            CHECK(std::abs(ypp - rhs) <= 1e-5 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("axion-photon two-state system") {
    // Decoupled: no axion production.
    const AxionParams decoupled{1.0, 0.0, 0.3};
    for (double wt : {0.0, 5.0, 50.0}) {
        auto [g, a] = axion_photon_prob(decoupled, wt);
        CHECK(a == doctest::Approx(0.0));
        CHECK(g == doctest::Approx(1.0).epsilon(1e-12));
    }
    // t = 0 is the pure photon state.
    const AxionParams p1{1.0, 2e-9, 0.3};
    {
        auto [g, a] = axion_photon_prob(p1, 0.0);
        CHECK(g == doctest::Approx(1.0));
        CHECK(a == doctest::Approx(0.0));
    }
    // Conservation and the eigen-derived sinusoid for the reference case.
    const double N = 2.0 * p1.n_refr - 1.0;
    const double M = 1.0 - p1.mass_ratio * p1.mass_ratio;
    const double disc =
        std::sqrt((N - M) * (N - M) + 4.0 * p1.coupling * p1.coupling);
    const double lp = 0.5 * (N + M + disc), lm = 0.5 * (N + M - disc);
    const double amp = 4.0 * p1.coupling * p1.coupling / (disc * disc);
    for (double wt : {1e7, 5e7, 2e8}) {
        auto [g, a] = axion_photon_prob(p1, wt);
        CHECK(g + a == doctest::Approx(1.0).epsilon(1e-9));
        const double phase = 0.5 * wt * (std::sqrt(lp) - std::sqrt(lm));
        const double expect = amp * std::sin(phase) * std::sin(phase);
        CHECK(a == doctest::Approx(expect).epsilon(1e-6));
    }
    // Small-G closed form in the n ~ 1, mu << 1 regime.
    const AxionParams p2{1.0, 1e-3, 1e-6};
    for (double wt : {100.0, 1000.0, 4000.0}) {
        auto [g, a] = axion_photon_prob(p2, wt);
        const double closed = axion_photon_prob_smallg(p2, wt);
        CHECK(a == doctest::Approx(closed).epsilon(1e-5));
        CHECK(g + a == doctest::Approx(1.0).epsilon(1e-9));
    }
    // Mass above the lambda- >= 0 bound.
    CHECK_THROWS_AS(axion_photon_prob({1.0, 0.5, 1.2}, 1.0), DomainError);
}

TEST_CASE("laguerre trigonometry") {
    SeriesConfig sc;
    CHECK(l_exp(1.0, sc) ==
          doctest::Approx(2.2795853023360673).epsilon(1e-15));
    CHECK(l_cos(0.0, sc) == doctest::Approx(1.0));
    CHECK(l_sin(0.0, sc) == doctest::Approx(0.0));
    // l_exp(x) = I0(2 sqrt(x)) for x >= 0 (series cross-route).
    for (double x : {0.5, 4.0, 20.0}) {
        CHECK(l_exp(x, sc) ==
              doctest::Approx(bessel_i(0.0, 2.0 * std::sqrt(x), sc))
                  .epsilon(1e-13));
    }
    // Duplication product rule (2 (x)_l x)^n = (2n)!/(n!)^2 x^n.
    CHECK(otimes_l_pow(2, 1.0, 2) == doctest::Approx(6.0));
    CHECK(otimes_l_pow(2, 0.5, 3) ==
          doctest::Approx(20.0 * 0.125).epsilon(1e-13));
    CHECK(otimes_l_pow(1, 0.7, 4) == doctest::Approx(std::pow(0.7, 4)));
    // Duplication theorem at matched truncation: l_c(2 (x) x) from the
    // composed series equals l_c^2 - l_s^2.
    for (double x : {0.3, 0.8}) {
        double lhs_c = 0.0, lhs_s = 0.0;
        double fact2 = 1.0;
        for (int n = 0; n <= 40; ++n) {
            if (n > 0) fact2 *= double(n) * double(n);
            const double term = otimes_l_pow(2, x, n) / fact2;
            switch (n % 4) {
                case 0: lhs_c += term; break;
                case 1: lhs_s += term; break;
                case 2: lhs_c -= term; break;
                case 3: lhs_s -= term; break;
            }
        }
        const double c = l_cos(x, sc), s = l_sin(x, sc);
        CHECK(std::abs(lhs_c - (c * c - s * s)) <= 1e-10);
        CHECK(std::abs(lhs_s - 2.0 * c * s) <= 1e-10);
    }
    CHECK_THROWS_AS(l_cos(60.0, sc), NonConvergence);
}

TEST_CASE("pseudo-hyperbolic functions of order 3") {
    SeriesConfig sc;
    CHECK(phf3(0, 0.0, sc) == doctest::Approx(1.0));
    for (double x : {-2.0, 0.7, 3.0}) {
        CHECK(phf3(0, x, sc) + phf3(1, x, sc) + phf3(2, x, sc) ==
              doctest::Approx(std::exp(x)).epsilon(1e-12));
        // Cube-roots-of-unity representation
        // [k,3]e(x) = (1/3) sum_p w_p^{-k} e^{w_p x}.
        for (int k = 0; k <= 2; ++k) {
            Complex rep(0.0);
            for (int p = 0; p < 3; ++p) {
                const Complex w =
                    std::exp(Complex(0.0, 2.0 * pi * p / 3.0));
                rep += std::pow(w, -k) * std::exp(w * x);
            }
            CHECK(phf3(k, x, sc) ==
                  doctest::Approx(rep.real() / 3.0).epsilon(1e-12));
        }
        CHECK(phf3_ch(x, sc) ==
              doctest::Approx(0.5 * (phf3(0, x, sc) + phf3(0, -x, sc)))
                  .epsilon(1e-12));
        CHECK(phf3_sh(x, sc) ==
              doctest::Approx(0.5 * (phf3(0, x, sc) - phf3(0, -x, sc)))
                  .epsilon(1e-12));
    }
    // (1 (+)_{[0,3]} 1)^{3n} = (1/3)(2^{3n} + 2(-1)^n).
    for (int n = 1; n <= 4; ++n) {
        CHECK(oplus_phf3_pow(1.0, 1.0, 3 * n) ==
              doctest::Approx((std::pow(2.0, 3 * n) + 2.0 * ((n % 2) ? -1.0 : 1.0)) /
                              3.0)
                  .epsilon(1e-12));
    }
    CHECK(oplus_phf3_pow(1.0, 1.0, 3) == doctest::Approx(2.0));
    // Addition theorems through the w_p exponential representation.
    for (double al : {0.4, 1.1}) {
        for (double be : {0.3, 0.9}) {
            auto e3 = [&](double x) { return phf3(0, x, sc); };
            const double lhs_ch =
                0.5 * (e3(al) * e3(be) + e3(-al) * e3(-be));
            const double rhs_ch = phf3_ch(al, sc) * phf3_ch(be, sc) +
                                  phf3_sh(al, sc) * phf3_sh(be, sc);
            CHECK(std::abs(lhs_ch - rhs_ch) <= 1e-10);
            const double lhs_sh =
                0.5 * (e3(al) * e3(be) - e3(-al) * e3(-be));
            const double rhs_sh = phf3_ch(al, sc) * phf3_sh(be, sc) +
                                  phf3_sh(al, sc) * phf3_ch(be, sc);
            CHECK(std::abs(lhs_sh - rhs_sh) <= 1e-10);
        }
    }
}

TEST_CASE("Fresnel-type gaussian integrals of the GTF") {
    MatC2 m;
    m(0, 0) = 2.0;
    m(0, 1) = 0.3;
    m(1, 0) = 0.1;
    m(1, 1) = 1.0;
    auto [cint, sint] = gtf2_gauss_integral(m);
    QuadratureConfig qc;
    qc.rel_tol = 1e-10;
    const double cquad = integrate_realline(
        [&](double t) { return gtf2(m, -t * t).C.real(); }, qc);
    const double squad = integrate_realline(
        [&](double t) { return gtf2(m, -t * t).S.real(); }, qc);
    CHECK(cint.real() == doctest::Approx(cquad).epsilon(1e-9));
    CHECK(sint.real() == doctest::Approx(squad).epsilon(1e-9));
    MatC2 bad;
    bad(0, 0) = -1.0;
    bad(1, 1) = 2.0;
    CHECK_THROWS_AS(gtf2_gauss_integral(bad), DomainError);
}

TEST_CASE("phf3 ch/sh parity split is consistent with the series") {
    SeriesConfig sc;
    // ch collects powers 6r, sh powers 6r+3.
    const double x = 1.3;
    double ch = 0.0, sh = 0.0, term = 1.0;
    for (int k = 0; k < 30; ++k) {
        const int p = 3 * k;
        if (k > 0) {
            for (int j = 0; j < 3; ++j) term *= x / (p - j);
        }
        if (k % 2 == 0)
            ch += term;
        else
            sh += term;
    }
    CHECK(phf3_ch(x, sc) == doctest::Approx(ch).epsilon(1e-13));
    CHECK(phf3_sh(x, sc) == doctest::Approx(sh).epsilon(1e-13));
}
