#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "umbra/numbers.hpp"
#include "umbra/polynomials.hpp"

using namespace umbra;

TEST_CASE("harmonic numbers, exact and real-index") {
    CHECK(harmonic(0) == Rational(0));
    CHECK(harmonic(3) == Rational(11, 6));
    CHECK(harmonic_real(3.0) ==
          doctest::Approx(11.0 / 6.0).epsilon(1e-14));
    // psi(x+1)+gamma equals the Euler integral int_0^1 (1-t^x)/(1-t) dt.
    QuadratureConfig qc;
    qc.rel_tol = 1e-11;
    for (double x : {0.5, 2.3, 7.0}) {
        const double integral = integrate_finite(
            [x](double t) {
                return t == 1.0 ? x : (1.0 - std::pow(t, x)) / (1.0 - t);
            },
            0.0, 1.0, qc);
        CHECK(harmonic_real(x) == doctest::Approx(integral).epsilon(1e-8));
    }
    CHECK_THROWS_AS(harmonic_real(-1.0), DomainError);
}

TEST_CASE("higher order harmonic recurrence, exact to n = 10^4") {
    for (int m : {2, 3, 4}) {
        Rational h(0);
        for (int n = 1; n <= 10000; ++n) {
            Rational p(1, static_cast<unsigned>(n));
            Rational t(1);
            for (int k = 0; k < m; ++k) t *= p;
            h += t;  // the recurrence mh_n = mh_{n-1} + 1/n^m, exactly
            if (n == 10 || n == 100)
                CHECK(h == hohn(m, n));  // closed summation agrees
        }
        CHECK(h == hohn(m, 10000));
        CHECK(to_double(h) ==
              doctest::Approx(hohn_real(m, 10000)).epsilon(1e-13));
    }
}

TEST_CASE("HBEF series, derivatives and the Gosper closed form") {
    SeriesConfig sc;
    CHECK(hbef(0.0, sc) == doctest::Approx(1.0));
    CHECK(hbef(1.0, sc) ==
          doctest::Approx(3.1653822153269364).epsilon(1e-14));
    for (double x : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        CHECK(hbef(x, sc) ==
              doctest::Approx(hbef_gosper(x)).epsilon(1e-11));
    }
    // he(x,1) - he(x) = (e^x - x - 1)/x.
    for (double x : {0.3, 1.0, 4.0}) {
        const double resid = hbef_deriv(x, 1, sc) - hbef(x, sc) -
                             (std::exp(x) - x - 1.0) / x;
        CHECK(std::abs(resid) < 1e-10);
    }
    // The m-th derivative through the recurrence route:
    // he(x,m) = he(x) + sum_{r<m} d^r/dx^r (e^x-1-x)/x, with the derivative
    // given by the series sum_j x^j (j+r)!/(j! (j+r+1)!).
    for (int m : {2, 3}) {
        const double x = 0.8;
        double sum_extra = 0.0;
        for (int r = 0; r < m; ++r) {
            double s = 0.0;
            for (int j = (r == 0 ? 1 : 0); j < 80; ++j) {
                s += std::pow(x, j) *
                     std::exp(std::lgamma(j + r + 1.0) - std::lgamma(j + 1.0) -
                              std::lgamma(j + r + 2.0));
            }
            sum_extra += s;
        }
        CHECK(hbef_deriv(x, m, sc) ==
              doctest::Approx(hbef(x, sc) + sum_extra).epsilon(1e-11));
    }
    CHECK_THROWS_AS(hbef(25.0, sc), NonConvergence);
    CHECK_THROWS_AS(hbef_gosper(-1.0), DomainError);
}

TEST_CASE("HOHN generating functions against the transform route") {
    SeriesConfig sc;
    for (int p : {2, 3}) {
        for (double t : {0.4, 1.0, 2.5}) {
            CHECK(hohn_genfun(p, t, sc) ==
                  doctest::Approx(hohn_genfun_transform(p, t, sc))
                      .epsilon(1e-10));
        }
    }
    // p = 1 reduces to the HBEF.
    CHECK(hohn_genfun(1, 0.7, sc) ==
          doctest::Approx(hbef(0.7, sc)).epsilon(1e-12));
}

TEST_CASE("truncated exponential numbers") {
    QuadratureConfig qc;
    qc.rel_tol = 1e-12;
    CHECK(trunc_exp_number(0.0, qc) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trunc_exp_number(2.0, qc) == doctest::Approx(2.5).epsilon(1e-12));
    for (int n : {1, 3, 6}) {
        double expect = 0.0;
        for (int r = 0; r <= n; ++r) expect += 1.0 / factorial(r);
        CHECK(trunc_exp_number(double(n), qc) ==
              doctest::Approx(expect).epsilon(1e-12));
    }
    // e_{-1/2} = (e/sqrt(pi)) Gamma(1/2, 1) = e erfc(1).
    CHECK(trunc_exp_number(-0.5, qc) ==
          doctest::Approx(std::exp(1.0) * std::erfc(1.0)).epsilon(1e-10));
    CHECK(trunc_exp_number(-0.5, qc) ==
          doctest::Approx(0.4275835761558070).epsilon(1e-10));
    CHECK_THROWS_AS(trunc_exp_number(-1.0, qc), PoleError);
}

TEST_CASE("motzkin numbers, triangle and associated forms") {
    const std::vector<long> prefix = {1, 1, 2, 4, 9, 21, 51, 127};
    for (size_t n = 0; n < prefix.size(); ++n)
        CHECK(motzkin(int(n)) == prefix[n]);
    const std::vector<long> row6 = {1, 0, 15, 0, 30, 0, 5};
    const auto row = motzkin_row(6);
    REQUIRE(row.size() == 7);
    for (int s = 0; s <= 6; ++s) CHECK(row[s] == row6[s]);
    // Triangle rows sum to the Motzkin numbers.
    for (int n = 0; n <= 12; ++n) {
        BigInt sum(0);
        for (const auto& v : motzkin_row(n)) sum += v;
        CHECK(sum == motzkin(n));
    }
    // Associated Motzkin: rationals m_n^{(q)} and integerized mtilde.
    CHECK(motzkin_assoc_frac(2, 2) == Rational(5, 6));
    const std::vector<long> mtilde2 = {1, 3, 10, 30, 90, 266, 784, 2304};
    for (size_t n = 0; n < mtilde2.size(); ++n)
        CHECK(motzkin_assoc(2, int(n)) == mtilde2[n]);
    // Self-convolution identity, exact.
    for (int n = 0; n <= 30; ++n) CHECK(motzkin_selfconv_check(n));
    // Hybrid polynomial route agrees: m_n = P_n^{(1)}(1,1).
    for (int n = 0; n <= 10; ++n)
        CHECK(hybrid_p(n, 1, 1.0, 1.0) ==
              doctest::Approx(motzkin(n).get_d()).epsilon(1e-12));
}

TEST_CASE("telephone numbers and generalizations") {
    const std::vector<long> prefix = {1, 1, 2, 4, 10, 26, 76, 232};
    for (size_t n = 0; n < prefix.size(); ++n)
        CHECK(telephone(int(n)) == prefix[n]);
    // T(n) = H_n(1, 1/2).
    for (int n = 0; n <= 12; ++n)
        CHECK(hermite2(n, 1.0, 0.5) ==
              doctest::Approx(telephone(n).get_d()).epsilon(1e-12));
    const std::vector<long> row6 = {1, 0, 15, 0, 45, 0, 15};
    const auto row = telephone_row(6);
    BigInt sum(0);
    for (int s = 0; s <= 6; ++s) {
        CHECK(row[s] == row6[s]);
        sum += row[s];
    }
    CHECK(sum == 76);
    // Duplication T(2n) = sum_r r! C(n,r)^2 T(n-r)^2, exact.
    for (int n = 0; n <= 10; ++n) {
        BigInt rhs(0);
        for (int r = 0; r <= n; ++r) {
            const BigInt t = telephone(n - r);
            rhs += big_factorial(r) * big_binomial(n, r) * big_binomial(n, r) *
                   t * t;
        }
        CHECK(telephone(2 * n) == rhs);
    }
    const std::vector<long> t3 = {1, 1, 1, 3, 9, 21, 81, 351, 1233};
    for (size_t n = 0; n < t3.size(); ++n)
        CHECK(telephone_m(3, int(n)) == t3[n]);
    for (int m = 3; m <= 6; ++m)
        for (int n = 0; n <= 40; ++n)
            CHECK(telephone_m(m, n) == telephone_m_series(m, n));
}

TEST_CASE("harmonic polynomial recurrence, exact") {
    // h_{n+1}(x) = (x+1) h_n(x) + f_n(x), f_n = sum_{s>=1} n!/(n-s)! x^{n-s}/(s+1)!
    auto hpoly = [](int n) {
        std::vector<Rational> c(n + 1, Rational(0));
        c[n] = 1;
        for (int s = 1; s <= n; ++s) {
            Rational hs(0);
            for (int r = 1; r <= s; ++r) hs += Rational(1, unsigned(r));
            c[n - s] = Rational(big_binomial(n, s)) * hs;
        }
        return c;
    };
    for (int n = 0; n <= 15; ++n) {
        const auto hn = hpoly(n);
        const auto hn1 = hpoly(n + 1);
        // rhs coefficients: (x+1) h_n + f_n.
        std::vector<Rational> rhs(n + 2, Rational(0));
        for (int k = 0; k <= n; ++k) {
            rhs[k + 1] += hn[k];
            rhs[k] += hn[k];
        }
        for (int s = 1; s <= n; ++s) {
            rhs[n - s] += Rational(big_factorial(n)) /
                          Rational(big_factorial(n - s) * big_factorial(s + 1));
        }
        for (int k = 0; k <= n + 1; ++k) CHECK(hn1[k] == rhs[k]);
    }
}
