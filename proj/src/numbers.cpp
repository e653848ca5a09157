#include "umbra/numbers.hpp"

#include <cmath>

namespace umbra {

// ---------------------------------------------------------------------------
// Harmonic numbers
// ---------------------------------------------------------------------------

Rational harmonic(int n) {
    if (n < 0) throw DomainError("harmonic: n >= 0");
    Rational h(0);
    for (int r = 1; r <= n; ++r) h += Rational(1, static_cast<unsigned>(r));
    return h;
}

double harmonic_real(double x) {
    if (x <= -1.0) throw DomainError("harmonic_real: requires x > -1");
    return digamma(x + 1.0) + euler_gamma;
}

Rational hohn(int m, int n) {
    if (m < 1 || n < 0) throw DomainError("hohn: m >= 1, n >= 0");
    Rational h(0);
    for (int r = 1; r <= n; ++r) {
        Rational p(1, static_cast<unsigned>(r));
        Rational t(1);
        for (int k = 0; k < m; ++k) t *= p;
        h += t;
    }
    return h;
}

double hohn_real(int m, long n) {
    if (m < 1 || n < 0) throw DomainError("hohn_real: m >= 1, n >= 0");
    // Kahan-compensated ascending sum.
    double sum = 0.0, comp = 0.0;
    for (long r = n; r >= 1; --r) {  // small terms first
        const double t = std::pow(1.0 / static_cast<double>(r), m);
        const double y = t - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// HBEF and generating functions
// ---------------------------------------------------------------------------

double hbef(double x, const SeriesConfig& cfg) { return hbef_deriv(x, 0, cfg); }

double hbef_deriv(double x, int m, const SeriesConfig& cfg) {
    if (m < 0) throw DomainError("hbef_deriv: m >= 0");
    if (std::abs(x) > 20.0)
        throw NonConvergence("hbef: |x| outside series policy (<=20)");
    double h = 0.0;
    for (int k = 1; k <= m; ++k) h += 1.0 / k;  // h_m
    double power = 1.0;      // x^n / n!
    double hn = h;           // h_{n+m}
    SeriesResult r = sum_series(
        [&](int n) {
            if (n == 0) return Complex(m == 0 ? 1.0 : h);  // h_0 = 0 -> 1 + sum
            power *= x / n;
            hn += 1.0 / (n + m);
            return Complex(hn * power);
        },
        cfg);
    if (!r.converged) throw NonConvergence("hbef: series did not converge");
    return r.value.real();
}

double hbef_gosper(double x) {
    if (x <= 0.0) throw DomainError("hbef_gosper: closed form needs x > 0");
    return 1.0 + std::exp(x) * (std::log(x) + exp_integral_e1(x) + euler_gamma);
}

double hohn_genfun(int p, double t, const SeriesConfig& cfg) {
    if (p < 1) throw DomainError("hohn_genfun: p >= 1");
    if (std::abs(t) > 20.0)
        throw NonConvergence("hohn_genfun: |t| outside series policy (<=20)");
    double power = 1.0;
    double hn = 0.0;
    SeriesResult r = sum_series(
        [&](int n) {
            if (n == 0) return Complex(1.0);
            power *= t / n;
            hn += std::pow(1.0 / n, p);
            return Complex(hn * power);
        },
        cfg);
    if (!r.converged) throw NonConvergence("hohn_genfun: series did not converge");
    return r.value.real();
}

double hohn_genfun_transform(int p, double t, const SeriesConfig& cfg) {
    if (p < 1) throw DomainError("hohn_genfun_transform: p >= 1");
    const double et = std::exp(t);
    // e^t - e_n(t) = sum_{r>n} t^r/r!, decays fast once n > |t|.
    double sum = et;
    for (int n = 1; n < cfg.max_terms; ++n) {
        double tail = 0.0, term = std::pow(t, n + 1) / gamma_fn(n + 2.0);
        for (int r = n + 1; r < n + 200; ++r) {
            tail += term;
            term *= t / (r + 1);
            if (std::abs(term) < 1e-18 * (std::abs(tail) + 1e-300)) break;
        }
        const double add = tail / std::pow(n + 1.0, p);
        sum += add;
        if (std::abs(add) < cfg.rel_tol * std::abs(sum) + 1e-18) return sum;
    }
    throw NonConvergence("hohn_genfun_transform did not converge");
}

// ---------------------------------------------------------------------------
// Truncated exponential numbers
// ---------------------------------------------------------------------------

double trunc_exp_number(double alpha, const QuadratureConfig& cfg) {
    const double g = gamma_fn(alpha + 1.0);  // PoleError on negative integers
    return integrate_halfline(
               [alpha](double s) {
                   return std::exp(-s) * std::pow(1.0 + s, alpha);
               },
               cfg) /
           g;
}

// ---------------------------------------------------------------------------
// Motzkin
// ---------------------------------------------------------------------------

Rational motzkin_assoc_frac(int q, int n) {
    if (q < 0 || n < 0) throw DomainError("motzkin_assoc_frac: q, n >= 0");
    // P_n^{(q)}(1,1) = n! sum_r 1/((n-2r)! r! (r+q)!)
    Rational sum(0);
    for (int r = 0; 2 * r <= n; ++r) {
        Rational d(big_factorial(n - 2 * r) * big_factorial(r) *
                   big_factorial(r + q));
        sum += Rational(1) / d;
    }
    return Rational(big_factorial(n)) * sum;
}

BigInt motzkin(int n) {
    const Rational m = motzkin_assoc_frac(1, n);
    if (m.get_den() != 1) throw Error("motzkin: non-integer value");
    return m.get_num();
}

std::vector<BigInt> motzkin_row(int n) {
    if (n < 0) throw DomainError("motzkin_row: n >= 0");
    // m_{n,s} = C(n,s) f_s with f_s = Catalan(s/2) on even s, 0 on odd.
    std::vector<BigInt> row(n + 1);
    for (int s = 0; s <= n; ++s) {
        if (s % 2) {
            row[s] = 0;
            continue;
        }
        const int k = s / 2;
        BigInt catalan = big_binomial(2 * k, k) / BigInt(k + 1);
        row[s] = big_binomial(n, s) * catalan;
    }
    return row;
}

BigInt motzkin_assoc(int q, int n) {
    Rational m = motzkin_assoc_frac(q, n);
    m *= Rational(big_factorial(n + q)) / Rational(big_factorial(n));
    if (m.get_den() != 1) throw Error("motzkin_assoc: non-integer value");
    return m.get_num();
}

bool motzkin_selfconv_check(int n) {
    Rational lhs(0);
    for (int s = 0; s <= n; ++s) lhs += Rational(motzkin(n - s) * motzkin(s));
    const Rational rhs = Rational(2 * (n + 1)) * motzkin_assoc_frac(2, n);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Telephone
// ---------------------------------------------------------------------------

BigInt telephone(int n) { return telephone_m(2, n); }

std::vector<BigInt> telephone_row(int n) {
    if (n < 0) throw DomainError("telephone_row: n >= 0");
    // t_{n,s} = C(n,s) (s-1)!! on even s (h_s(1/2) = (2k)!/(k! 2^k)), 0 on odd.
    std::vector<BigInt> row(n + 1);
    for (int s = 0; s <= n; ++s) {
        if (s % 2) {
            row[s] = 0;
            continue;
        }
        BigInt doublefact;
        mpz_2fac_ui(doublefact.get_mpz_t(), s > 0 ? s - 1 : 0);  // (s-1)!!
        row[s] = big_binomial(n, s) * doublefact;
    }
    return row;
}

BigInt telephone_m(int m, int n) {
    if (m < 2 || n < 0) throw DomainError("telephone_m: m >= 2, n >= 0");
    // T_{k+1} = T_k + k!/(k-m+1)! T_{k+1-m}
    std::vector<BigInt> t(n + 1);
    t[0] = 1;
    for (int k = 0; k < n; ++k) {
        BigInt v = t[k];
        if (k + 1 - m >= 0) {
            BigInt fall(1);
            for (int j = 0; j < m - 1; ++j) fall *= (k - j);
            v += fall * t[k + 1 - m];
        }
        t[k + 1] = v;
    }
    return t[n];
}

BigInt telephone_m_series(int m, int n) {
    if (m < 2 || n < 0) throw DomainError("telephone_m_series: m >= 2, n >= 0");
    // H_n^{(m)}(1, 1/m) = n! sum_r (1/m)^r / ((n-mr)! r!)
    Rational sum(0);
    for (int r = 0; m * r <= n; ++r) {
        Rational t(1);
        for (int j = 0; j < r; ++j) t /= m;
        t /= Rational(big_factorial(n - m * r) * big_factorial(r));
        sum += t;
    }
    sum *= Rational(big_factorial(n));
    if (sum.get_den() != 1)
        throw Error("telephone_m_series: non-integer value");
    return sum.get_num();
}

}  // namespace umbra
