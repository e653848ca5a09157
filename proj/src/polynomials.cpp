#include "umbra/polynomials.hpp"

#include <cmath>
#include <map>

#include "umbra/specfun.hpp"

namespace umbra {

// ---------------------------------------------------------------------------
// Direct floating evaluations
// ---------------------------------------------------------------------------

double hermite2(int n, double x, double y) {
    if (n < 0) throw DomainError("hermite2: n >= 0");
    double hm = 1.0, h = x;  // H_0, H_1
    if (n == 0) return hm;
    for (int k = 1; k < n; ++k) {
        const double hp = x * h + 2.0 * k * y * hm;
        hm = h;
        h = hp;
    }
    return h;
}

Complex hermite2_c(int n, Complex x, Complex y) {
    if (n < 0) throw DomainError("hermite2_c: n >= 0");
    Complex hm(1.0), h = x;
    if (n == 0) return hm;
    for (int k = 1; k < n; ++k) {
        const Complex hp = x * h + 2.0 * double(k) * y * hm;
        hm = h;
        h = hp;
    }
    return h;
}

double hermite_m(int n, int m, double x, double y) {
    if (n < 0 || m < 1) throw DomainError("hermite_m: n >= 0, m >= 1");
    // From e^{xt+yt^m}: H_{k+1} = x H_k + m y (k)_{m-1} H_{k-m+1}.
    std::vector<double> h(n + 1);
    h[0] = 1.0;
    for (int k = 0; k < n; ++k) {
        double v = x * h[k];
        if (k - m + 1 >= 0) {
            double fall = 1.0;  // k (k-1) ... (k-m+2)
            for (int j = 0; j < m - 1; ++j) fall *= k - j;
            v += m * y * fall * h[k - m + 1];
        }
        h[k + 1] = v;
    }
    return h[n];
}

double hermite_multi(int n, std::span<const double> xs) {
    if (n < 0) throw DomainError("hermite_multi: n >= 0");
    if (xs.empty()) throw DomainError("hermite_multi: needs >= 1 variable");
    // level p uses variables x_1..x_p; H^{(1)}_k = x_1^k.
    std::vector<double> prev(n + 1), cur(n + 1);
    prev[0] = 1.0;
    for (int k = 1; k <= n; ++k) prev[k] = prev[k - 1] * xs[0];
    for (size_t p = 2; p <= xs.size(); ++p) {
        const double xp = xs[p - 1];
        for (int k = 0; k <= n; ++k) {
            // H^{(p)}_k = k! sum_r H^{(p-1)}_{k-pr} x_p^r / ((k-pr)! r!)
            double sum = 0.0;
            double coeff = 1.0;  // k!/( (k-pr)! r!) x_p^r, r = 0 term
            for (int r = 0; k - int(p) * r >= 0; ++r) {
                if (r > 0) {
                    // multiply by x_p / r and falling factorial block
                    double fall = 1.0;
                    const int top = k - int(p) * (r - 1);
                    for (int j = 0; j < int(p); ++j) fall *= top - j;
                    coeff *= xp * fall / r;
                }
                sum += coeff * prev[k - int(p) * r];
            }
            cur[k] = sum;
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

double laguerre2(int n, double x, double y) {
    if (n < 0) throw DomainError("laguerre2: n >= 0");
    if (y == 0.0) return std::pow(-x, n) / factorial(n);
    // n! sum (-1)^r y^{n-r} x^r / ((n-r)! r!^2)
    double term = std::pow(y, n);  // r = 0
    double sum = term;
    for (int r = 1; r <= n; ++r) {
        term *= -x * (n - r + 1) / (y * r * r);
        sum += term;
    }
    return sum;
}

double laguerre_lambda(int n, double alpha, double x, double y) {
    if (n < 0) throw DomainError("laguerre_lambda: n >= 0");
    double sum = 0.0;
    for (int r = 0; r <= n; ++r) {
        const double c = factorial(n) /
                         (factorial(n - r) * factorial(r) * gamma_fn(r + alpha + 1.0));
        sum += ((r & 1) ? -1.0 : 1.0) * c * std::pow(y, n - r) * std::pow(x, r);
    }
    return sum;
}

double laguerre_assoc(int n, double alpha, double x, double y) {
    return gamma_fn(n + alpha + 1.0) / factorial(n) *
           laguerre_lambda(n, alpha, x, y);
}

double gegenbauer_k(int n, double nu, double xi, double eta) {
    if (n < 0) throw DomainError("gegenbauer_k: n >= 0");
    double sum = 0.0;
    for (int r = 0; 2 * r <= n; ++r) {
        sum += pochhammer(nu, n - r) * std::pow(xi, n - 2 * r) *
               std::pow(eta, r) / (factorial(n - 2 * r) * factorial(r));
    }
    return factorial(n) * sum;
}

double jacobi_r(int n, double alpha, double beta, double xi, double eta) {
    if (n < 0) throw DomainError("jacobi_r: n >= 0");
    double sum = 0.0;
    for (int s = 0; s <= n; ++s) {
        sum += std::pow(xi, n - s) * std::pow(eta, s) /
               (factorial(n - s) * factorial(s) * gamma_fn(n - s + alpha + 1.0) *
                gamma_fn(s + beta + 1.0));
    }
    const double nf = factorial(n);
    return nf * nf * sum;
}

double jacobi_p(int n, double alpha, double beta, double x) {
    const double nf = factorial(n);
    return gamma_fn(n + alpha + 1.0) * gamma_fn(n + beta + 1.0) / (nf * nf) *
           jacobi_r(n, alpha, beta, 0.5 * (x - 1.0), 0.5 * (x + 1.0));
}

double legendre_p(int n, double x) { return jacobi_p(n, 0.0, 0.0, x); }

double legendre_pi(int n, double x, double y) {
    if (n < 0) throw DomainError("legendre_pi: n >= 0");
    double sum = 0.0;
    for (int k = 0; 2 * k <= n; ++k) {
        const double kf = factorial(k);
        sum += std::pow(x, n - 2 * k) * std::pow(y, k) /
               (kf * kf * factorial(n - 2 * k));
    }
    return factorial(n) * sum;
}

double legendre2(int n, double x, double y) {
    if (n < 0) throw DomainError("legendre2: n >= 0");
    double sum = 0.0;
    for (int r = 0; 2 * r <= n; ++r) {
        sum += gamma_fn(n - r + 0.5) * std::pow(x, n - 2 * r) *
               std::pow(-y, r) / (factorial(n - 2 * r) * factorial(r));
    }
    const double sign = (n & 1) ? -1.0 : 1.0;
    return sign / std::sqrt(pi) * sum;
}

Complex chebyshev_u2(int n, Complex x, Complex y) {
    if (n < 0) throw DomainError("chebyshev_u2: n >= 0");
    Complex sum(0.0);
    for (int r = 0; 2 * r <= n; ++r) {
        sum += factorial(n - r) / (factorial(n - 2 * r) * factorial(r)) *
               std::pow(x, n - 2 * r) * std::pow(-y, r);
    }
    const double sign = (n & 1) ? -1.0 : 1.0;
    return sign * sum;
}

double chebyshev_u2(int n, double x, double y) {
    return chebyshev_u2(n, Complex(x), Complex(y)).real();
}

double chebyshev_u_lacunary(int n, int m, double x, double y) {
    if (n < 0 || m < 2) throw DomainError("chebyshev_u_lacunary: n >= 0, m >= 2");
    double sum = 0.0;
    for (int r = 0; m * r <= n; ++r) {
        double t = factorial(n - (m - 1) * r) /
                   (factorial(n - m * r) * factorial(r)) *
                   std::pow(x, n - m * r) * std::pow(y, r);
        if (((m - 1) * r) & 1) t = -t;
        sum += t;
    }
    return ((n & 1) ? -1.0 : 1.0) * sum;
}

double lambda_poly(int n, double x, double y) {
    if (n < 0) throw DomainError("lambda_poly: n >= 0");
    double sum = 0.0;
    for (int s = 0; s <= n; ++s) {
        double t = std::pow(y, n - s) * std::pow(x, s) /
                   (factorial(2 * s) * factorial(n - s));
        if (s & 1) t = -t;
        sum += t;
    }
    return factorial(n) * sum;
}

double lambda_assoc(int n, double nu, double x, double y) {
    if (n < 0) throw DomainError("lambda_assoc: n >= 0");
    double sum = 0.0;
    for (int s = 0; s <= n; ++s) {
        double t = gamma_fn(nu + s + 1.0) /
                   (factorial(s) * factorial(n - s) *
                    gamma_fn(2.0 * (nu + s) + 1.0)) *
                   std::pow(y, n - s) * std::pow(x, s);
        if (s & 1) t = -t;
        sum += t;
    }
    return factorial(n) * sum;
}

double mlh(int n, double alpha, double x, double y) {
    if (n < 0) throw DomainError("mlh: n >= 0");
    if (alpha <= 0.0) throw DomainError("mlh: requires alpha > 0");
    double sum = 0.0;
    for (int r = 0; 2 * r <= n; ++r) {
        sum += std::pow(x, n - 2 * r) * std::pow(y, r) /
               (factorial(n - 2 * r) * gamma_fn(alpha * r + 1.0));
    }
    return factorial(n) * sum;
}

namespace {

double harmonic_number(int s) {
    double h = 0.0;
    for (int k = 1; k <= s; ++k) h += 1.0 / k;
    return h;
}

}  // namespace

double harmonic_poly(int n, double x) {
    if (n < 0) throw DomainError("harmonic_poly: n >= 0");
    double sum = std::pow(x, n);
    double binom = 1.0;
    for (int s = 1; s <= n; ++s) {
        binom *= double(n - s + 1) / s;
        sum += binom * std::pow(x, n - s) * harmonic_number(s);
    }
    return sum;
}

double harmonic_hermite(int n, double x) {
    if (n < 0) throw DomainError("harmonic_hermite: n >= 0");
    double sum = std::pow(x, n);
    for (int r = 1; 2 * r <= n; ++r) {
        sum += factorial(n) * std::pow(x, n - 2 * r) * harmonic_number(r) /
               (factorial(n - 2 * r) * factorial(r));
    }
    return sum;
}

double trunc_exp_poly(int n, double x) {
    if (n < 0) throw DomainError("trunc_exp_poly: n >= 0");
    double term = 1.0, sum = 1.0;
    for (int r = 1; r <= n; ++r) {
        term *= x / r;
        sum += term;
    }
    return sum;
}

double hybrid_p(int n, int q, double x, double y) {
    if (n < 0 || q < 0) throw DomainError("hybrid_p: n, q >= 0");
    double sum = 0.0;
    for (int r = 0; 2 * r <= n; ++r) {
        sum += std::pow(x, n - 2 * r) * std::pow(y, r) /
               (factorial(n - 2 * r) * factorial(r) * factorial(r + q));
    }
    return factorial(n) * sum;
}

// ---------------------------------------------------------------------------
// Negative order functions by quadrature
// ---------------------------------------------------------------------------

namespace {

// int_0^inf s^{nu-1} g(s) ds with the s = u^m substitution smoothing the
// endpoint for nu < 1.
template <class G>
double power_weighted_halfline(double nu, const G& g,
                               const QuadratureConfig& cfg) {
    if (nu >= 1.0) {
        return integrate_halfline(
            [&](double s) { return std::pow(s, nu - 1.0) * g(s); }, cfg);
    }
    const int m = static_cast<int>(std::ceil(1.0 / nu));
    return integrate_halfline(
        [&](double u) {
            const double s = std::pow(u, m);
            return m * std::pow(u, m * nu - 1.0) * g(s);
        },
        cfg);
}

}  // namespace

double hermite_neg(double nu, double x, double y, const QuadratureConfig& cfg) {
    if (nu <= 0.0) throw DomainError("hermite_neg: requires nu > 0");
    if (x < 0.0 || (x == 0.0 && y <= 0.0))
        throw DomainError("hermite_neg: integrand does not decay");
    const double g = gamma_fn(nu);
    return power_weighted_halfline(
               nu, [&](double s) { return std::exp(-s * x - y * s * s); }, cfg) /
           g;
}

double laguerre_neg(double nu, double x, double y, const QuadratureConfig& cfg) {
    if (nu <= 0.0) throw DomainError("laguerre_neg: requires nu > 0");
    if (y <= 0.0) throw DomainError("laguerre_neg: requires y > 0 for decay");
    const double g = gamma_fn(nu);
    SeriesConfig sc;
    return power_weighted_halfline(
               nu,
               [&](double s) {
                   if (std::abs(s * x) > tricomi_series_xmax) {
                       // |C_0(-u)| <= e^{2 sqrt(|u|)}; past the series window
                       // the term must already be negligible.
                       if (-s * y + 2.0 * std::sqrt(std::abs(s * x)) < -40.0)
                           return 0.0;
                       throw NonConvergence(
                           "laguerre_neg: integrand outside series policy");
                   }
                   return std::exp(-s * y) * tricomi_c(0.0, -s * x, sc);
               },
               cfg) /
           g;
}

double legendre_pi_neg(double nu, double x, double y,
                       const QuadratureConfig& cfg) {
    if (nu <= 0.0) throw DomainError("legendre_pi_neg: requires nu > 0");
    if (x <= 0.0) throw DomainError("legendre_pi_neg: requires x > 0");
    if (y > 0.0)
        throw DomainError("legendre_pi_neg: requires y <= 0 (real J0 argument)");
    const double b = 2.0 * std::sqrt(-y);  // J0(b s)
    const double g = gamma_fn(nu);
    // Truncate where e^{-s x} has died or the J0 series policy would end;
    // account for the remainder with an envelope bound.
    const double s_decay = 45.0 / x;
    const double s_policy = (b > 0.0) ? bessel_series_xmax / b : s_decay;
    const double s_max = std::min(s_decay, s_policy);
    SeriesConfig sc;
    const double val = integrate_finite(
        [&](double s) {
            if (s == 0.0 && nu < 1.0) return 0.0;  // integrable endpoint
            return std::pow(s, nu - 1.0) *
                   std::exp(-s * x) * bessel_j(0.0, b * s, sc);
        },
        0.0, s_max, cfg);
    const double tail =
        std::pow(s_max, nu - 1.0) * std::exp(-s_max * x) / x;  // |J0| <= 1
    if (tail > cfg.rel_tol * std::abs(val) + 10.0 * cfg.abs_tol)
        throw NonConvergence("legendre_pi_neg: truncation tail too large");
    return val / g;
}

double hermite_frac(double nu, double x, double y, const QuadratureConfig& cfg) {
    if (y <= 0.0) throw DomainError("hermite_frac: requires y > 0");
    if (nu < 0.0) throw DomainError("hermite_frac: requires nu >= 0");
    const double pref =
        std::pow(y, 0.5 * nu) * std::exp(x * x / (4.0 * y)) / std::sqrt(pi);
    const double a = x / (2.0 * std::sqrt(y));
    const double phase = 0.5 * pi * nu;
    const double val = integrate_halfline(
        [&](double t) {
            return std::exp(-0.25 * t * t) * std::pow(t, nu) *
                   std::cos(a * t - phase);
        },
        cfg);
    return pref * val;
}

double gegenbauer_derivative_formula(int n, double nu, double x) {
    const double d = 1.0 + x * x;
    const double sign = (n & 1) ? -1.0 : 1.0;
    return sign * gegenbauer_k(n, nu, 2.0 * x / d, -1.0 / d) * std::pow(d, -nu);
}

double laguerre_heat_evolve_exp(double y, double x) {
    if (std::abs(y) >= 1.0)
        throw DomainError("laguerre_heat_evolve_exp: requires |y| < 1");
    return std::exp(-x / (1.0 - y)) / (1.0 - y);
}

double laguerre_heat_evolve_monomial(int n, double y, double x) {
    const double sign = (n & 1) ? -1.0 : 1.0;
    return sign * factorial(n) * laguerre2(n, x, y);
}

double burchnall_expand(int n, double x, double y,
                        std::span<const double> f_derivatives) {
    if (n < 0) throw DomainError("burchnall_expand: n >= 0");
    if (f_derivatives.size() < static_cast<size_t>(n) + 1)
        throw DomainError("burchnall_expand: need f^(0..n)");
    double sum = 0.0;
    double binom = 1.0;
    for (int s = 0; s <= n; ++s) {
        sum += binom * std::pow(2.0 * y, s) * hermite2(n - s, x, y) *
               f_derivatives[s];
        binom *= double(n - s) / (s + 1);
    }
    return sum;
}

double neg_derivative_integral(std::span<const double> f_derivatives, double x,
                               NegDerivativeKind kind, const SeriesConfig& cfg) {
    double sum = 0.0;
    int streak = 0;
    for (size_t s = 0; s < f_derivatives.size(); ++s) {
        double weight;
        if (kind == NegDerivativeKind::Plain) {
            weight = std::pow(x, double(s + 1)) / factorial(int(s) + 1);
        } else {
            // (s+1)-fold antiderivative of cos vanishing at 0 to all orders.
            const int m = int(s) + 1;
            double w = std::cos(x - 0.5 * pi * m);
            double xk = 1.0;
            for (int k = 0; k < m; ++k) {
                w -= std::cos(0.5 * pi * (k - m)) * xk;
                xk *= x / (k + 1);
            }
            weight = w;
        }
        const double term = ((s & 1) ? -1.0 : 1.0) * weight * f_derivatives[s];
        sum += term;
        if (std::abs(term) < cfg.rel_tol * std::abs(sum) + cfg.abs_tol) {
            if (++streak >= cfg.small_streak) return sum;
        } else {
            streak = 0;
        }
    }
    if (streak == 0 && f_derivatives.size() >= static_cast<size_t>(cfg.max_terms))
        throw NonConvergence("neg_derivative_integral: derivative list exhausted");
    return sum;
}

// ---------------------------------------------------------------------------
// PolynomialSpec-driven dispatch
// ---------------------------------------------------------------------------

PolyFamily poly_family_from_name(const std::string& name) {
    static const std::map<std::string, PolyFamily> table = {
        {"hermite2", PolyFamily::Hermite2},
        {"hermitem", PolyFamily::HermiteM},
        {"hermitemulti", PolyFamily::HermiteMulti},
        {"hermiteneg", PolyFamily::HermiteNeg},
        {"laguerre2", PolyFamily::Laguerre2},
        {"laguerreassoc", PolyFamily::LaguerreAssoc},
        {"laguerreneg", PolyFamily::LaguerreNeg},
        {"gegenbauerk", PolyFamily::GegenbauerK},
        {"jacobir", PolyFamily::JacobiR},
        {"jacobip", PolyFamily::JacobiP},
        {"legendre", PolyFamily::Legendre},
        {"legendrepi", PolyFamily::LegendrePi},
        {"legendre2", PolyFamily::Legendre2},
        {"chebyshevu", PolyFamily::ChebyshevU},
        {"chebyshevulacunary", PolyFamily::ChebyshevULacunary},
        {"lambda", PolyFamily::Lambda},
        {"lambdaassoc", PolyFamily::LambdaAssoc},
        {"mlh", PolyFamily::MLH},
        {"harmonicpoly", PolyFamily::HarmonicPoly},
        {"harmonichermite", PolyFamily::HarmonicHermite},
        {"truncexppoly", PolyFamily::TruncExpPoly},
        {"hybrid", PolyFamily::Hybrid},
    };
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown polynomial family: " + name);
    return it->second;
}

double poly_eval(const PolynomialSpec& s) {
    auto pt = [&](size_t i) -> double {
        if (i >= s.point.size())
            throw DomainError("poly_eval: missing evaluation coordinate");
        return s.point[i];
    };
    auto par = [&](size_t i) -> double {
        if (i >= s.params.size())
            throw DomainError("poly_eval: missing family parameter");
        return s.params[i];
    };
    const int n = static_cast<int>(std::llround(s.n));
    switch (s.family) {
        case PolyFamily::Hermite2: return hermite2(n, pt(0), pt(1));
        case PolyFamily::HermiteM:
            return hermite_m(n, int(par(0)), pt(0), pt(1));
        case PolyFamily::HermiteMulti:
            return hermite_multi(n, std::span<const double>(s.point));
        case PolyFamily::HermiteNeg: return hermite_neg(s.n, pt(0), pt(1));
        case PolyFamily::Laguerre2: return laguerre2(n, pt(0), pt(1));
        case PolyFamily::LaguerreAssoc:
            return laguerre_assoc(n, par(0), pt(0), pt(1));
        case PolyFamily::LaguerreNeg: return laguerre_neg(s.n, pt(0), pt(1));
        case PolyFamily::GegenbauerK:
            return gegenbauer_k(n, par(0), pt(0), pt(1));
        case PolyFamily::JacobiR:
            return jacobi_r(n, par(0), par(1), pt(0), pt(1));
        case PolyFamily::JacobiP: return jacobi_p(n, par(0), par(1), pt(0));
        case PolyFamily::Legendre: return legendre_p(n, pt(0));
        case PolyFamily::LegendrePi: return legendre_pi(n, pt(0), pt(1));
        case PolyFamily::Legendre2: return legendre2(n, pt(0), pt(1));
        case PolyFamily::ChebyshevU: return chebyshev_u2(n, pt(0), pt(1));
        case PolyFamily::ChebyshevULacunary:
            return chebyshev_u_lacunary(n, int(par(0)), pt(0), pt(1));
        case PolyFamily::Lambda: return lambda_poly(n, pt(0), pt(1));
        case PolyFamily::LambdaAssoc:
            return lambda_assoc(n, par(0), pt(0), pt(1));
        case PolyFamily::MLH: return mlh(n, par(0), pt(0), pt(1));
        case PolyFamily::HarmonicPoly: return harmonic_poly(n, pt(0));
        case PolyFamily::HarmonicHermite: return harmonic_hermite(n, pt(0));
        case PolyFamily::TruncExpPoly: return trunc_exp_poly(n, pt(0));
        case PolyFamily::Hybrid: return hybrid_p(n, int(par(0)), pt(0), pt(1));
    }
    throw DomainError("poly_eval: unhandled family");
}

// ---------------------------------------------------------------------------
// Exact rational path
// ---------------------------------------------------------------------------

RatPoly2 hermite2_poly_q(int n) {
    RatPoly2 hm(Rational(1));
    if (n == 0) return hm;
    RatPoly2 h = RatPoly2::monomial(1, 0, 1);
    const RatPoly2 x = RatPoly2::monomial(1, 0, 1);
    const RatPoly2 y = RatPoly2::monomial(0, 1, 1);
    for (int k = 1; k < n; ++k) {
        RatPoly2 hp = x * h + (y * hm).scaled(Rational(2 * k));
        hm = h;
        h = hp;
    }
    return h;
}

RatPoly2 laguerre2_poly_q(int n) {
    RatPoly2 p;
    for (int r = 0; r <= n; ++r) {
        Rational c(big_binomial(n, r));
        c /= Rational(big_factorial(r));
        if (r & 1) c = -c;
        p += RatPoly2::monomial(r, n - r, c);  // x^r y^{n-r}
    }
    return p;
}

Rational hermite2_q(int n, const Rational& x, const Rational& y) {
    return hermite2_poly_q(n).eval(x, y);
}

Rational laguerre2_q(int n, const Rational& x, const Rational& y) {
    return laguerre2_poly_q(n).eval(x, y);
}

namespace {

// Generalized binomial C(a, k) for rational a, integer k >= 0.
Rational rational_binomial(const Rational& a, int k) {
    Rational r(1);
    for (int i = 1; i <= k; ++i) {
        r *= (a - Rational(i - 1));
        r /= Rational(i);
    }
    return r;
}

}  // namespace

std::vector<Rational> jacobi_coeffs_q(int n, const Rational& alpha,
                                      const Rational& beta) {
    // P_n = sum_s C(n+a, s) C(n+b, n-s) ((x-1)/2)^{n-s} ((x+1)/2)^s
    const RatPoly2 u = RatPoly2::monomial(1, 0, Rational(1, 2)) +
                       RatPoly2(Rational(-1, 2));
    const RatPoly2 v = RatPoly2::monomial(1, 0, Rational(1, 2)) +
                       RatPoly2(Rational(1, 2));
    RatPoly2 p;
    for (int s = 0; s <= n; ++s) {
        RatPoly2 t(rational_binomial(Rational(n) + alpha, s) *
                   rational_binomial(Rational(n) + beta, n - s));
        for (int i = 0; i < n - s; ++i) t = t * u;
        for (int i = 0; i < s; ++i) t = t * v;
        p += t;
    }
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (const auto& [k, c] : p.coeffs()) coeffs[k.first] = c;
    return coeffs;
}

std::vector<Rational> legendre_coeffs_q(int n) {
    return jacobi_coeffs_q(n, Rational(0), Rational(0));
}

Rational poly_eval_exact(PolyFamily family, int n,
                         const std::vector<Rational>& params,
                         const std::vector<Rational>& point) {
    auto pt = [&](size_t i) -> const Rational& {
        if (i >= point.size())
            throw DomainError("poly_eval_exact: missing coordinate");
        return point[i];
    };
    auto powq = [](const Rational& x, int k) {
        Rational r(1);
        for (int i = 0; i < k; ++i) r *= x;
        return r;
    };
    switch (family) {
        case PolyFamily::Hermite2:
            return hermite2_q(n, pt(0), pt(1));
        case PolyFamily::Laguerre2:
            return laguerre2_q(n, pt(0), pt(1));
        case PolyFamily::Legendre: {
            const auto c = legendre_coeffs_q(n);
            Rational s(0);
            for (size_t k = 0; k < c.size(); ++k) s += c[k] * powq(pt(0), int(k));
            return s;
        }
        case PolyFamily::JacobiP: {
            if (params.size() < 2)
                throw DomainError("poly_eval_exact: JacobiP needs alpha, beta");
            const auto c = jacobi_coeffs_q(n, params[0], params[1]);
            Rational s(0);
            for (size_t k = 0; k < c.size(); ++k) s += c[k] * powq(pt(0), int(k));
            return s;
        }
        case PolyFamily::LegendrePi: {
            Rational s(0);
            for (int k = 0; 2 * k <= n; ++k) {
                Rational t = Rational(big_factorial(n)) /
                             Rational(big_factorial(k) * big_factorial(k) *
                                      big_factorial(n - 2 * k));
                s += t * powq(pt(0), n - 2 * k) * powq(pt(1), k);
            }
            return s;
        }
        case PolyFamily::ChebyshevU: {
            Rational s(0);
            for (int r = 0; 2 * r <= n; ++r) {
                Rational t = Rational(big_factorial(n - r)) /
                             Rational(big_factorial(n - 2 * r) *
                                      big_factorial(r));
                if (r & 1) t = -t;
                s += t * powq(pt(0), n - 2 * r) * powq(pt(1), r);
            }
            if (n & 1) s = -s;
            return s;
        }
        case PolyFamily::Hybrid: {
            if (params.empty())
                throw DomainError("poly_eval_exact: Hybrid needs q");
            const int q = int(params[0].get_d());
            Rational s(0);
            for (int r = 0; 2 * r <= n; ++r) {
                Rational t = Rational(big_factorial(n)) /
                             Rational(big_factorial(n - 2 * r) *
                                      big_factorial(r) * big_factorial(r + q));
                s += t * powq(pt(0), n - 2 * r) * powq(pt(1), r);
            }
            return s;
        }
        case PolyFamily::TruncExpPoly: {
            Rational s(0);
            for (int r = 0; r <= n; ++r)
                s += powq(pt(0), r) / Rational(big_factorial(r));
            return s;
        }
        case PolyFamily::HarmonicPoly: {
            Rational s = powq(pt(0), n);
            for (int k = 1; k <= n; ++k) {
                Rational hk(0);
                for (int r = 1; r <= k; ++r) hk += Rational(1, unsigned(r));
                s += Rational(big_binomial(n, k)) * powq(pt(0), n - k) * hk;
            }
            return s;
        }
        default:
            throw DomainError(
                "poly_eval_exact: family has transcendental coefficients");
    }
}

std::vector<Rational> mlh_formal_coeffs_q(int n) {
    std::vector<Rational> c;
    for (int r = 0; 2 * r <= n; ++r)
        c.push_back(Rational(big_factorial(n)) /
                    Rational(big_factorial(n - 2 * r)));
    return c;
}

}  // namespace umbra
