#include "umbra/specfun.hpp"

#include <cmath>

#include "umbra/detail/dd.hpp"

namespace umbra {

namespace {

using detail::DD;
using detail::dd_abs;
using detail::dd_add;
using detail::dd_div;
using detail::dd_mul;
using detail::two_prod;
using detail::two_sum;

struct Guarded {
    double value = 0.0;
    double err_estimate = 0.0;
    double max_term = 0.0;
    int terms = 0;
};

// Alternating series summed in double-double; ratio(r) maps term r to
// term r+1.  The estimate covers truncation plus double-double rounding.
template <class RatioFn>
Guarded dd_series(DD first, const RatioFn& ratio, const SeriesConfig& cfg) {
    DD term = first;
    DD sum = first;
    Guarded g;
    g.max_term = dd_abs(first);
    int streak = 0;
    for (int r = 0; r < cfg.max_terms; ++r) {
        term = ratio(term, r);
        sum = dd_add(sum, term);
        g.terms = r + 2;
        const double at = dd_abs(term);
        g.max_term = std::max(g.max_term, at);
        if (at < cfg.rel_tol * dd_abs(sum) + cfg.abs_tol) {
            if (++streak >= cfg.small_streak) {
                g.value = static_cast<double>(sum);
                g.err_estimate = at + g.max_term * 1e-31 * g.terms;
                return g;
            }
        } else {
            streak = 0;
        }
    }
    throw NonConvergence("series did not converge within max_terms");
}

// Series whose terms are computed independently (irrational term ratios).
// Accumulated through sum_series; the cancellation guard converts the
// largest-term diagnostic into an error estimate.
Guarded guarded_sum(const std::function<double(int)>& term,
                    const SeriesConfig& cfg) {
    SeriesResult r = sum_series([&](int n) { return Complex(term(n)); }, cfg);
    if (!r.converged)
        throw NonConvergence("series did not converge within max_terms");
    Guarded g;
    g.value = r.value.real();
    g.terms = r.terms_used;
    g.max_term = r.max_term;
    g.err_estimate =
        r.max_term * 2.2e-16 * std::max(8.0, std::sqrt(double(r.terms_used)));
    return g;
}

void check_guard(const Guarded& g, const SeriesConfig& cfg, const char* what) {
    const double floor = std::max(cfg.rel_tol, 1e-11);
    if (g.err_estimate > floor * std::abs(g.value) + cfg.abs_tol &&
        g.err_estimate > cfg.abs_tol)
        throw NonConvergence(std::string(what) +
                             ": cancellation exceeds requested accuracy");
}

bool is_integer(double x, double tol = 1e-12) {
    return std::abs(x - std::round(x)) <= tol;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bessel family
// ---------------------------------------------------------------------------

double bessel_j(double nu, double x, const SeriesConfig& cfg) {
    if (std::abs(x) > bessel_series_xmax)
        throw NonConvergence("bessel_j: |x| outside series policy (<=40)");
    if (nu < 0.0 && is_integer(nu)) {
        const int n = static_cast<int>(std::round(-nu));
        return (n % 2 ? -1.0 : 1.0) * bessel_j(static_cast<double>(n), x, cfg);
    }
    if (x < 0.0) {
        if (!is_integer(nu))
            throw DomainError("bessel_j: x < 0 with non-integer order");
        const int n = static_cast<int>(std::round(nu));
        return (n % 2 ? -1.0 : 1.0) * bessel_j(nu, -x, cfg);
    }
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw DomainError("bessel_j: x = 0 with negative order");
    }
    const double half = 0.5 * x;
    const DD u = two_prod(half, half);
    auto ratio = [&](DD t, int r) {
        t = dd_mul(t, DD{-u.hi, -u.lo});
        return dd_div(t, dd_mul(DD{double(r + 1)}, two_sum(nu, double(r + 1))));
    };
    const Guarded g = dd_series(DD{1.0}, ratio, cfg);
    return std::pow(half, nu) / gamma_fn(nu + 1.0) * g.value;
}

double bessel_j_deriv(double nu, double x, int k, const SeriesConfig& cfg) {
    if (k < 1 || k > 2) throw DomainError("bessel_j_deriv: k in {1,2}");
    if (x <= 0.0) throw DomainError("bessel_j_deriv: requires x > 0");
    if (std::abs(x) > bessel_series_xmax)
        throw NonConvergence("bessel_j_deriv: |x| outside series policy");
    // d^k/dx^k sum_r (-1)^r (x/2)^{2r+nu} / (r! Gamma(nu+r+1)), termwise.
    const double half = 0.5 * x;
    const DD u = two_prod(half, half);
    // base_r = (-u)^r / (r! (nu+1)_r); poly_r = prod_{j<k} (2r+nu-j).
    DD base{1.0};
    DD sum{0.0};
    double max_term = 0.0;
    int streak = 0;
    for (int r = 0; r < cfg.max_terms; ++r) {
        if (r > 0) {
            base = dd_mul(base, DD{-u.hi, -u.lo});
            base = dd_div(base, dd_mul(DD{double(r)}, two_sum(nu, double(r))));
        }
        DD poly = two_sum(2.0 * r, nu);
        if (k == 2) poly = dd_mul(poly, two_sum(2.0 * r, nu - 1.0));
        const DD term = dd_mul(base, poly);
        sum = dd_add(sum, term);
        const double at = dd_abs(term);
        max_term = std::max(max_term, at);
        if (at < cfg.rel_tol * (dd_abs(sum) + 1e-300) + cfg.abs_tol) {
            if (++streak >= cfg.small_streak) {
                const double pref =
                    std::pow(half, nu - k) / gamma_fn(nu + 1.0) / std::pow(2.0, k);
                return pref * static_cast<double>(sum);
            }
        } else {
            streak = 0;
        }
    }
    throw NonConvergence("bessel_j_deriv: series did not converge");
}

double bessel_i(double nu, double x, const SeriesConfig& cfg) {
    if (std::abs(x) > bessel_series_xmax)
        throw NonConvergence("bessel_i: |x| outside series policy (<=40)");
    if (x < 0.0) {
        if (!is_integer(nu))
            throw DomainError("bessel_i: x < 0 with non-integer order");
        const int n = static_cast<int>(std::round(nu));
        return (n % 2 ? -1.0 : 1.0) * bessel_i(nu, -x, cfg);
    }
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double half = 0.5 * x;
    const DD u = two_prod(half, half);
    auto ratio = [&](DD t, int r) {
        t = dd_mul(t, u);
        return dd_div(t, dd_mul(DD{double(r + 1)}, two_sum(nu, double(r + 1))));
    };
    const Guarded g = dd_series(DD{1.0}, ratio, cfg);
    return std::pow(half, nu) / gamma_fn(nu + 1.0) * g.value;
}

Complex bessel_i_c(double nu, Complex x, const SeriesConfig& cfg) {
    if (std::abs(x) > bessel_series_xmax)
        throw NonConvergence("bessel_i_c: |x| outside series policy (<=40)");
    const Complex u = 0.25 * x * x;
    Complex term(1.0);
    SeriesResult r = sum_series(
        [&](int n) {
            if (n > 0) term *= u / (double(n) * (nu + double(n)));
            return term;
        },
        cfg);
    if (!r.converged) throw NonConvergence("bessel_i_c: series did not converge");
    return std::pow(0.5 * x, nu) / gamma_fn(Complex(nu + 1.0)) * r.value;
}

double tricomi_c(double nu, double x, const SeriesConfig& cfg) {
    if (std::abs(x) > tricomi_series_xmax)
        throw NonConvergence("tricomi_c: |x| outside series policy (<=400)");
    if (nu < 0.0 && is_integer(nu)) {
        // First -nu terms vanish: C_{-n}(x) = (-x)^n C_n(x).
        const int n = static_cast<int>(std::round(-nu));
        return std::pow(-x, n) * tricomi_c(static_cast<double>(n), x, cfg);
    }
    auto ratio = [&](DD t, int r) {
        t = dd_mul(t, -x);
        return dd_div(t, dd_mul(DD{double(r + 1)}, two_sum(nu, double(r + 1))));
    };
    const Guarded g = dd_series(DD{1.0}, ratio, cfg);
    return g.value / gamma_fn(nu + 1.0);
}

double bessel_wright(double alpha, double beta, double x,
                     const SeriesConfig& cfg) {
    if (alpha < 0.0 || beta < 0.0)
        throw DomainError("bessel_wright: requires alpha, beta >= 0");
    if (std::abs(x) > bessel_series_xmax)
        throw NonConvergence("bessel_wright: |x| outside series policy");
    const double lx = std::log(std::abs(x) + (x == 0.0));
    const bool neg = x < 0.0;
    Guarded g = guarded_sum(
        [&](int r) {
            if (x == 0.0 && r > 0) return 0.0;
            const double lt =
                r * lx - std::lgamma(r + 1.0) - std::lgamma(alpha * r + beta + 1.0);
            double t = std::exp(lt);
            if (neg && (r & 1)) t = -t;
            return t;
        },
        cfg);
    check_guard(g, cfg, "bessel_wright");
    return g.value;
}

double mittag_leffler(double alpha, double beta, double x,
                      const SeriesConfig& cfg) {
    if (alpha <= 0.0 || beta <= 0.0)
        throw DomainError("mittag_leffler: requires alpha, beta > 0");
    // Exact reductions of the series definition, valid for any argument.
    if (alpha == 1.0 && beta == 1.0) return std::exp(x);
    if (alpha == 1.0 && beta == 2.0) return x == 0.0 ? 1.0 : std::expm1(x) / x;
    if (alpha == 2.0 && beta == 1.0)
        return x >= 0.0 ? std::cosh(std::sqrt(x)) : std::cos(std::sqrt(-x));
    if (alpha == 0.5 && beta == 1.0) {
        if (x <= 0.0) return erfcx_real(-x);
        if (x > 26.0)
            throw NonConvergence("mittag_leffler: value overflows for a=1/2");
        return std::exp(x * x) * (2.0 - std::erfc(x));
    }
    // The series window scales with the cancellation budget: the largest
    // term is ~exp(|x|^(1/alpha)).
    if (std::abs(x) > std::pow(ml_series_xmax, std::max(1.0, alpha)))
        throw NonConvergence("mittag_leffler: |x| outside series policy");
    const double lx = std::log(std::abs(x) + (x == 0.0));
    const bool neg = x < 0.0;
    Guarded g = guarded_sum(
        [&](int r) {
            if (x == 0.0 && r > 0) return 0.0;
            const double lt = r * lx - std::lgamma(alpha * r + beta);
            double t = std::exp(lt);
            if (neg && (r & 1)) t = -t;
            return t;
        },
        cfg);
    check_guard(g, cfg, "mittag_leffler");
    return g.value;
}

// ---------------------------------------------------------------------------
// Neumann-Bessel and Macdonald
// ---------------------------------------------------------------------------

namespace {

// sum_k (-1)^k psi_k u^k base_k with base_k = 1/(k! (k+n)!) ratios exact in
// double-double and psi advanced by exact reciprocal increments.  psi_seed
// enters as an overall shift of an already-small alternating sum, so its
// double rounding is harmless.
double renormalized_series(int n, double x, double psi_seed, bool shift_by_n,
                           const SeriesConfig& cfg) {
    const double half = 0.5 * x;
    const DD u = two_prod(half, half);
    DD base = DD{1.0};
    DD psi = DD{psi_seed};
    DD sum{0.0};
    int streak = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        if (k > 0) {
            base = dd_mul(base, u);
            base = dd_div(base, dd_mul(DD{double(k)}, DD{double(k + n)}));
            // psi(k+1) or psi(k+n+1) advanced from the previous index.
            const int denom = shift_by_n ? (k + n) : k;
            psi = dd_add(psi, dd_div(DD{1.0}, DD{double(denom)}));
        }
        DD term = dd_mul(base, psi);
        if (k & 1) term = DD{-term.hi, -term.lo};
        sum = dd_add(sum, term);
        const double at = dd_abs(term);
        if (at < cfg.rel_tol * (dd_abs(sum) + 1e-300) + cfg.abs_tol) {
            if (++streak >= cfg.small_streak) break;
        } else {
            streak = 0;
        }
        if (k + 1 == cfg.max_terms)
            throw NonConvergence("renormalized Bessel series did not converge");
    }
    const double pref = std::pow(half, n) / factorial(n);
    return pref * static_cast<double>(sum);
}

}  // namespace

double bessel_y_delta_big(int n, double x, const SeriesConfig& cfg) {
    return renormalized_series(n, x, digamma(n + 1.0), true, cfg);
}

double bessel_y_delta_small(int n, double x, const SeriesConfig& cfg) {
    return renormalized_series(n, x, digamma(1.0), false, cfg);
}

double bessel_y_int(int n, double x, const SeriesConfig& cfg) {
    if (x <= 0.0) throw DomainError("bessel_y_int: requires x > 0");
    if (n < 0 || n > 20) throw DomainError("bessel_y_int: order in [0, 20]");
    if (x > bessel_series_xmax)
        throw NonConvergence("bessel_y_int: |x| outside series policy");
    const double half = 0.5 * x;
    const double log_term = 2.0 / pi * std::log(half) * bessel_j(n, x, cfg);
    double finite = 0.0;
    for (int k = 0; k < n; ++k)
        finite += factorial(n - k - 1) / factorial(k) * std::pow(half, 2 * k - n);
    const double delta =
        bessel_y_delta_big(n, x, cfg) + bessel_y_delta_small(n, x, cfg);
    return log_term - finite / pi - delta / pi;
}

double bessel_k0(double x, const SeriesConfig& cfg) {
    if (x <= 0.0) throw DomainError("bessel_k0: requires x > 0");
    if (x > 30.0) throw NonConvergence("bessel_k0: x outside series policy (<=30)");
    const double half = 0.5 * x;
    const DD u = two_prod(half, half);
    // The log term and the harmonic series cancel to e^{-2x} of their own
    // size, so they are fused termwise:
    //   K0 = sum_r u^r/(r!)^2 (h_r - ln(x/2) - gamma)
    // with every ingredient carried in double-double.
    const DD a = dd_add(detail::dd_log(half), detail::dd_euler_gamma);
    DD base{1.0};
    DD h{0.0};
    DD sum = dd_mul(dd_sub(h, a), base);  // r = 0 term: -(ln(x/2)+gamma)
    double max_term = dd_abs(sum);
    for (int r = 1; r < cfg.max_terms; ++r) {
        base = dd_mul(base, u);
        base = dd_div(base, DD{double(r) * double(r)});
        h = dd_add(h, dd_div(DD{1.0}, DD{double(r)}));
        const DD term = dd_mul(base, dd_sub(h, a));
        sum = dd_add(sum, term);
        const double at = dd_abs(term);
        max_term = std::max(max_term, at);
        if (at < cfg.rel_tol * dd_abs(sum) + cfg.abs_tol &&
            dd_abs(base) < cfg.rel_tol * dd_abs(sum) + cfg.abs_tol)
            break;
        if (r + 1 == cfg.max_terms)
            throw NonConvergence("bessel_k0: series did not converge");
    }
    const double value = static_cast<double>(sum);
    if (max_term * 2e-31 > 1e-6 * std::abs(value) + cfg.abs_tol)
        throw NonConvergence("bessel_k0: cancellation beyond policy");
    return value;
}

// ---------------------------------------------------------------------------
// Spherical cosine family and generalized Tricomi
// ---------------------------------------------------------------------------

double spherical_cos(double x, int n, const SeriesConfig& cfg) {
    if (n < 0) throw DomainError("spherical_cos: requires n >= 0");
    if (std::abs(x) > bessel_series_xmax)
        throw NonConvergence("spherical_cos: |x| outside series policy");
    const DD u = two_prod(x, x);
    auto ratio = [&](DD t, int r) {
        // t_{r+1}/t_r = -x^2 (n+r+1) / ((r+1)(2n+2r+1)(2n+2r+2))
        t = dd_mul(t, DD{-u.hi, -u.lo});
        t = dd_mul(t, double(n + r + 1));
        t = dd_div(t, DD{double(r + 1)});
        t = dd_div(t, DD{double(2 * n + 2 * r + 1)});
        return dd_div(t, DD{double(2 * n + 2 * r + 2)});
    };
    const Guarded g = dd_series(DD{1.0}, ratio, cfg);
    return factorial(n) / factorial(2 * n) * g.value;
}

double tricomi_gen(double mu, double alpha, double nu, double x,
                   const SeriesConfig& cfg) {
    if (nu >= 2.0) throw DomainError("tricomi_gen: series diverges for nu >= 2");
    if (std::abs(x) > bessel_series_xmax)
        throw NonConvergence("tricomi_gen: |x| outside series policy");
    const double lx = std::log(std::abs(x) + (x == 0.0));
    const bool neg = x > 0.0;  // (-x)^r alternates when x > 0
    Guarded g = guarded_sum(
        [&](int r) {
            if (x == 0.0 && r > 0) return 0.0;
            const double lt = std::lgamma(nu * r + alpha + 1.0) + r * lx -
                              std::lgamma(r + 1.0) - std::lgamma(r + mu + 1.0);
            double t = std::exp(lt);
            if (neg && (r & 1)) t = -t;
            return t;
        },
        cfg);
    check_guard(g, cfg, "tricomi_gen");
    return g.value;
}

// ---------------------------------------------------------------------------
// Voigt functions
// ---------------------------------------------------------------------------

Complex voigt_e(double x, double y, double z, const SeriesConfig&) {
    if (y <= 0.0) throw DomainError("voigt: requires y > 0");
    const Complex w = Complex(x, -z) / (2.0 * std::sqrt(y));
    return std::exp(w * w) * erfc_fn(w) / (2.0 * std::sqrt(y));
}

double voigt_k(double x, double y, double z, const SeriesConfig& cfg) {
    return voigt_e(x, y, z, cfg).real();
}

double voigt_l(double x, double y, double z, const SeriesConfig& cfg) {
    return voigt_e(x, y, z, cfg).imag();
}

// ---------------------------------------------------------------------------
// Bessel products
// ---------------------------------------------------------------------------

namespace {

double lr_poly_integer(const LrPolyParams& p, int r, size_t var, double acc_fact,
                       double acc_prod) {
    // Recursive enumeration of compositions k_1 + ... + k_n = r.
    const size_t n = p.arguments.size();
    if (var + 1 == n) {
        const int k = r;
        return acc_prod * std::pow(p.arguments[var], k) /
               (factorial(k) * gamma_fn(p.orders[var] + k + 1.0)) * acc_fact;
    }
    double sum = 0.0;
    for (int k = 0; k <= r; ++k) {
        const double piece = std::pow(p.arguments[var], k) /
                             (factorial(k) * gamma_fn(p.orders[var] + k + 1.0));
        sum += lr_poly_integer(p, r - k, var + 1, acc_fact, acc_prod * piece);
    }
    return sum;
}

}  // namespace

double lr_poly(const LrPolyParams& p, double r) {
    if (p.orders.size() != p.arguments.size() || p.arguments.empty())
        throw DomainError("lr_poly: orders/arguments must have equal length >= 1");
    if (is_integer(r) && r >= 0.0) {
        const int ri = static_cast<int>(std::round(r));
        return lr_poly_integer(p, ri, 0, factorial(ri), 1.0);
    }
    if (std::abs(r + 0.5) < 1e-12) {
        if (p.arguments.size() != 2)
            throw DomainError("lr_poly: r = -1/2 needs exactly two arguments");
        for (double nu : p.orders)
            if (nu != 0.0)
                throw DomainError("lr_poly: r = -1/2 implemented for zero orders");
        const double x1 = p.arguments[0], x2 = p.arguments[1];
        if (!(std::abs(x2) < std::abs(x1)))
            throw DomainError("lr_poly: r = -1/2 requires |x2| < |x1|");
        // Gamma(1/2) sum_s x1^{-1/2-s} x2^s Gamma(s+1/2)^2 / ((s!)^2 pi^2)
        const double q = x2 / x1;
        double term = 1.0 / pi;  // s = 0: Gamma(1/2)^2/pi^2 = 1/pi
        double sum = term;
        for (int s = 0; s < 400; ++s) {
            term *= q * (s + 0.5) * (s + 0.5) / ((s + 1.0) * (s + 1.0));
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return std::sqrt(pi) / std::sqrt(std::abs(x1)) * sum;
    }
    throw DomainError("lr_poly: order r must be a non-negative integer or -1/2");
}

double hyp2f1_half(double k2, const SeriesConfig& cfg) {
    if (!(k2 < 1.0)) throw DomainError("hyp2f1_half: requires k2 < 1");
    double term = 1.0;
    SeriesResult r = sum_series(
        [&](int s) {
            if (s > 0) {
                const double c = (2.0 * s - 1.0) / (2.0 * s);
                term *= c * c * k2;
            }
            return Complex(term);
        },
        cfg);
    if (!r.converged) throw NonConvergence("hyp2f1_half: series did not converge");
    return r.value.real();
}

double bessel_product_integral(double a, double b, const SeriesConfig& cfg) {
    if (!(std::abs(a) > std::abs(b)))
        throw DomainError("bessel_product_integral: requires |a| > |b|");
    const double q = b / a;
    return 2.0 / std::abs(a) * hyp2f1_half(q * q, cfg);
}

double humbert_i(int m1, int m2, double x, const SeriesConfig& cfg) {
    if (m1 < 0 || m2 < 0) throw DomainError("humbert_i: orders must be >= 0");
    if (std::abs(x) > bessel_series_xmax)
        throw NonConvergence("humbert_i: |x| outside series policy");
    auto ratio = [&](DD t, int s) {
        t = dd_mul(t, x);
        t = dd_div(t, DD{double(s + 1)});
        t = dd_div(t, DD{double(m1 + s + 1)});
        return dd_div(t, DD{double(m2 + s + 1)});
    };
    const Guarded g = dd_series(DD{1.0}, ratio, cfg);
    return g.value / (factorial(m1) * factorial(m2));
}

}  // namespace umbra
