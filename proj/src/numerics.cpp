#include "umbra/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace umbra {

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

bool near_nonpositive_integer(double x, double tol = 1e-12) {
    if (x > 0.5) return false;
    return std::abs(x - std::round(x)) <= tol;
}

double factorial_table(int n) {
    static const std::array<double, 171> table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table[static_cast<size_t>(n)];
}

}  // namespace

double factorial(int n) {
    if (n < 0) throw PoleError("factorial: negative argument");
    if (n > 170) throw DomainError("factorial: overflow beyond 170!");
    return factorial_table(n);
}

Complex gamma_fn(Complex z) {
    if (std::abs(z.imag()) < 1e-14 && near_nonpositive_integer(z.real()))
        throw PoleError("gamma: pole at non-positive integer " +
                        std::to_string(z.real()));
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return pi / (std::sin(pi * z) * gamma_fn(1.0 - z));
    }
    z -= 1.0;
    Complex x = lanczos_p[0];
    for (int i = 1; i < 9; ++i) x += lanczos_p[i] / (z + Complex(i, 0));
    Complex t = z + (lanczos_g + 0.5);
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double gamma_fn(double x) {
    if (near_nonpositive_integer(x))
        throw PoleError("gamma: pole at " + std::to_string(x));
    const double r = std::round(x);
    if (x > 0.0 && x <= 171.0 && std::abs(x - r) < 1e-15)
        return factorial_table(static_cast<int>(r) - 1);
    return gamma_fn(Complex(x, 0.0)).real();
}

double log_gamma(double x) {
    if (x <= 0.0) throw DomainError("log_gamma: requires x > 0");
    return std::lgamma(x);
}

double digamma(double x) {
    if (near_nonpositive_integer(x))
        throw PoleError("digamma: pole at " + std::to_string(x));
    if (x < 0.0) {
        // psi(1-x) - psi(x) = pi cot(pi x)
        return digamma(1.0 - x) - pi / std::tan(pi * x);
    }
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic expansion with Bernoulli coefficients.
    const double inv = 1.0 / x, inv2 = inv * inv;
    double s = std::log(x) - 0.5 * inv;
    s -= inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 -
         inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * 691.0 / 32760)))));
    return acc + s;
}

double beta_fn(double x, double y) {
    return gamma_fn(x) * gamma_fn(y) / gamma_fn(x + y);
}

double erf_real(double x) { return std::erf(x); }
double erfc_real(double x) { return std::erfc(x); }

namespace {

// Lentz continued fraction for the upper incomplete gamma, with the
// prefactor x^a e^{-x} removed:  Gamma(a,x) = x^a e^{-x} * cf(a,x).
template <class T>
T upper_gamma_cf(double a, T x) {
    const double tiny = 1e-300;
    T b = x + 1.0 - a;
    T c = 1.0 / tiny;
    T d = 1.0 / b;
    T h = d;
    for (int i = 1; i <= 400; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        T delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return h;
    }
    throw NonConvergence("upper incomplete gamma continued fraction");
}

// Series for the lower incomplete gamma with prefactor removed:
// gamma(a,x) = x^a e^{-x} * sum.
double lower_gamma_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) return sum;
    }
    throw NonConvergence("lower incomplete gamma series");
}

}  // namespace

double incomplete_gamma_lower(double nu, double x) {
    if (nu <= 0.0) throw PoleError("incomplete_gamma_lower: nu must be > 0");
    if (x < 0.0) throw DomainError("incomplete_gamma_lower: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < nu + 1.0)
        return std::pow(x, nu) * std::exp(-x) * lower_gamma_series(nu, x);
    return gamma_fn(nu) - incomplete_gamma_upper(nu, x);
}

double incomplete_gamma_upper(double nu, double x) {
    if (x < 0.0) throw DomainError("incomplete_gamma_upper: x must be >= 0");
    if (x == 0.0) return gamma_fn(nu);
    if (x < nu + 1.0) return gamma_fn(nu) - incomplete_gamma_lower(nu, x);
    return std::pow(x, nu) * std::exp(-x) * upper_gamma_cf(nu, x);
}

double erfcx_real(double x) {
    if (x < 0.0)
        throw DomainError("erfcx_real: negative argument would overflow");
    if (x < 2.5) return std::exp(x * x) * std::erfc(x);
    // erfc(x) = Gamma(1/2, x^2)/sqrt(pi); fold out the exponential.
    return x * upper_gamma_cf(0.5, x * x) / std::sqrt(pi);
}

Complex erfc_fn(Complex z) {
    if (z.real() < 0.0) return 2.0 - erfc_fn(-z);
    if (std::abs(z) < 3.0) {
        // Maclaurin series of erf.
        Complex term = z;
        Complex sum = z;
        const Complex z2 = z * z;
        for (int n = 1; n <= 200; ++n) {
            term *= -z2 / static_cast<double>(n);
            Complex add = term / static_cast<double>(2 * n + 1);
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum)) break;
        }
        return 1.0 - 2.0 / std::sqrt(pi) * sum;
    }
    const Complex z2 = z * z;
    if (std::arg(z2) > 2.5 || std::arg(z2) < -2.5)
        throw DomainError("erfc: argument too close to the imaginary axis");
    return std::pow(z2, 0.5) * std::exp(-z2) * upper_gamma_cf(0.5, z2) /
           std::sqrt(pi);
}

double exp_integral_e1(double x) {
    if (x <= 0.0) throw DomainError("exp_integral_e1: requires x > 0");
    if (x <= 1.0) {
        double sum = 0.0, term = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -x / k;
            sum -= term / k;
            if (std::abs(term / k) < 1e-17 * (std::abs(sum) + 1.0)) break;
        }
        return -euler_gamma - std::log(x) + sum;
    }
    return std::exp(-x) * upper_gamma_cf(0.0, x);  // E1(x) = Gamma(0, x)
}

double pochhammer(double nu, int r) {
    if (r < 0) throw DomainError("pochhammer: negative order");
    double p = 1.0;
    for (int k = 0; k < r; ++k) p *= nu + k;
    return p;
}

// ---------------------------------------------------------------------------
// Series summation
// ---------------------------------------------------------------------------

SeriesResult sum_series(const std::function<Complex(int)>& term,
                        const SeriesConfig& cfg) {
    SeriesResult res;
    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0};  // Kahan compensation
    int streak = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        const Complex t = term(n);
        const Complex y = t - comp;
        const Complex s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        res.terms_used = n + 1;
        res.max_term = std::max(res.max_term, std::abs(t));
        if (std::abs(t) < cfg.rel_tol * std::abs(sum) + cfg.abs_tol) {
            if (++streak >= cfg.small_streak) {
                res.value = sum;
                res.converged = true;
                return res;
            }
        } else {
            streak = 0;
        }
    }
    res.value = sum;
    res.converged = false;
    return res;
}

// ---------------------------------------------------------------------------
// Gauss-Kronrod nodes
// ---------------------------------------------------------------------------

namespace detail {

const std::array<GK15Sample, 8> gk15_nodes = {{
    {0.000000000000000000000000000000000, 0.209482141084727828012999174891714,
     0.417959183673469387755102040816327},
    {0.405845151377397166906606412076961, 0.190350578064785409913256402421014,
     0.381830050505118944950369775488975},
    {0.741531185599394439863864773280788, 0.140653259715525918745189590510238,
     0.279705391489276667901467771423780},
    {0.949107912342758524526189684047851, 0.063092092629978553290700663189204,
     0.129484966168869693270611432679082},
    {0.207784955007898467600689403773245, 0.204432940075298892414161999234649,
     0.0},
    {0.586087235467691130294144838258730, 0.169004726639267902826583426598550,
     0.0},
    {0.864864423359769072789712788640926, 0.104790010322250183839876322541518,
     0.0},
    {0.991455371120812639206854697526329, 0.022935322010529224963732008058970,
     0.0},
}};

}  // namespace detail

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

MatC2 MatC2::identity() {
    MatC2 r;
    r.m = {Complex(1), Complex(0), Complex(0), Complex(1)};
    return r;
}

MatC3 MatC3::identity() {
    MatC3 r;
    for (int i = 0; i < 3; ++i) r(i, i) = 1.0;
    return r;
}

double MatC2::norm() const {
    double s = 0.0;
    for (const auto& v : m) s += std::norm(v);
    return std::sqrt(s);
}

double MatC3::norm() const {
    double s = 0.0;
    for (const auto& v : m) s += std::norm(v);
    return std::sqrt(s);
}

MatC2 operator+(const MatC2& a, const MatC2& b) {
    MatC2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}
MatC2 operator-(const MatC2& a, const MatC2& b) {
    MatC2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}
MatC2 operator*(const MatC2& a, const MatC2& b) {
    MatC2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}
MatC2 operator*(Complex s, const MatC2& a) {
    MatC2 r;
    for (int i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
    return r;
}
MatC3 operator+(const MatC3& a, const MatC3& b) {
    MatC3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}
MatC3 operator-(const MatC3& a, const MatC3& b) {
    MatC3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}
MatC3 operator*(const MatC3& a, const MatC3& b) {
    MatC3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
    return r;
}
MatC3 operator*(Complex s, const MatC3& a) {
    MatC3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
    return r;
}

namespace {

bool lex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

EigenPair2 eig2(const MatC2& M) {
    const Complex tr = M.trace();
    const Complex det = M.det();
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    Complex l1 = 0.5 * (tr + disc);
    Complex l2 = 0.5 * (tr - disc);
    if (lex_less(l2, l1)) std::swap(l1, l2);
    return {{l1, l2}, std::abs(l1 - l2)};
}

EigenTriple3 eig3(const MatC3& M) {
    // Characteristic polynomial lambda^3 - c2 l^2 + c1 l - c0.
    const Complex c2 = M.trace();
    const Complex c1 = (M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0)) +
                       (M(0, 0) * M(2, 2) - M(0, 2) * M(2, 0)) +
                       (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1));
    const Complex c0 = M(0, 0) * (M(1, 1) * M(2, 2) - M(1, 2) * M(2, 1)) -
                       M(0, 1) * (M(1, 0) * M(2, 2) - M(1, 2) * M(2, 0)) +
                       M(0, 2) * (M(1, 0) * M(2, 1) - M(1, 1) * M(2, 0));
    // Depressed cubic t^3 + p t + q via lambda = t + c2/3 (Cardano).
    const Complex shift = c2 / 3.0;
    const Complex p = c1 - c2 * c2 / 3.0;
    const Complex q = -c0 + c1 * shift - 2.0 * shift * shift * shift;
    // q here equals the depressed cubic's constant term.
    const Complex half_q = 0.5 * q;
    Complex inner = std::sqrt(half_q * half_q + p * p * p / 27.0);
    Complex u3 = -half_q + inner;
    if (std::abs(u3) < std::abs(-half_q - inner)) u3 = -half_q - inner;
    std::array<Complex, 3> roots;
    if (std::abs(u3) < 1e-300) {
        roots = {shift, shift, shift};
    } else {
        const Complex u = std::pow(u3, 1.0 / 3.0);
        const Complex w(-0.5, std::sqrt(3.0) / 2.0);
        Complex uk = u;
        for (int k = 0; k < 3; ++k) {
            roots[k] = uk - p / (3.0 * uk) + shift;
            uk *= w;
        }
    }
    // Newton polish in extended precision: the double-precision Horner
    // noise would otherwise dominate the convergence floor.
    {
        using CL = std::complex<long double>;
        const CL C2(c2), C1(c1), C0(c0);
        for (auto& r : roots) {
            CL x(r);
            for (int it = 0; it < 3; ++it) {
                const CL p = ((x - C2) * x + C1) * x - C0;
                const CL d = (CL(3.0L) * x - CL(2.0L) * C2) * x + C1;
                if (std::abs(d) > 1e-300L) x -= p / d;
            }
            r = Complex(static_cast<double>(x.real()),
                        static_cast<double>(x.imag()));
        }
    }
    std::sort(roots.begin(), roots.end(), lex_less);
    const double sep01 = std::abs(roots[0] - roots[1]);
    const double sep02 = std::abs(roots[0] - roots[2]);
    const double sep12 = std::abs(roots[1] - roots[2]);
    return {roots, std::min({sep01, sep02, sep12})};
}

}  // namespace umbra
