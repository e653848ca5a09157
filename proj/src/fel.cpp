#include "umbra/fel.hpp"

#include <cmath>
#include <memory>

#include "umbra/polynomials.hpp"

namespace umbra {

namespace {

constexpr Complex i_unit{0.0, 1.0};

// Composite integral of uniformly sampled values[0..j] with spacing h:
// Simpson where the interval count allows, 3/8 closing rule on odd counts.
Complex composite_integral(const std::vector<Complex>& v, int j, double h) {
    if (j <= 0) return {0.0, 0.0};
    if (j == 1) return 0.5 * h * (v[0] + v[1]);
    Complex sum(0.0);
    int even_end = j;
    if (j % 2 == 1) {  // j >= 3 here
        even_end = j - 3;
        // Newton 3/8 on the last three intervals.
        sum += 0.375 * h * (v[j - 3] + 3.0 * v[j - 2] + 3.0 * v[j - 1] + v[j]);
    }
    if (even_end >= 2) {
        Complex s = v[0] + v[even_end];
        for (int k = 1; k < even_end; ++k)
            s += (k % 2 ? 4.0 : 2.0) * v[k];
        sum += h / 3.0 * s;
    }
    return sum;
}

}  // namespace

FelKernel fel_gaussian_kernel(double nu, double mu_eps) {
    const Complex hx = -i_unit * nu;
    const Complex hy = -0.5 * pi * pi * mu_eps * mu_eps;
    auto cache = std::make_shared<std::vector<Complex>>();
    return [hx, hy, cache](int m) {
        auto& h = *cache;
        while (static_cast<int>(h.size()) <= m) {
            const int k = static_cast<int>(h.size());
            if (k == 0)
                h.push_back(Complex(1.0));
            else if (k == 1)
                h.push_back(hx);
            else
                h.push_back(hx * h[k - 1] + 2.0 * double(k - 1) * hy * h[k - 2]);
        }
        return h[m] / factorial(m);
    };
}

FelKernel fel_rational_kernel(double nu, double a, double b) {
    const Complex x = -i_unit * (a + b);
    const Complex y = Complex(-a * b);
    return [nu, x, y](int m) {
        Complex sum(0.0);
        Complex pw(1.0);
        for (int j = 0; j <= m; ++j) {
            if (j > 0) pw *= -i_unit * nu / double(j);
            sum += pw * chebyshev_u2(m - j, x, y);
        }
        return sum;
    };
}

FelSolution fel_hermite_solve_kernel(double g0, const FelKernel& kernel,
                                     int order, int trunc) {
    if (order < 1 || order > 3)
        throw DomainError("fel_hermite_solve: order in [1, 3]");
    if (trunc < 1 || trunc > 60)
        throw DomainError("fel_hermite_solve: truncation in [1, 60]");
    std::vector<Complex> kc(trunc);
    for (int m = 0; m < trunc; ++m) kc[m] = kernel(m);

    FelSolution sol;
    sol.a = Complex(1.0);
    const Complex ipg = i_unit * pi * g0;
    // a_{n-1} as a polynomial in tau; each monomial c tau^p maps to
    // sum_m ipg c_m B(m+2, p+1)/(m+p+3) c tau^{m+p+3}.
    std::vector<Complex> poly{Complex(1.0)};  // a_0 = 1
    for (int n = 1; n <= order; ++n) {
        const int deg = static_cast<int>(poly.size()) - 1;
        std::vector<Complex> next(deg + trunc + 3, Complex(0.0));
        std::vector<Complex> last_slice(deg + trunc + 3, Complex(0.0));
        for (int p = 0; p <= deg; ++p) {
            if (poly[p] == Complex(0.0)) continue;
            const double lgp = std::lgamma(p + 1.0);
            for (int m = 0; m < trunc; ++m) {
                const double beta =
                    std::exp(std::lgamma(m + 2.0) + lgp - std::lgamma(m + p + 3.0));
                const Complex add =
                    ipg * kc[m] * beta / double(m + p + 3) * poly[p];
                next[m + p + 3] += add;
                if (m == trunc - 1) last_slice[m + p + 3] += add;
            }
        }
        Complex at_one(0.0), last_at_one(0.0);
        for (size_t k = 0; k < next.size(); ++k) {
            at_one += next[k];
            last_at_one += last_slice[k];
        }
        sol.orders.push_back(at_one);
        sol.a += at_one;
        if (std::abs(last_at_one) > 1e-10 * std::abs(at_one))
            sol.truncation_warning = true;
        poly.swap(next);
    }
    return sol;
}

FelSolution fel_hermite_solve(const FelParams& p) {
    return fel_hermite_solve_kernel(p.g0, fel_gaussian_kernel(p.nu, p.mu_eps),
                                    p.order, p.trunc);
}

FelSolution fel_quadrature_solve_kernel(
    double g0, const std::function<Complex(double)>& kernel, int order,
    int grid_n) {
    if (grid_n < 200)
        throw DomainError("fel_quadrature_solve: grid must have >= 200 points");
    if (order < 1 || order > 3)
        throw DomainError("fel_quadrature_solve: order in [1, 3]");
    const int n = grid_n;
    const double h = 1.0 / n;
    std::vector<Complex> tk(n + 1);  // tau' K(tau') on the grid
    for (int j = 0; j <= n; ++j) {
        const double tau = j * h;
        tk[j] = tau * kernel(tau);
    }
    const Complex ipg = i_unit * pi * g0;
    std::vector<Complex> prev(n + 1, Complex(1.0));  // a_0
    FelSolution sol;
    sol.a = Complex(1.0);
    std::vector<Complex> conv(n + 1), deriv(n + 1), cur(n + 1);
    for (int ord = 1; ord <= order; ++ord) {
        for (int j = 0; j <= n; ++j) {
            // integrand over tau' in [0, tau_j]: tau' K(tau') a_{ord-1}(tau_j - tau')
            for (int k = 0; k <= j; ++k) conv[k] = tk[k] * prev[j - k];
            deriv[j] = ipg * composite_integral(conv, j, h);
        }
        for (int j = 0; j <= n; ++j) cur[j] = composite_integral(deriv, j, h);
        sol.orders.push_back(cur[n]);
        sol.a += cur[n];
        prev = cur;
    }
    return sol;
}

FelSolution fel_quadrature_solve(const FelParams& p, int grid_n) {
    const double nu = p.nu, mu = p.mu_eps;
    return fel_quadrature_solve_kernel(
        p.g0,
        [nu, mu](double tau) {
            const double gaussian = std::exp(-0.5 * pi * pi * mu * mu * tau * tau);
            return std::exp(-i_unit * nu * tau) * gaussian;
        },
        p.order, grid_n);
}

Complex fel_ode_solve(double g0, double nu, double tau_end) {
    if (g0 == 0.0) return Complex(1.0);
    // Characteristic cubic r^3 + 2 i nu r^2 - nu^2 r - i pi g0 = 0 through
    // the companion-matrix eigenvalues (Cardano inside eig3).
    const Complex c2 = 2.0 * i_unit * nu;
    const Complex c1 = Complex(-nu * nu);
    const Complex c0 = -i_unit * pi * g0;
    MatC3 comp;
    comp(0, 2) = -c0;
    comp(1, 2) = -c1;
    comp(2, 2) = -c2;
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    const EigenTriple3 e = eig3(comp);
    double scale = 1.0;
    for (const auto& r : e.lambda) scale = std::max(scale, std::abs(r));
    if (e.separation < 1e-10 * scale)
        throw DegenerateRoots("fel_ode_solve: repeated characteristic roots");
    // a(tau) = sum c_j e^{r_j tau}; c_j = prod_{k!=j} (-r_k)/(r_j - r_k)
    // enforces a(0)=1, a'(0)=a''(0)=0 (Lagrange basis at 0).
    Complex a(0.0);
    for (int j = 0; j < 3; ++j) {
        Complex cj(1.0);
        for (int k = 0; k < 3; ++k) {
            if (k == j) continue;
            cj *= -e.lambda[k] / (e.lambda[j] - e.lambda[k]);
        }
        a += cj * std::exp(e.lambda[j] * tau_end);
    }
    return a;
}

}  // namespace umbra
