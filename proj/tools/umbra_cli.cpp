// Command-line front end: evaluate exported functions, emit tables and
// curves as CSV, and run the named verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 numeric failure, 3 check failure.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "umbra/acceptance.hpp"
#include "umbra/fel.hpp"
#include "umbra/fractional.hpp"
#include "umbra/matrixtrig.hpp"
#include "umbra/numbers.hpp"
#include "umbra/polynomials.hpp"
#include "umbra/specfun.hpp"
#include "umbra/umbral.hpp"

namespace {

using namespace umbra;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_num(const std::string& s, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);  // C locale
    if (end == s.c_str() || *end != '\0')
        throw CLI::ValidationError(std::string(what) + ": not a number: " + s);
    return v;
}

struct Range {
    double lo, hi, step;
    std::vector<double> values() const {
        std::vector<double> v;
        // inclusive of lo, excludes overshoot past hi
        for (int k = 0;; ++k) {
            const double x = lo + k * step;
            if (step > 0 ? x > hi + 1e-12 * std::abs(step)
                         : x < hi - 1e-12 * std::abs(step))
                break;
            v.push_back(x);
            if (step == 0.0) break;
        }
        return v;
    }
};

Range parse_range(const std::string& s) {
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("range must be lo:hi:step, got " + s);
    return {parse_num(s.substr(0, c1), "range lo"),
            parse_num(s.substr(c1 + 1, c2 - c1 - 1), "range hi"),
            parse_num(s.substr(c2 + 1), "range step")};
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        v.push_back(parse_num(item, "list entry"));
    return v;
}

SeriesConfig default_series_config() {
    SeriesConfig cfg;
    if (const char* env = std::getenv("UMBRA_MAX_TERMS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) cfg.max_terms = static_cast<int>(v);
    }
    return cfg;
}

struct EvalArgs {
    std::map<std::string, std::string> opts;
    bool has(const std::string& k) const { return opts.count(k) != 0; }
    double num(const std::string& k) const {
        auto it = opts.find(k);
        if (it == opts.end())
            throw CLI::ValidationError("missing required flag --" + k);
        return parse_num(it->second, k.c_str());
    }
    double num_or(const std::string& k, double dflt) const {
        return has(k) ? num(k) : dflt;
    }
    int integer(const std::string& k) const {
        return static_cast<int>(std::llround(num(k)));
    }
};

// Scalar evaluation dispatch shared by `eval` and `table`.
double eval_function(const std::string& fn, const EvalArgs& a) {
    const SeriesConfig sc = default_series_config();
    if (fn == "gamma") return gamma_fn(a.num("x"));
    if (fn == "digamma") return digamma(a.num("x"));
    if (fn == "besselj") return bessel_j(a.num("nu"), a.num("x"), sc);
    if (fn == "besseli") return bessel_i(a.num("nu"), a.num("x"), sc);
    if (fn == "bessely") return bessel_y_int(a.integer("nu"), a.num("x"), sc);
    if (fn == "besselk0") return bessel_k0(a.num("x"), sc);
    if (fn == "tricomi") return tricomi_c(a.num("nu"), a.num("x"), sc);
    if (fn == "besselwright")
        return bessel_wright(a.num("alpha"), a.num("beta"), a.num("x"), sc);
    if (fn == "ml")
        return mittag_leffler(a.num("alpha"), a.num("beta"), a.num("x"), sc);
    if (fn == "sphericalcos")
        return spherical_cos(a.num("x"), a.integer("k"), sc);
    if (fn == "voigtk") return voigt_k(a.num("x"), a.num("y"), a.num("z"), sc);
    if (fn == "voigtl") return voigt_l(a.num("x"), a.num("y"), a.num("z"), sc);
    if (fn == "humbert")
        return humbert_i(a.integer("m1"), a.integer("m2"), a.num("x"), sc);
    if (fn == "lexp") return l_exp(a.num("x"), sc);
    if (fn == "lcos") return l_cos(a.num("x"), sc);
    if (fn == "lsin") return l_sin(a.num("x"), sc);
    if (fn == "phf3") return phf3(a.integer("k"), a.num("x"), sc);
    if (fn == "phf3ch") return phf3_ch(a.num("x"), sc);
    if (fn == "phf3sh") return phf3_sh(a.num("x"), sc);
    if (fn == "hbef") return hbef(a.num("x"), sc);
    if (fn == "truncexp") return trunc_exp_number(a.num("alpha"));
    if (fn == "harmonicreal") return harmonic_real(a.num("x"));
    if (fn == "rlderiv")
        return rl_derivative_power(a.num("alpha"), a.num("nu"), a.num("x"));
    if (fn == "fracpoissonpmf")
        return frac_poisson_pmf({a.num("alpha"), a.num("omega"), a.num("t")},
                                a.integer("m"), sc);
    if (fn == "fracpoissonmean")
        return frac_poisson_mean({a.num("alpha"), a.num("omega"), a.num("t")});
    if (fn == "fracpoissonvar")
        return frac_poisson_var({a.num("alpha"), a.num("omega"), a.num("t")});
    if (fn == "fsepmf")
        return fse_pmf(a.num("alpha"), a.num("X"), a.integer("m"), sc);
    if (fn == "fsemean") return fse_mean(a.num("alpha"), a.num("X"));
    if (fn == "fsevar") return fse_var(a.num("alpha"), a.num("X"));
    if (fn == "mandelq") return mandel_q(a.num("alpha"), a.num("X"));
    if (fn == "poly") {
        PolynomialSpec spec;
        auto it = a.opts.find("family");
        if (it == a.opts.end())
            throw CLI::ValidationError("poly: missing --family");
        spec.family = poly_family_from_name(it->second);
        spec.n = a.num("n");
        if (a.has("params")) spec.params = parse_list(a.opts.at("params"));
        if (a.has("point")) spec.point = parse_list(a.opts.at("point"));
        return poly_eval(spec);
    }
    throw CLI::ValidationError("unknown function: " + fn);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open output file " + path);
    return file;
}

// The fixed flag vocabulary for eval/table; unknown flags are rejected by
// the parser itself.
const std::vector<std::string> kEvalFlags = {
    "x",  "y",  "z",    "nu",    "alpha", "beta",  "omega", "t",
    "X",  "m",  "m1",   "m2",    "k",     "n",     "q",     "family",
    "params", "point"};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"umbra: numerical operational-calculus toolkit"};
    app.require_subcommand(1);

    // --- eval ---------------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a named function");
    std::string eval_fn;
    eval_cmd->add_option("function", eval_fn, "function name")->required();
    std::map<std::string, std::string> eval_opts;
    for (const auto& f : kEvalFlags) {
        eval_cmd->add_option_function<std::string>(
            "--" + f, [&eval_opts, f](const std::string& v) { eval_opts[f] = v; });
    }

    // --- table --------------------------------------------------------------
    auto* table_cmd =
        app.add_subcommand("table", "sweep one ranged flag, emit CSV");
    std::string table_fn, table_out;
    table_cmd->add_option("function", table_fn)->required();
    std::map<std::string, std::string> table_opts;
    for (const auto& f : kEvalFlags) {
        table_cmd->add_option_function<std::string>(
            "--" + f,
            [&table_opts, f](const std::string& v) { table_opts[f] = v; });
    }
    table_cmd->add_option("--out", table_out, "output file (default stdout)");

    // --- check --------------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "run verification suites");
    std::string check_name{"all"};
    check_cmd->add_option("suite", check_name, "suite name or 'all'");

    // --- fel ----------------------------------------------------------------
    auto* fel_cmd = app.add_subcommand("fel", "FEL gain curve (CSV nu,G)");
    std::string fel_nu{"-10:10:0.1"}, fel_out;
    double fel_g0 = 5.0, fel_mu = 0.0;
    int fel_order = 2, fel_trunc = 25, fel_quad = 0;
    fel_cmd->add_option("--g0", fel_g0);
    fel_cmd->add_option("--mu", fel_mu);
    fel_cmd->add_option("--order", fel_order);
    fel_cmd->add_option("--trunc", fel_trunc);
    fel_cmd->add_option("--nu", fel_nu, "detuning range lo:hi:step");
    fel_cmd->add_option("--quadrature", fel_quad,
                        "use the iterated-quadrature route with N grid points");
    fel_cmd->add_option("--out", fel_out);

    // --- fracdiff -----------------------------------------------------------
    auto* fd_cmd = app.add_subcommand(
        "fracdiff", "time-fractional diffusion of a Gaussian (CSV x,re,im)");
    double fd_alpha = 1.0, fd_t = 0.25, fd_xmin = -12.0, fd_xmax = 12.0;
    int fd_n = 512;
    std::string fd_out;
    fd_cmd->add_option("--alpha", fd_alpha);
    fd_cmd->add_option("--t", fd_t);
    fd_cmd->add_option("--xmin", fd_xmin);
    fd_cmd->add_option("--xmax", fd_xmax);
    fd_cmd->add_option("--n", fd_n);
    fd_cmd->add_option("--out", fd_out);

    // --- gtf ----------------------------------------------------------------
    auto* gtf_cmd = app.add_subcommand(
        "gtf", "generalized trigonometric functions of a matrix");
    std::string gtf_m, gtf_t{"0:1:0.1"}, gtf_out;
    gtf_cmd->add_option("--m", gtf_m, "matrix entries, row-major (4 or 9)")
        ->required();
    gtf_cmd->add_option("--t", gtf_t, "argument range lo:hi:step");
    gtf_cmd->add_option("--out", gtf_out);

    // --- numbers ------------------------------------------------------------
    auto* num_cmd = app.add_subcommand("numbers", "exact integer sequences");
    std::string num_seq;
    int num_n = 10, num_q = 2, num_m = 3;
    bool num_oeis = false;
    num_cmd->add_option("sequence", num_seq,
                        "motzkin | telephone | telephone-m | motzkin-assoc | "
                        "motzkin-row | telephone-row | harmonic")
        ->required();
    num_cmd->add_option("--n", num_n, "last index (inclusive)");
    num_cmd->add_option("--q", num_q);
    num_cmd->add_option("--m", num_m);
    num_cmd->add_flag("--oeis", num_oeis, "emit b-file format 'n a(n)'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1, --help exits 0
    }

    try {
        if (*eval_cmd) {
            EvalArgs args{eval_opts};
            std::cout << fmt(eval_function(eval_fn, args)) << "\n";
            return 0;
        }
        if (*table_cmd) {
            std::string range_key;
            for (const auto& [k, v] : table_opts)
                if (v.find(':') != std::string::npos && k != "family") {
                    if (!range_key.empty())
                        throw CLI::ValidationError("table: only one ranged flag");
                    range_key = k;
                }
            if (range_key.empty())
                throw CLI::ValidationError("table: one flag must be lo:hi:step");
            const Range r = parse_range(table_opts.at(range_key));
            std::ofstream file;
            std::ostream& os = open_out(table_out, file);
            os << range_key << "," << table_fn << "\n";
            for (double v : r.values()) {
                auto opts = table_opts;
                opts[range_key] = fmt(v);
                os << fmt(v) << "," << fmt(eval_function(table_fn, EvalArgs{opts}))
                   << "\n";
            }
            return 0;
        }
        if (*check_cmd) {
            if (check_name != "all") {
                bool known = false;
                for (const auto& n : acceptance_names())
                    if (n == check_name) known = true;
                if (!known)
                    throw CLI::ValidationError("unknown suite: " + check_name);
            }
            if (check_name == "all") {
                auto results = run_acceptance(&std::cout);
                for (const auto& r : results)
                    if (!r.pass) return 3;
                return 0;
            }
            const CheckResult r = run_acceptance_check(check_name);
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": "
                      << r.detail << "\n";
            return r.pass ? 0 : 3;
        }
        if (*fel_cmd) {
            const Range r = parse_range(fel_nu);
            std::ofstream file;
            std::ostream& os = open_out(fel_out, file);
            os << "nu,G\n";
            for (double nu : r.values()) {
                FelParams p{fel_g0, nu, fel_mu, fel_order, fel_trunc};
                const FelSolution s = fel_quad > 0
                                          ? fel_quadrature_solve(p, fel_quad)
                                          : fel_hermite_solve(p);
                os << fmt(nu) << "," << fmt(s.gain()) << "\n";
            }
            return 0;
        }
        if (*fd_cmd) {
            GridFunction f;
            f.x0 = fd_xmin;
            f.dx = (fd_xmax - fd_xmin) / fd_n;
            f.samples.resize(fd_n);
            for (int j = 0; j < fd_n; ++j)
                f.samples[j] = std::exp(-f.x(j) * f.x(j));
            const GridFunction out = frac_diffusion_solve(f, fd_alpha, fd_t);
            std::ofstream file;
            std::ostream& os = open_out(fd_out, file);
            os << "x,re,im\n";
            for (int j = 0; j < fd_n; ++j)
                os << fmt(out.x(j)) << "," << fmt(out.samples[j].real()) << ","
                   << fmt(out.samples[j].imag()) << "\n";
            return 0;
        }
        if (*gtf_cmd) {
            const std::vector<double> entries = parse_list(gtf_m);
            const Range r = parse_range(gtf_t);
            std::ofstream file;
            std::ostream& os = open_out(gtf_out, file);
            if (entries.size() == 4) {
                MatC2 m;
                for (int i = 0; i < 4; ++i) m.m[i] = entries[i];
                os << "t,C_re,C_im,S_re,S_im\n";
                for (double t : r.values()) {
                    const Gtf2Result g = gtf2(m, t);
                    os << fmt(t) << "," << fmt(g.C.real()) << ","
                       << fmt(g.C.imag()) << "," << fmt(g.S.real()) << ","
                       << fmt(g.S.imag()) << "\n";
                }
            } else if (entries.size() == 9) {
                MatC3 m;
                for (int i = 0; i < 9; ++i) m.m[i] = entries[i];
                os << "t,C0_re,C0_im,C1_re,C1_im,C2_re,C2_im\n";
                for (double t : r.values()) {
                    const Gtf3Result g = gtf3(m, t);
                    os << fmt(t) << "," << fmt(g.C0.real()) << ","
                       << fmt(g.C0.imag()) << "," << fmt(g.C1.real()) << ","
                       << fmt(g.C1.imag()) << "," << fmt(g.C2.real()) << ","
                       << fmt(g.C2.imag()) << "\n";
                }
            } else {
                throw CLI::ValidationError("gtf: --m needs 4 or 9 entries");
            }
            return 0;
        }
        if (*num_cmd) {
            auto emit = [&](const std::function<std::string(int)>& gen, int last) {
                for (int n = 0; n <= last; ++n) {
                    if (num_oeis) std::cout << n << " ";
                    std::cout << gen(n) << "\n";
                }
            };
            if (num_seq == "motzkin")
                emit([](int n) { return motzkin(n).get_str(); }, num_n);
            else if (num_seq == "telephone")
                emit([](int n) { return telephone(n).get_str(); }, num_n);
            else if (num_seq == "telephone-m")
                emit([&](int n) { return telephone_m(num_m, n).get_str(); },
                     num_n);
            else if (num_seq == "motzkin-assoc")
                emit([&](int n) { return motzkin_assoc(num_q, n).get_str(); },
                     num_n);
            else if (num_seq == "motzkin-row") {
                auto row = motzkin_row(num_n);
                for (size_t s = 0; s < row.size(); ++s) {
                    if (num_oeis) std::cout << s << " ";
                    std::cout << row[s].get_str() << "\n";
                }
            } else if (num_seq == "telephone-row") {
                auto row = telephone_row(num_n);
                for (size_t s = 0; s < row.size(); ++s) {
                    if (num_oeis) std::cout << s << " ";
                    std::cout << row[s].get_str() << "\n";
                }
            } else if (num_seq == "harmonic")
                emit([](int n) { return harmonic(n).get_str(); }, num_n);
            else
                throw CLI::ValidationError("unknown sequence " + num_seq);
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
