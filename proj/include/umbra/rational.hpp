#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>

#include "umbra/numerics.hpp"

// Exact arithmetic carriers.  mpq_class is kept canonical (reduced,
// positive denominator) by GMP itself.

namespace umbra {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt big_binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Dense bivariate polynomial with exact rational coefficients; just enough
// structure for the identity batteries (sums, products by monomials,
// partial derivatives, evaluation).
class RatPoly2 {
  public:
    RatPoly2() = default;
    explicit RatPoly2(const Rational& c) {
        if (c != 0) coeff_[{0, 0}] = c;
    }
    static RatPoly2 monomial(int i, int j, const Rational& c) {
        RatPoly2 p;
        if (c != 0) p.coeff_[{i, j}] = c;
        return p;
    }

    const std::map<std::pair<int, int>, Rational>& coeffs() const {
        return coeff_;
    }

    RatPoly2& operator+=(const RatPoly2& o) {
        for (const auto& [k, v] : o.coeff_) {
            Rational& c = coeff_[k];
            c += v;
            if (c == 0) coeff_.erase(k);
        }
        return *this;
    }
    friend RatPoly2 operator+(RatPoly2 a, const RatPoly2& b) { return a += b; }

    RatPoly2 operator-() const {
        RatPoly2 r = *this;
        for (auto& [k, v] : r.coeff_) v = -v;
        return r;
    }
    friend RatPoly2 operator-(const RatPoly2& a, const RatPoly2& b) {
        return a + (-b);
    }

    RatPoly2 scaled(const Rational& s) const {
        RatPoly2 r;
        if (s == 0) return r;
        for (const auto& [k, v] : coeff_) r.coeff_[k] = v * s;
        return r;
    }

    friend RatPoly2 operator*(const RatPoly2& a, const RatPoly2& b) {
        RatPoly2 r;
        for (const auto& [ka, va] : a.coeff_)
            for (const auto& [kb, vb] : b.coeff_) {
                Rational& c =
                    r.coeff_[{ka.first + kb.first, ka.second + kb.second}];
                c += va * vb;
            }
        for (auto it = r.coeff_.begin(); it != r.coeff_.end();)
            it = (it->second == 0) ? r.coeff_.erase(it) : std::next(it);
        return r;
    }

    RatPoly2 dx() const {
        RatPoly2 r;
        for (const auto& [k, v] : coeff_)
            if (k.first > 0) r.coeff_[{k.first - 1, k.second}] = v * k.first;
        return r;
    }
    RatPoly2 dy() const {
        RatPoly2 r;
        for (const auto& [k, v] : coeff_)
            if (k.second > 0) r.coeff_[{k.first, k.second - 1}] = v * k.second;
        return r;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational s = 0;
        for (const auto& [k, v] : coeff_) {
            Rational t = v;
            for (int i = 0; i < k.first; ++i) t *= x;
            for (int j = 0; j < k.second; ++j) t *= y;
            s += t;
        }
        return s;
    }

    bool is_zero() const { return coeff_.empty(); }
    bool operator==(const RatPoly2& o) const { return coeff_ == o.coeff_; }

  private:
    std::map<std::pair<int, int>, Rational> coeff_;
};

}  // namespace umbra
