/*
   Copyright 2026 The cyclokit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOKIT_INT_POLY_HPP
#define CYCLOKIT_INT_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cyclokit/errors.hpp"

namespace cyclokit {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients,
/// stored in ascending degree order. The zero polynomial has no coefficients.
class IntPoly {
   public:
    IntPoly() = default;

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly{1}; }
    static IntPoly x() { return IntPoly{0, 1}; }

    static IntPoly monomial(std::size_t k, mpz_class coeff = 1) {
        std::vector<mpz_class> c(k + 1, mpz_class(0));
        c[k] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }

    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }

    const mpz_class& leading() const {
        if (c_.empty()) fail("domain", "zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    mpz_class eval(const mpz_class& at) const {
        mpz_class acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a) {
        std::vector<mpz_class> c(a.c_);
        for (auto& v : c) v = -v;
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const mpz_class& s, const IntPoly& a) {
        if (s == 0) return IntPoly();
        std::vector<mpz_class> c(a.c_);
        for (auto& v : c) v *= s;
        return IntPoly(std::move(c));
    }

    bool operator==(const IntPoly&) const = default;

   private:
    std::vector<mpz_class> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Quotient and remainder of a by b; b must be nonzero and monic (the only
/// integer division this library needs).
inline std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail("division-by-zero", "polynomial division by zero");
    if (!b.is_monic())
        fail("unsupported-division", "integer polynomial division requires a monic divisor");
    if (a.degree() < b.degree()) return {IntPoly::zero(), a};
    std::vector<mpz_class> rem(a.coeffs());
    std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<mpz_class> quot(rem.size() - db, mpz_class(0));
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i];
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

inline IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return IntPoly::zero();
    std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()));
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        c[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(c));
}

inline mpz_class content(const IntPoly& f) {
    mpz_class g(0);
    for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // nonnegative; 0 only for the zero polynomial
}

/// Content-free part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return f;
    mpz_class g = content(f);
    if (f.leading() < 0) g = -g;
    std::vector<mpz_class> c(f.coeffs());
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail("division-by-zero", "pseudo-remainder by zero");
    IntPoly r = a;
    const mpz_class& lb = b.leading();
    long db = b.degree();
    long steps = a.degree() - db + 1;
    while (r.degree() >= db && steps-- > 0) {
        IntPoly shift = IntPoly::monomial(static_cast<std::size_t>(r.degree() - db), r.leading());
        r = lb * r - shift * b;
    }
    return r;
}

/// True iff d divides f over Q (equivalently over Z up to content).
inline bool poly_divides(const IntPoly& d, const IntPoly& f) {
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (d.degree() == 0) return true;
    return pseudo_rem(f, d).is_zero();
}

/// GCD via primitive pseudo-remainder sequence; result is primitive with
/// positive leading coefficient (monic whenever the true gcd is monic,
/// which covers every divisor this artifact meets).
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) fail("undefined-gcd", "gcd(0, 0) is undefined");
    IntPoly u = primitive_part(a);
    IntPoly v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

/// f(x^n); for n = 0 this is the constant f(1) (documented, not an error).
inline IntPoly substitute_power(const IntPoly& f, std::uint64_t n) {
    if (f.is_zero()) return f;
    if (n == 0) return IntPoly(std::vector<mpz_class>{f.eval(1)});
    std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()) * n + 1, mpz_class(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i * n] = f.coeffs()[i];
    return IntPoly(std::move(c));
}

/// Squarefree part f / gcd(f, f'), primitive with positive leading
/// coefficient (monic for monic f by Gauss's lemma).
inline IntPoly radical(const IntPoly& f) {
    if (f.is_zero()) fail("undefined-radical", "radical of the zero polynomial is undefined");
    IntPoly g = primitive_part(f);
    if (g.degree() == 0) return IntPoly::one();
    IntPoly d = poly_gcd(g, derivative(g));
    if (d.degree() == 0) return g;
    // d is primitive and divides g over Q: scale g by lc(d)^(deg g - deg d + 1),
    // run fraction-free long division, then strip the content.
    const mpz_class& ld = d.leading();
    long dd = d.degree();
    long steps = g.degree() - dd + 1;
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ld.get_mpz_t(), static_cast<unsigned long>(steps));
    IntPoly num = scale * g;
    std::vector<mpz_class> rem(num.coeffs());
    std::vector<mpz_class> q(rem.size() - static_cast<std::size_t>(dd), mpz_class(0));
    for (std::size_t i = rem.size(); i-- > static_cast<std::size_t>(dd);) {
        if (rem[i] == 0) continue;
        mpz_class c = rem[i] / ld;
        if (c * ld != rem[i]) fail("undefined-radical", "internal: inexact squarefree division");
        q[i - static_cast<std::size_t>(dd)] = c;
        for (long j = 0; j <= dd; ++j)
            rem[i - static_cast<std::size_t>(dd) + static_cast<std::size_t>(j)] -=
                c * d.coeffs()[static_cast<std::size_t>(j)];
    }
    for (const auto& v : rem)
        if (v != 0) fail("undefined-radical", "internal: squarefree division left a remainder");
    return primitive_part(IntPoly(std::move(q)));
}

}  // namespace cyclokit

#endif
