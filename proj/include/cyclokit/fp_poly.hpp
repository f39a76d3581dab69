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

#ifndef CYCLOKIT_FP_POLY_HPP
#define CYCLOKIT_FP_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "cyclokit/errors.hpp"
#include "cyclokit/numbers.hpp"

namespace cyclokit {

/// Dense univariate polynomial over F_p, coefficients reduced into [0, p),
/// ascending degree order. p is validated prime at construction.
class FpPoly {
   public:
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        check_modulus(p);
        for (auto& v : c_) v %= p_;
        trim();
    }

    FpPoly(std::uint64_t p, std::initializer_list<std::uint64_t> coeffs)
        : FpPoly(p, std::vector<std::uint64_t>(coeffs)) {}

    static FpPoly zero(std::uint64_t p) { return FpPoly(p, std::vector<std::uint64_t>{}); }
    static FpPoly one(std::uint64_t p) { return FpPoly(p, {1}); }
    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

    static FpPoly monomial(std::uint64_t p, std::size_t k, std::uint64_t coeff = 1) {
        std::vector<std::uint64_t> c(k + 1, 0);
        c[k] = coeff;
        return FpPoly(p, std::move(c));
    }

    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    std::uint64_t leading() const {
        if (c_.empty()) fail("domain", "zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    std::uint64_t eval(std::uint64_t at) const {
        std::uint64_t acc = 0;
        at %= p_;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul_mod(acc, at, p_) + *it) % p_;
        return acc;
    }

    FpPoly make_monic() const {
        if (is_zero() || is_monic()) return *this;
        std::uint64_t inv = pow_mod(leading(), p_ - 2, p_);
        std::vector<std::uint64_t> c(c_);
        for (auto& v : c) v = mul_mod(v, inv, p_);
        return FpPoly(p_, std::move(c));
    }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        a.check_same(b);
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
        return FpPoly(a.p_, std::move(c));
    }

    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        a.check_same(b);
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
        return FpPoly(a.p_, std::move(c));
    }

    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p_);
        std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = (c[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
        return FpPoly(a.p_, std::move(c));
    }

    friend FpPoly operator*(std::uint64_t s, const FpPoly& a) {
        std::vector<std::uint64_t> c(a.c_);
        s %= a.p_;
        for (auto& v : c) v = mul_mod(v, s, a.p_);
        return FpPoly(a.p_, std::move(c));
    }

    bool operator==(const FpPoly&) const = default;

    /// Canonical order: degree, then coefficient tuple (ascending index).
    bool operator<(const FpPoly& other) const {
        if (degree() != other.degree()) return degree() < other.degree();
        return c_ < other.c_;
    }

   private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    static void check_modulus(std::uint64_t p) {
        if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
    }

    void check_same(const FpPoly& other) const {
        if (p_ != other.p_)
            fail("modulus-mismatch", "operands over F_" + std::to_string(p_) + " and F_" +
                                         std::to_string(other.p_));
    }
};

inline std::pair<FpPoly, FpPoly> poly_divmod(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus())
        fail("modulus-mismatch", "division operands over different prime fields");
    if (b.is_zero()) fail("division-by-zero", "polynomial division by zero");
    std::uint64_t p = a.modulus();
    if (a.degree() < b.degree()) return {FpPoly::zero(p), a};
    std::uint64_t inv = pow_mod(b.leading(), p - 2, p);
    std::vector<std::uint64_t> rem(a.coeffs());
    std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<std::uint64_t> quot(rem.size() - db, 0);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        std::uint64_t c = mul_mod(rem[i], inv, p);
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = (rem[i - db + j] + p - mul_mod(c, b.coeffs()[j], p)) % p;
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

inline FpPoly poly_mod(const FpPoly& a, const FpPoly& b) { return poly_divmod(a, b).second; }

inline FpPoly poly_gcd(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus())
        fail("modulus-mismatch", "gcd operands over different prime fields");
    if (a.is_zero() && b.is_zero()) fail("undefined-gcd", "gcd(0, 0) is undefined");
    FpPoly u = a, v = b;
    while (!v.is_zero()) {
        FpPoly r = poly_mod(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return u.make_monic();
}

inline FpPoly derivative(const FpPoly& f) {
    std::uint64_t p = f.modulus();
    if (f.degree() < 1) return FpPoly::zero(p);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()), 0);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        c[i - 1] = mul_mod(f.coeffs()[i], i % p, p);
    return FpPoly(p, std::move(c));
}

/// f(x^n); n = 0 yields the constant f(1).
inline FpPoly substitute_power(const FpPoly& f, std::uint64_t n) {
    std::uint64_t p = f.modulus();
    if (f.is_zero()) return f;
    if (n == 0) return FpPoly(p, {f.eval(1)});
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()) * n + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i * n] = f.coeffs()[i];
    return FpPoly(p, std::move(c));
}

/// base^e mod m for an arbitrary-precision exponent.
inline FpPoly pow_mod_poly(const FpPoly& base, const mpz_class& e, const FpPoly& m) {
    FpPoly result = FpPoly::one(base.modulus());
    FpPoly b = poly_mod(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mod(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mod(result * b, m);
    }
    return result;
}

namespace detail {

/// g(x^p) -> g, using c^p = c in F_p.
inline FpPoly pth_root(const FpPoly& f) {
    std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        if (i % p != 0) fail("domain", "polynomial is not a p-th power");
        c[i / p] = f.coeffs()[i];
    }
    return FpPoly(p, std::move(c));
}

/// Squarefree decomposition of a monic f: pairwise-coprime monic parts with
/// their multiplicities; each irreducible factor of f lands in exactly one part.
inline std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f) {
    std::uint64_t p = f.modulus();
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly d = derivative(f);
    if (d.is_zero()) {
        for (auto& [part, mult] : squarefree_decomposition(pth_root(f)))
            out.emplace_back(part, mult * static_cast<unsigned>(p));
        return out;
    }
    FpPoly c = poly_gcd(f, d);
    FpPoly w = poly_divmod(f, c).first;
    unsigned i = 1;
    while (!w.is_one()) {
        FpPoly y = poly_gcd(w, c);
        FpPoly part = poly_divmod(w, y).first;
        if (!part.is_one()) out.emplace_back(part, i);
        w = std::move(y);
        c = poly_divmod(c, w).first;
        ++i;
    }
    if (!c.is_one()) {
        for (auto& [part, mult] : squarefree_decomposition(pth_root(c)))
            out.emplace_back(part, mult * static_cast<unsigned>(p));
    }
    return out;
}

/// Distinct-degree splitting of a squarefree monic f: (product, degree) pairs.
inline std::vector<std::pair<FpPoly, unsigned>> distinct_degree_split(FpPoly f) {
    std::uint64_t p = f.modulus();
    std::vector<std::pair<FpPoly, unsigned>> out;
    FpPoly h = FpPoly::x(p);
    unsigned d = 0;
    while (f.degree() >= 2 * static_cast<long>(d + 1)) {
        ++d;
        h = pow_mod_poly(h, mpz_class(static_cast<unsigned long>(p)), f);
        FpPoly g = poly_gcd(f, h - FpPoly::x(p));
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = poly_divmod(f, g).first;
            h = poly_mod(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting; randomized internally but the
/// caller sorts the output, so results are deterministic as a set.
inline void equal_degree_split(const FpPoly& f, unsigned d, std::mt19937_64& rng,
                               std::vector<FpPoly>& out) {
    std::uint64_t p = f.modulus();
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f);
        return;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        std::vector<std::uint64_t> rc(static_cast<std::size_t>(f.degree()), 0);
        for (auto& v : rc) v = dist(rng);
        FpPoly r(p, std::move(rc));
        if (r.degree() < 1) continue;
        FpPoly g = poly_gcd(f, r);
        if (g.degree() == 0) {
            if (p == 2) {
                // additive trace map over F_{2^d}
                FpPoly t = FpPoly::zero(p);
                FpPoly ri = poly_mod(r, f);
                for (unsigned i = 0; i < d; ++i) {
                    t = t + ri;
                    ri = poly_mod(ri * ri, f);
                }
                g = poly_gcd(f, t);
            } else {
                mpz_class e;
                mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
                e = (e - 1) / 2;
                FpPoly h = pow_mod_poly(r, e, f);
                g = poly_gcd(f, h - FpPoly::one(p));
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(poly_divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

struct FpFactor {
    FpPoly poly;
    unsigned multiplicity;

    bool operator==(const FpFactor&) const = default;
};

/// unit * prod(factors^multiplicities) reconstructs the input exactly;
/// factors are monic irreducible, canonically sorted.
struct FactorList {
    std::uint64_t unit;
    std::vector<FpFactor> factors;

    FpPoly product(std::uint64_t p) const {
        FpPoly acc = unit * FpPoly::one(p);
        for (const auto& [g, m] : factors)
            for (unsigned i = 0; i < m; ++i) acc = acc * g;
        return acc;
    }
};

inline FactorList factor_fp(const FpPoly& f) {
    if (f.is_zero()) fail("cannot-factor", "cannot factor the zero polynomial");
    FactorList out{f.leading(), {}};
    FpPoly g = f.make_monic();
    if (g.degree() < 1) return out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(g.degree()));
    for (const auto& [part, mult] : detail::squarefree_decomposition(g)) {
        for (const auto& [prod, deg] : detail::distinct_degree_split(part)) {
            std::vector<FpPoly> irr;
            detail::equal_degree_split(prod, deg, rng, irr);
            for (auto& q : irr) out.factors.push_back({std::move(q), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FpFactor& a, const FpFactor& b) { return a.poly < b.poly; });
    return out;
}

/// Rabin irreducibility test: x^(p^d) = x mod f, and x^(p^(d/q)) - x coprime
/// to f for every prime q | d. Independent of factor_fp so the two can
/// cross-check.
inline bool is_irreducible_fp(const FpPoly& f) {
    if (f.degree() < 1) fail("degree-error", "irreducibility requires degree >= 1");
    std::uint64_t p = f.modulus();
    if (f.degree() == 1) return true;
    FpPoly g = f.make_monic();
    std::uint64_t d = static_cast<std::uint64_t>(g.degree());
    std::vector<std::uint64_t> checkpoints;
    for (const auto& [q, e] : factorize(d)) checkpoints.push_back(d / q);
    FpPoly h = FpPoly::x(p);
    for (std::uint64_t k = 1; k <= d; ++k) {
        h = pow_mod_poly(h, mpz_class(static_cast<unsigned long>(p)), g);
        if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
            FpPoly diff = h - FpPoly::x(p);
            if (diff.is_zero() || poly_gcd(g, diff).degree() != 0) return false;
        }
    }
    return h == poly_mod(FpPoly::x(p), g);
}

/// Monic product of the distinct irreducible factors, with p-th-power
/// detection via the squarefree decomposition.
inline FpPoly radical(const FpPoly& f) {
    if (f.is_zero()) fail("undefined-radical", "radical of the zero polynomial is undefined");
    FpPoly g = f.make_monic();
    if (g.degree() < 1) return FpPoly::one(f.modulus());
    FpPoly acc = FpPoly::one(f.modulus());
    for (const auto& [part, mult] : detail::squarefree_decomposition(g)) acc = acc * part;
    return acc;
}

}  // namespace cyclokit

#endif
