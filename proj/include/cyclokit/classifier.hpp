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

#ifndef CYCLOKIT_CLASSIFIER_HPP
#define CYCLOKIT_CLASSIFIER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclokit/cyclotomic.hpp"
#include "cyclokit/errors.hpp"
#include "cyclokit/fp_poly.hpp"
#include "cyclokit/int_poly.hpp"
#include "cyclokit/numbers.hpp"

namespace cyclokit {

// Root-power closure: f of degree n such that f(alpha) = 0 implies
// f(alpha^n) = 0; equivalently, radical(f) divides f(x^n).

template <class Poly>
struct PropertyVerdict {
    bool holds;
    std::uint64_t exponent;        // the power used, = deg f
    std::optional<Poly> witness;   // irreducible factor g of f with g not | f(x^n)
};

/// Orders of alpha^(n^t) for a primitive k-th root alpha: the sequence
/// k/gcd(n^t, k) for t = 1, 2, ... until the value is coprime with n.
/// Empty when gcd(k, n) = 1.
inline std::vector<std::uint64_t> closure_chain(std::uint64_t k, std::uint64_t n) {
    if (k == 0 || n == 0) fail("domain", "closure_chain requires positive arguments");
    std::vector<std::uint64_t> out;
    if (std::gcd(k, n) == 1) return out;
    std::uint64_t v = k;
    do {
        v /= std::gcd(v, n);
        out.push_back(v);
    } while (std::gcd(v, n) != 1);
    return out;
}

/// Upper bound A(m) = m * prod_{p-1 | m} p/(p-1) on the totient preimage of m
/// (floor of the rational value when it is not integral).
inline std::uint64_t gupta_bound(std::uint64_t m) {
    if (m == 0) fail("domain", "gupta_bound requires m >= 1");
    mpz_class num(static_cast<unsigned long>(m)), den(1);
    for (std::uint64_t e : divisors(m)) {
        if (is_prime(e + 1)) {
            num *= static_cast<unsigned long>(e + 1);
            den *= static_cast<unsigned long>(e);
        }
    }
    mpz_class q = num / den;
    return static_cast<std::uint64_t>(q.get_ui());
}

/// All d with phi(d) = m, ascending; candidates bounded by A(m) inclusive.
inline std::vector<std::uint64_t> inverse_totient(std::uint64_t m) {
    if (m == 0) fail("domain", "inverse_totient requires m >= 1");
    std::vector<std::uint64_t> out;
    std::uint64_t bound = gupta_bound(m);
    for (std::uint64_t d = 1; d <= bound; ++d)
        if (euler_phi(d) == m) out.push_back(d);
    return out;
}

inline PropertyVerdict<IntPoly> satisfies_property(const IntPoly& f) {
    if (f.is_zero()) fail("domain", "the zero polynomial has no degree");
    std::uint64_t n = static_cast<std::uint64_t>(f.degree());
    if (n <= 1) return {true, n, std::nullopt};  // constants vacuously, linears trivially
    IntPoly g = primitive_part(f);  // the property is scaling-invariant
    IntPoly rad = radical(g);
    IntPoly sub = substitute_power(g, n);
    if (poly_divides(rad, sub)) return {true, n, std::nullopt};
    // Witness search over the cyclotomic factors (integer factorization
    // beyond cyclotomic structure is out of scope; the witness stays empty
    // when the failure sits in a non-cyclotomic factor).
    std::optional<IntPoly> witness;
    for (std::uint64_t m = 1; m <= n && !witness; ++m) {
        for (std::uint64_t k : inverse_totient(m)) {
            IntPoly phi = cyclotomic_poly(k);
            if (poly_divides(phi, g) && !poly_divides(phi, sub)) {
                witness = phi;
                break;
            }
        }
    }
    return {false, n, witness};
}

inline PropertyVerdict<FpPoly> satisfies_property(const FpPoly& f) {
    if (f.is_zero()) fail("domain", "the zero polynomial has no degree");
    std::uint64_t n = static_cast<std::uint64_t>(f.degree());
    if (n <= 1) return {true, n, std::nullopt};
    FpPoly g = f.make_monic();
    FpPoly rad = radical(g);
    FpPoly sub = substitute_power(g, n);
    if (poly_mod(sub, rad).is_zero()) return {true, n, std::nullopt};
    std::optional<FpPoly> witness;
    for (const auto& [factor, mult] : factor_fp(g).factors) {
        if (!poly_mod(sub, factor).is_zero()) {
            witness = factor;
            break;
        }
    }
    return {false, n, witness};
}

/// Independent oracle path over F_p: factor f completely and check that every
/// irreducible factor divides f(x^n). Tested to agree with the radical route.
inline bool satisfies_property_via_factors(const FpPoly& f) {
    if (f.is_zero()) fail("domain", "the zero polynomial has no degree");
    std::uint64_t n = static_cast<std::uint64_t>(f.degree());
    if (n <= 1) return true;
    FpPoly sub = substitute_power(f.make_monic(), n);
    for (const auto& [factor, mult] : factor_fp(f).factors)
        if (!poly_mod(sub, factor).is_zero()) return false;
    return true;
}

/// Cyclotomic indices d with phi(d) = n and gcd(n, d) = 1: the irreducible
/// degree-n polynomials over Q with root-power closure are exactly Phi_d.
inline std::vector<std::uint64_t> classify_irreducible_q(std::uint64_t n) {
    if (n <= 1)
        fail("out-of-scope",
             "degree 1 is not a cyclotomic classification (every linear polynomial qualifies)");
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : inverse_totient(n))
        if (std::gcd(d, n) == 1) out.push_back(d);
    return out;
}

/// A concrete product shape x^a * prod Phi_k^{e_k} of total degree n whose
/// cyclotomic index set is closed under the chain rule. Each ShapeFamily
/// expands to exactly one monic polynomial.
struct ShapeFamily {
    std::uint64_t a = 0;
    std::map<std::uint64_t, std::uint64_t> parts;  // index -> positive exponent
    std::uint64_t n = 0;

    IntPoly expand() const {
        IntPoly f = IntPoly::monomial(a);
        for (const auto& [k, e] : parts) {
            IntPoly phi = cyclotomic_poly(k);
            for (std::uint64_t i = 0; i < e; ++i) f = f * phi;
        }
        return f;
    }

    bool closure_holds() const {
        for (const auto& [k, e] : parts) {
            if (std::gcd(k, n) == 1) continue;
            for (std::uint64_t c : closure_chain(k, n))
                if (!parts.contains(c)) return false;
        }
        return true;
    }

    bool operator==(const ShapeFamily&) const = default;
    auto operator<=>(const ShapeFamily&) const = default;
};

/// All degree-n closed shapes, canonically ordered. Guarded to 2 <= n <= 12.
inline std::vector<ShapeFamily> enumerate_q(std::uint64_t n) {
    if (n < 2 || n > 12) fail("range", "enumerate_q supports 2 <= n <= 12");
    std::vector<std::uint64_t> indices;
    for (std::uint64_t m = 1; m <= n; ++m)
        for (std::uint64_t k : inverse_totient(m)) indices.push_back(k);
    std::sort(indices.begin(), indices.end());
    std::vector<ShapeFamily> out;
    ShapeFamily current;
    current.n = n;
    auto dfs = [&](auto&& self, std::size_t idx, std::uint64_t remaining) -> void {
        if (idx == indices.size()) {
            current.a = remaining;
            if (current.closure_holds()) out.push_back(current);
            return;
        }
        std::uint64_t k = indices[idx];
        std::uint64_t phi = euler_phi(k);
        self(self, idx + 1, remaining);
        for (std::uint64_t e = 1; e * phi <= remaining; ++e) {
            current.parts[k] = e;
            self(self, idx + 1, remaining - e * phi);
        }
        current.parts.erase(k);
    };
    dfs(dfs, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t p, std::uint64_t n, std::uint64_t guard,
                                 const char* what) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        v *= p;
        if (v > guard) fail("search-space-too-large", what);
    }
    return v;
}

}  // namespace detail

/// Constructive classification of the monic irreducible degree-n polynomials
/// over F_p with root-power closure.  An irreducible f of degree n >= 2 has
/// nonzero roots, all of the same multiplicative order k with ord_k(p) = n,
/// and its root set is a single Frobenius orbit {alpha^(p^j)}.  Closure asks
/// that alpha^n lie in that orbit, i.e. n = p^j (mod k) for some j, which is
/// a condition on k alone (hence the all-or-none behaviour of the factors of
/// a fixed Phi_k).  For each qualifying k the factors are assembled directly
/// as minimal polynomials of the order-k elements of F_(p^n).
inline std::vector<FpPoly> classify_irreducible_fp(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
    if (n < 2) fail("domain", "classification requires degree >= 2");
    std::uint64_t q = detail::checked_pow(p, n, std::uint64_t(1) << 24,
                                          "p^n exceeds the 2^24 guard");
    // F_q as F_p[x]/(g) with g the first irreducible monic of degree n
    FpPoly g = FpPoly::zero(p);
    std::vector<std::uint64_t> gc(n + 1, 0);
    gc[n] = 1;
    for (std::uint64_t code = 0;; ++code) {
        std::uint64_t v = code;
        for (std::size_t i = 0; i < n; ++i) {
            gc[i] = v % p;
            v /= p;
        }
        FpPoly cand(p, gc);
        if (is_irreducible_fp(cand)) {
            g = cand;
            break;
        }
    }
    auto fmul = [&](const FpPoly& a, const FpPoly& b) { return poly_mod(a * b, g); };
    auto fpow = [&](FpPoly base, std::uint64_t e) {
        FpPoly acc = FpPoly::one(p);
        while (e != 0) {
            if (e & 1) acc = fmul(acc, base);
            base = fmul(base, base);
            e >>= 1;
        }
        return acc;
    };
    // a generator of the cyclic group F_q^* of order q - 1
    std::vector<std::uint64_t> qprimes;
    for (const auto& [r, e] : factorize(q - 1)) qprimes.push_back(r);
    FpPoly gamma = FpPoly::zero(p);
    std::vector<std::uint64_t> ec(n, 0);
    for (std::uint64_t code = 2;; ++code) {
        std::uint64_t v = code;
        for (std::size_t i = 0; i < n; ++i) {
            ec[i] = v % p;
            v /= p;
        }
        FpPoly cand(p, ec);
        bool primitive = true;
        for (std::uint64_t r : qprimes)
            if (fpow(cand, (q - 1) / r).is_one()) {
                primitive = false;
                break;
            }
        if (primitive) {
            gamma = cand;
            break;
        }
    }
    std::vector<FpPoly> out;
    for (std::uint64_t k : divisors(q - 1)) {
        if (k <= n) continue;  // ord_k(p) = n forces k > phi(k) >= n
        if (multiplicative_order(static_cast<std::int64_t>(p), k) != n) continue;
        bool closed = false;
        std::uint64_t pj = 1 % k;
        for (std::uint64_t j = 0; j < n && !closed; ++j) {
            closed = (pj == n);
            pj = pj * p % k;
        }
        if (!closed) continue;
        // order-k elements are gamma^(s*i) with gcd(i, k) = 1; one minimal
        // polynomial per Frobenius orbit of exponents (orbit size is n)
        std::uint64_t s = (q - 1) / k;
        std::set<std::uint64_t> seen;
        for (std::uint64_t i = 1; i < k; ++i) {
            if (std::gcd(i, k) != 1) continue;
            std::uint64_t e = s * i;
            if (seen.count(e)) continue;
            std::uint64_t t = e;
            for (std::uint64_t j = 0; j < n; ++j) {
                seen.insert(t);
                t = t * p % (q - 1);
            }
            FpPoly conj = fpow(gamma, e);
            std::vector<FpPoly> mp{FpPoly::one(p)};  // coefficients live in F_q
            for (std::uint64_t j = 0; j < n; ++j) {
                std::vector<FpPoly> next(mp.size() + 1, FpPoly::zero(p));
                for (std::size_t d = 0; d < mp.size(); ++d) {
                    next[d + 1] = next[d + 1] + mp[d];
                    next[d] = next[d] - fmul(conj, mp[d]);
                }
                mp = std::move(next);
                conj = fpow(conj, p);
            }
            std::vector<std::uint64_t> fc(mp.size());
            for (std::size_t d = 0; d < mp.size(); ++d) {
                if (mp[d].degree() > 0)
                    fail("internal", "minimal polynomial coefficient left the prime field");
                fc[d] = mp[d].coeff(0);
            }
            out.emplace_back(p, std::move(fc));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Independent oracle: exhaust all monic degree-n polynomials over F_p,
/// keep the irreducible ones with root-power closure.
inline std::vector<FpPoly> brute_classify_fp(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
    if (n == 0) fail("domain", "degree must be at least 1");
    std::uint64_t space = detail::checked_pow(p, n, std::uint64_t(1) << 20,
                                              "p^n exceeds the 2^20 brute-force guard");
    std::vector<FpPoly> out;
    std::vector<std::uint64_t> c(n + 1, 0);
    c[n] = 1;
    for (std::uint64_t code = 0; code < space; ++code) {
        std::uint64_t v = code;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = v % p;
            v /= p;
        }
        FpPoly f(p, c);
        if (n >= 2) {
            if (f.coeff(0) == 0) continue;  // divisible by x, not irreducible
            if (!is_irreducible_fp(f)) continue;
        }
        if (satisfies_property(f).holds) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclokit

#endif
