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

#ifndef CYCLOKIT_CYCLOTOMIC_HPP
#define CYCLOKIT_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclokit/errors.hpp"
#include "cyclokit/fp_poly.hpp"
#include "cyclokit/int_poly.hpp"
#include "cyclokit/numbers.hpp"

namespace cyclokit {

/// Phi_n over Z via Mobius inversion: multiply the (x^(n/d) - 1) with
/// mu(d) = 1 and exactly divide by those with mu(d) = -1. Exact integer
/// arithmetic throughout; never floating point, never root enumeration.
inline IntPoly cyclotomic_poly(std::uint64_t n) {
    if (n == 0) fail("domain", "cyclotomic index must be positive");
    IntPoly num = IntPoly::one();
    std::vector<std::uint64_t> den_degrees;
    for (std::uint64_t d : divisors(n)) {
        int mu = mobius(d);
        if (mu == 0) continue;
        std::uint64_t k = n / d;
        if (mu == 1) {
            num = num * (IntPoly::monomial(k) - IntPoly::one());
        } else {
            den_degrees.push_back(k);
        }
    }
    for (std::uint64_t k : den_degrees) {
        auto [q, r] = poly_divmod(num, IntPoly::monomial(k) - IntPoly::one());
        if (!r.is_zero()) fail("domain", "internal: inexact cyclotomic division");
        num = std::move(q);
    }
    return num;
}

inline FpPoly reduce_mod_p(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
        c.push_back(r.get_ui());
    }
    return FpPoly(p, std::move(c));
}

inline FpPoly cyclotomic_mod_p(std::uint64_t n, std::uint64_t p) {
    if (n == 0) fail("domain", "cyclotomic index must be positive");
    if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
    return reduce_mod_p(cyclotomic_poly(n), p);
}

/// Predicted factorization shape of Phi_n over F_p: with n = p^a * n',
/// gcd(n', p) = 1, the factors have degree ord_{n'}(p), there are
/// phi(n')/degree of them, each with multiplicity phi(p^a) when a >= 1.
struct FactorPattern {
    std::uint64_t count;
    std::uint64_t degree;
    std::uint64_t multiplicity;

    bool operator==(const FactorPattern&) const = default;
};

inline FactorPattern factor_pattern(std::uint64_t n, std::uint64_t p) {
    if (n == 0) fail("domain", "cyclotomic index must be positive");
    if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
    std::uint64_t a = 0, rest = n, pa = 1;
    while (rest % p == 0) {
        rest /= p;
        ++a;
        pa *= p;
    }
    std::uint64_t degree = multiplicative_order(static_cast<std::int64_t>(p), rest);
    std::uint64_t count = euler_phi(rest) / degree;
    std::uint64_t multiplicity = a >= 1 ? pa / p * (p - 1) : 1;
    return {count, degree, multiplicity};
}

/// True iff Phi_n is irreducible over F_p, i.e. ord_n(p) = phi(n).
inline bool is_cyclotomic_irreducible_fp(std::uint64_t n, std::uint64_t p) {
    if (n == 0) fail("domain", "cyclotomic index must be positive");
    if (std::gcd(n, p) != 1)
        fail("not-coprime", "index " + std::to_string(n) + " shares a factor with " +
                                std::to_string(p));
    return multiplicative_order(static_cast<std::int64_t>(p), n) == euler_phi(n);
}

}  // namespace cyclokit

#endif
