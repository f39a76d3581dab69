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

#ifndef CYCLOKIT_NUMBERS_HPP
#define CYCLOKIT_NUMBERS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "cyclokit/errors.hpp"

namespace cyclokit {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Smallest-prime-factor sieve; deterministic factorization for every
/// m <= bound^2 with at most one prime factor above the bound.
class Sieve {
   public:
    explicit Sieve(std::uint64_t bound) : bound_(bound), spf_(bound + 1, 0) {
        for (std::uint64_t i = 2; i <= bound; ++i) {
            if (spf_[i] == 0) {
                spf_[i] = static_cast<std::uint32_t>(i);
                primes_.push_back(i);
                for (std::uint64_t j = i * i; j <= bound; j += i)
                    if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }

    std::uint64_t bound() const noexcept { return bound_; }
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

    bool is_prime(std::uint64_t m) const {
        if (m < 2) return false;
        if (m <= bound_) return spf_[m] == m;
        if (m > bound_ * bound_)
            fail("range", "primality test for " + std::to_string(m) +
                              " exceeds sieve bound " + std::to_string(bound_));
        for (std::uint64_t p : primes_) {
            if (p * p > m) break;
            if (m % p == 0) return false;
        }
        return true;
    }

    Factorization factorize(std::uint64_t m) const {
        if (m == 0) fail("domain", "cannot factorize 0");
        Factorization out;
        if (m <= bound_) {
            while (m > 1) {
                std::uint64_t p = spf_[m];
                unsigned e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                out.push_back({p, e});
            }
            return out;
        }
        if (m > bound_ * bound_)
            fail("range", "factorization of " + std::to_string(m) +
                              " exceeds sieve bound " + std::to_string(bound_));
        for (std::uint64_t p : primes_) {
            if (p * p > m) break;
            if (m % p == 0) {
                unsigned e = 0;
                while (m % p == 0) {
                    m /= p;
                    ++e;
                }
                out.push_back({p, e});
            }
        }
        if (m > 1) out.push_back({m, 1});  // leftover cofactor is prime
        return out;
    }

   private:
    std::uint64_t bound_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint64_t> primes_;
};

inline std::uint64_t default_sieve_bound() {
    if (const char* env = std::getenv("CYCLO_SIEVE_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
    }
    return 1000000;
}

inline const Sieve& default_sieve() {
    static const Sieve sieve(default_sieve_bound());
    return sieve;
}

inline bool is_prime(std::uint64_t m) { return default_sieve().is_prime(m); }

inline Factorization factorize(std::uint64_t m) { return default_sieve().factorize(m); }

inline std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) fail("domain", "euler_phi(0) is undefined");
    std::uint64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

inline int mobius(std::uint64_t n) {
    if (n == 0) fail("domain", "mobius(0) is undefined");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) fail("domain", "divisors(0) is undefined");
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t count = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Least m >= 1 with q^m = 1 (mod n), computed by descending through the
/// divisors of phi(n) rather than naive iteration.
inline std::uint64_t multiplicative_order(std::int64_t q, std::uint64_t n) {
    if (n == 0) fail("domain", "multiplicative_order modulo 0 is undefined");
    if (n == 1) return 1;
    std::int64_t rs = q % static_cast<std::int64_t>(n);
    if (rs < 0) rs += static_cast<std::int64_t>(n);
    std::uint64_t r = static_cast<std::uint64_t>(rs);
    if (std::gcd(r, n) != 1)
        fail("not-a-unit", std::to_string(q) + " is not a unit modulo " + std::to_string(n));
    std::uint64_t t = euler_phi(n);
    for (const auto& [p, e] : factorize(t)) {
        while (t % p == 0 && pow_mod(r, t / p, n) == 1) t /= p;
    }
    return t;
}

}  // namespace cyclokit

#endif
