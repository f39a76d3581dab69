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

#ifndef CYCLOKIT_CYCLIC_NUMBERS_HPP
#define CYCLOKIT_CYCLIC_NUMBERS_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cyclokit/errors.hpp"
#include "cyclokit/numbers.hpp"

namespace cyclokit {

struct CyclicRecord {
    std::uint64_t d;
    std::uint64_t phi;
    bool is_cyclic;
    bool is_prime;

    bool operator==(const CyclicRecord&) const = default;
};

/// d is cyclic iff gcd(d, phi(d)) = 1: the orders with a unique group.
inline bool is_cyclic(std::uint64_t d) {
    if (d == 0) fail("domain", "is_cyclic requires d >= 1");
    return std::gcd(d, euler_phi(d)) == 1;
}

/// Ascending records for the cyclic numbers 1 < d < limit.
inline std::vector<CyclicRecord> cyclic_list(std::uint64_t limit, bool composite_only) {
    if (limit > 10000000) fail("range", "cyclic_list limit capped at 10^7");
    std::vector<CyclicRecord> out;
    for (std::uint64_t d = 2; d < limit; ++d) {
        std::uint64_t phi = euler_phi(d);
        if (std::gcd(d, phi) != 1) continue;
        bool prime = is_prime(d);
        if (composite_only && prime) continue;
        out.push_back({d, phi, true, prime});
    }
    return out;
}

/// Korselt criterion: m composite, squarefree, and p - 1 | m - 1 for every
/// prime p | m.
inline bool is_carmichael(std::uint64_t m) {
    if (m < 2) fail("domain", "is_carmichael requires m >= 2");
    Factorization fac = factorize(m);
    if (fac.size() < 2) return false;  // primes and prime powers are not composite squarefree
    for (const auto& [p, e] : fac) {
        if (e > 1) return false;
        if ((m - 1) % (p - 1) != 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> carmichael_numbers(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 3; m < limit; m += 2)
        if (is_carmichael(m)) out.push_back(m);
    return out;
}

struct ConsecutiveProduct {
    std::uint64_t d;
    bool cyclic;
};

/// d = p_i * p_{i+1} (1-indexed primes); products of two consecutive odd
/// primes are always cyclic.
inline ConsecutiveProduct check_consecutive_prime_product(std::uint64_t i) {
    if (i < 2) fail("domain", "index must be >= 2 so the product is odd");
    const auto& primes = default_sieve().primes();
    if (i >= primes.size())
        fail("range", "prime index " + std::to_string(i) + " exceeds the sieve");
    std::uint64_t d = primes[i - 1] * primes[i];
    return {d, is_cyclic(d)};
}

/// Every divisor of a Carmichael number is odd and cyclic.
inline bool carmichael_divisor_check(std::uint64_t m) {
    if (!is_carmichael(m)) fail("precondition", std::to_string(m) + " is not a Carmichael number");
    for (std::uint64_t d : divisors(m))
        if (d % 2 == 0 || !is_cyclic(d)) return false;
    return true;
}

/// Smallest Carmichael multiple of d below d * multiplier_bound, if any.
/// A none-found result refutes nothing; the underlying conjecture is open.
inline std::optional<std::uint64_t> michon_search(std::uint64_t d,
                                                  std::uint64_t multiplier_bound) {
    if (d == 0 || d % 2 == 0 || !is_cyclic(d))
        fail("precondition", "michon_search requires an odd cyclic d");
    if (multiplier_bound == 0 || d > 1000000000 / multiplier_bound)
        fail("range", "d * multiplier_bound capped at 10^9");
    for (std::uint64_t j = 1; j < multiplier_bound; ++j) {
        std::uint64_t m = d * j;
        if (m >= 3 && m % 2 == 1 && is_carmichael(m)) return m;
    }
    return std::nullopt;
}

}  // namespace cyclokit

#endif
