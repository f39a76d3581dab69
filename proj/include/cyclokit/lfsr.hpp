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

#ifndef CYCLOKIT_LFSR_HPP
#define CYCLOKIT_LFSR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cyclokit/errors.hpp"
#include "cyclokit/fp_poly.hpp"
#include "cyclokit/numbers.hpp"

namespace cyclokit {

/// Coefficient row (p_{n-1}, ..., p_1, p_0) of an LFSR over F_p; taps[0] is
/// p_{n-1}. Register width n = taps.size().
struct TapVector {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> taps;

    std::size_t width() const noexcept { return taps.size(); }

    void validate() const {
        if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
        if (taps.empty()) fail("domain", "register width must be at least 1");
        for (std::uint64_t t : taps)
            if (t >= p) fail("domain", "tap value out of range for F_" + std::to_string(p));
    }

    bool operator==(const TapVector&) const = default;
};

/// State row (s_{n-1}, ..., s_1, s_0); bits[0] is s_{n-1}.
struct RegisterState {
    std::vector<std::uint64_t> bits;
};

/// Square matrix over F_p; bit-packed row multiplication kicks in for p = 2.
class BitMatrix {
   public:
    BitMatrix(std::uint64_t p, std::size_t n) : p_(p), n_(n), e_(n * n, 0) {
        if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
        if (n == 0) fail("domain", "matrix dimension must be at least 1");
    }

    static BitMatrix identity(std::uint64_t p, std::size_t n) {
        BitMatrix m(p, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::uint64_t modulus() const noexcept { return p_; }
    std::size_t dim() const noexcept { return n_; }

    std::uint32_t& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool operator==(const BitMatrix&) const = default;

   private:
    std::uint64_t p_;
    std::size_t n_;
    std::vector<std::uint32_t> e_;
};

/// The LFSR update matrix of the state recurrence: first column
/// (p_{n-1}, ..., p_0)^T, superdiagonal of ones, zeros elsewhere.
inline BitMatrix build_matrix(const TapVector& t) {
    t.validate();
    std::size_t n = t.width();
    BitMatrix m(t.p, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = static_cast<std::uint32_t>(t.taps[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    return m;
}

/// Anti-diagonal permutation matrix tau; tau * tau = identity.
inline BitMatrix reflection(std::size_t n, std::uint64_t p) {
    BitMatrix m(p, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
    return m;
}

inline BitMatrix matrix_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.modulus() != b.modulus())
        fail("modulus-mismatch", "matrix product over different prime fields");
    if (a.dim() != b.dim()) fail("dimension-mismatch", "matrix dimensions differ");
    std::size_t n = a.dim();
    std::uint64_t p = a.modulus();
    BitMatrix c(p, n);
    if (p == 2 && n <= 64) {
        std::vector<std::uint64_t> brows(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (b.at(i, j)) brows[i] |= std::uint64_t(1) << j;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (a.at(i, k)) acc ^= brows[k];
            for (std::size_t j = 0; j < n; ++j) c.at(i, j) = (acc >> j) & 1;
        }
        return c;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
            c.at(i, j) = static_cast<std::uint32_t>(acc % p);
        }
    }
    return c;
}

inline BitMatrix matrix_pow(const BitMatrix& a, std::uint64_t k) {
    BitMatrix result = BitMatrix::identity(a.modulus(), a.dim());
    BitMatrix base = a;
    while (k > 0) {
        if (k & 1) result = matrix_mul(result, base);
        base = matrix_mul(base, base);
        k >>= 1;
    }
    return result;
}

/// s_0, ..., s_{count-1}: the seed (oldest first), then the recurrence
/// s_j = sum_i s_{j-i} p_{n-i} mod p. Oldest-first output; the stream is
/// conventionally written right-to-left.
inline std::vector<std::uint64_t> lfsr_stream(const TapVector& t, const RegisterState& seed,
                                              std::size_t count) {
    t.validate();
    std::size_t n = t.width();
    if (seed.bits.size() != n)
        fail("domain", "seed length " + std::to_string(seed.bits.size()) +
                           " does not match register width " + std::to_string(n));
    std::vector<std::uint64_t> s;
    s.reserve(count);
    for (std::size_t j = 0; j < count && j < n; ++j) s.push_back(seed.bits[n - 1 - j] % t.p);
    for (std::size_t j = n; j < count; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = 1; i <= n; ++i) acc += mul_mod(s[j - i], t.taps[i - 1], t.p);
        s.push_back(acc % t.p);
    }
    return s;
}

/// True iff L = tau * L^n * tau with n the register width.
inline bool symmetry_check(const TapVector& t) {
    BitMatrix l = build_matrix(t);
    BitMatrix tau = reflection(t.width(), t.p);
    BitMatrix conj = matrix_mul(matrix_mul(tau, matrix_pow(l, t.width())), tau);
    return l == conj;
}

/// All tap vectors of width n over F_p passing symmetry_check, in
/// lexicographic order of the taps sequence.
inline std::vector<TapVector> enumerate_symmetric(std::size_t n, std::uint64_t p) {
    if (n == 0) fail("domain", "register width must be at least 1");
    if (!is_prime(p)) fail("not-prime", std::to_string(p) + " is not prime");
    double size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= static_cast<double>(p);
    if (size > static_cast<double>(1 << 24))
        fail("search-space-too-large",
             "p^n exceeds the 2^24 exhaustive-search guard");
    std::vector<TapVector> out;
    TapVector t{p, std::vector<std::uint64_t>(n, 0)};
    for (;;) {
        if (symmetry_check(t)) out.push_back(t);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++t.taps[i] < p) break;
            t.taps[i] = 0;
            if (i == 0) return out;
        }
    }
}

/// Characteristic polynomial of the update matrix: x^n + sum p_i x^i in
/// characteristic 2, x^n - sum p_i x^i otherwise.
inline FpPoly char_poly(const TapVector& t) {
    t.validate();
    std::size_t n = t.width();
    std::vector<std::uint64_t> c(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t pi = t.taps[n - 1 - i];
        c[i] = t.p == 2 ? pi : (t.p - pi) % t.p;
    }
    c[n] = 1;
    return FpPoly(t.p, std::move(c));
}

}  // namespace cyclokit

#endif
