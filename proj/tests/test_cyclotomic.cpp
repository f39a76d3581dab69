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

#include <catch2/catch_amalgamated.hpp>

#include "cyclokit/cyclotomic.hpp"

using namespace cyclokit;

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_poly(2) == IntPoly{1, 1});
    CHECK(cyclotomic_poly(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic_poly(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic_poly(5) == IntPoly{1, 1, 1, 1, 1});
    CHECK(cyclotomic_poly(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic_poly(8) == IntPoly{1, 0, 0, 0, 1});
    CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_poly(0), Error);
}

TEST_CASE("prime-index cyclotomics are all-ones") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 61ull}) {
        IntPoly phi = cyclotomic_poly(p);
        REQUIRE(phi.degree() == static_cast<long>(p - 1));
        for (const auto& c : phi.coeffs()) CHECK(c == 1);
    }
}

TEST_CASE("degree equals the totient and the product identity holds") {
    for (std::uint64_t n = 1; n <= 120; ++n) {
        IntPoly prod = IntPoly::one();
        for (std::uint64_t d : divisors(n)) {
            IntPoly phi = cyclotomic_poly(d);
            CHECK(phi.degree() == static_cast<long>(euler_phi(d)));
            CHECK(phi.is_monic());
            prod = prod * phi;
        }
        CHECK(prod == IntPoly::monomial(n) - IntPoly::one());
    }
}

TEST_CASE("distinct cyclotomics are coprime over Z") {
    for (std::uint64_t m = 1; m <= 40; ++m)
        for (std::uint64_t n = m + 1; n <= 40; ++n)
            CHECK(poly_gcd(cyclotomic_poly(m), cyclotomic_poly(n)) == IntPoly::one());
}

TEST_CASE("the first coefficient outside {-1, 0, 1} appears at index 105") {
    IntPoly phi = cyclotomic_poly(105);
    bool found = false;
    for (const auto& c : phi.coeffs())
        if (c == -2) found = true;
    CHECK(found);
    for (std::uint64_t n = 1; n < 105; ++n) {
        IntPoly f = cyclotomic_poly(n);
        for (const auto& c : f.coeffs()) CHECK((c >= -1 && c <= 1));
    }
}

TEST_CASE("reduction modulo p") {
    CHECK(cyclotomic_mod_p(15, 2) == FpPoly(2, {1, 1, 0, 1, 1, 1, 0, 1, 1}));
    CHECK(cyclotomic_mod_p(6, 5) == FpPoly(5, {1, 4, 1}));
    CHECK_THROWS_AS(cyclotomic_mod_p(6, 4), Error);
    CHECK_THROWS_AS(cyclotomic_mod_p(0, 2), Error);
    CHECK(reduce_mod_p(IntPoly{-1, 1}, 3) == FpPoly(3, {2, 1}));
}

TEST_CASE("cyclotomic collapse in characteristic p") {
    // Phi_{p^a n'} = Phi_{n'}^{phi(p^a)} mod p
    FpPoly xp1(2, {1, 1});
    CHECK(cyclotomic_mod_p(8, 2) == xp1 * xp1 * xp1 * xp1);  // (x+1)^4
    FpPoly phi5_3 = cyclotomic_mod_p(5, 3);
    CHECK(cyclotomic_mod_p(15, 3) == phi5_3 * phi5_3);  // phi(3) = 2
    FpPoly phi2_3 = cyclotomic_mod_p(2, 3);
    CHECK(cyclotomic_mod_p(18, 3) == phi2_3 * phi2_3 * phi2_3 * phi2_3 * phi2_3 * phi2_3);
}

TEST_CASE("factor pattern predicts the actual factorization") {
    CHECK(factor_pattern(15, 2) == FactorPattern{2, 4, 1});
    CHECK(factor_pattern(8, 2) == FactorPattern{1, 1, 4});
    CHECK_THROWS_AS(factor_pattern(8, 9), Error);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::uint64_t n = 1; n <= 40; ++n) {
            FactorPattern pat = factor_pattern(n, p);
            FactorList fl = factor_fp(cyclotomic_mod_p(n, p));
            CHECK(fl.factors.size() == pat.count);
            for (const auto& [g, m] : fl.factors) {
                CHECK(static_cast<std::uint64_t>(g.degree()) == pat.degree);
                CHECK(m == pat.multiplicity);
            }
        }
    }
}

TEST_CASE("irreducibility of Phi_n over F_p") {
    CHECK_FALSE(is_cyclotomic_irreducible_fp(15, 2));  // splits into two quartics
    CHECK(is_cyclotomic_irreducible_fp(5, 2));         // ord_5(2) = 4 = phi(5)
    CHECK(is_cyclotomic_irreducible_fp(7, 3));         // 3 generates mod 7
    CHECK_FALSE(is_cyclotomic_irreducible_fp(7, 2));   // ord_7(2) = 3
    CHECK_THROWS_AS(is_cyclotomic_irreducible_fp(6, 2), Error);  // shared factor
    for (std::uint64_t n : {3ull, 5ull, 7ull, 9ull, 11ull, 13ull, 15ull}) {
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
            if (std::gcd(n, p) != 1) continue;
            CHECK(is_cyclotomic_irreducible_fp(n, p) == is_irreducible_fp(cyclotomic_mod_p(n, p)));
        }
    }
}
