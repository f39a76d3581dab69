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

#include <random>

#include "cyclokit/classifier.hpp"

using namespace cyclokit;

TEST_CASE("closure chains") {
    CHECK(closure_chain(12, 6) == std::vector<std::uint64_t>{2, 1});
    CHECK(closure_chain(8, 2) == std::vector<std::uint64_t>{4, 2, 1});
    CHECK(closure_chain(9, 6) == std::vector<std::uint64_t>{3, 1});
    CHECK(closure_chain(4, 6) == std::vector<std::uint64_t>{2, 1});
    CHECK(closure_chain(7, 6).empty());
    CHECK(closure_chain(1, 5).empty());
    CHECK_THROWS_AS(closure_chain(0, 3), Error);
    CHECK_THROWS_AS(closure_chain(3, 0), Error);
    // every chain is the order sequence of alpha^(n^t): k/gcd(n^t, k)
    for (std::uint64_t k = 1; k <= 60; ++k) {
        for (std::uint64_t n = 2; n <= 12; ++n) {
            auto chain = closure_chain(k, n);
            std::uint64_t nt = 1;
            for (std::uint64_t v : chain) {
                nt *= n;  // small enough here not to overflow
                CHECK(v == k / std::gcd(nt, k));
            }
            if (!chain.empty()) CHECK(std::gcd(chain.back(), n) == 1);
        }
    }
}

TEST_CASE("gupta bound and inverse totient") {
    CHECK(gupta_bound(1) == 2);
    CHECK(gupta_bound(2) == 6);
    CHECK(gupta_bound(6) == 21);
    CHECK(gupta_bound(12) == 56);  // floor of 56.875
    CHECK_THROWS_AS(gupta_bound(0), Error);
    CHECK(inverse_totient(1) == std::vector<std::uint64_t>{1, 2});
    CHECK(inverse_totient(2) == std::vector<std::uint64_t>{3, 4, 6});
    CHECK(inverse_totient(4) == std::vector<std::uint64_t>{5, 8, 10, 12});
    CHECK(inverse_totient(3).empty());
    // exhaustive oracle: no preimage escapes the bound
    for (std::uint64_t m = 1; m <= 24; ++m) {
        std::vector<std::uint64_t> oracle;
        for (std::uint64_t d = 1; d <= 10000; ++d)
            if (euler_phi(d) == m) oracle.push_back(d);
        CHECK(inverse_totient(m) == oracle);
    }
}

TEST_CASE("root-power closure over Q") {
    // Phi_4 = x^2+1 has degree 2 and i^2 = -1 is not a root
    auto v = satisfies_property(IntPoly{1, 0, 1});
    CHECK_FALSE(v.holds);
    CHECK(v.exponent == 2);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == IntPoly{1, 0, 1});
    // cyclotomics with index coprime to the degree
    CHECK(satisfies_property(cyclotomic_poly(3)).holds);
    CHECK(satisfies_property(cyclotomic_poly(5)).holds);
    CHECK(satisfies_property(cyclotomic_poly(7)).holds);
    // x^n - 1 always closes (roots are n-th roots of unity or map into them)
    for (std::uint64_t n = 1; n <= 16; ++n)
        CHECK(satisfies_property(IntPoly::monomial(n) - IntPoly::one()).holds);
    // Phi_3 * Phi_4 of degree 4: the chain of 4 demands Phi_2 and Phi_1
    auto bad = satisfies_property(cyclotomic_poly(3) * cyclotomic_poly(4));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == cyclotomic_poly(4));
    // scaling invariance
    CHECK(satisfies_property(mpz_class(7) * cyclotomic_poly(3)).holds);
    CHECK_FALSE(satisfies_property(mpz_class(-3) * IntPoly{1, 0, 1}).holds);
    // degree <= 1 is vacuous
    CHECK(satisfies_property(IntPoly{4}).holds);
    CHECK(satisfies_property(IntPoly{2, 3}).holds);
    CHECK_THROWS_AS(satisfies_property(IntPoly{}), Error);
    // non-cyclotomic failure keeps the witness empty
    auto nc = satisfies_property(IntPoly{-2, 0, 1});  // x^2 - 2, sqrt(2) -> 2 not a root
    CHECK_FALSE(nc.holds);
    CHECK_FALSE(nc.witness.has_value());
}

TEST_CASE("root-power closure over F_p and the factor oracle agree") {
    std::mt19937_64 rng(307);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t n = 2 + trial % 6;
            std::vector<std::uint64_t> c(n + 1);
            for (auto& x : c) x = coeff(rng);
            c[n] = 1;
            FpPoly f(p, c);
            auto v = satisfies_property(f);
            CHECK(v.holds == satisfies_property_via_factors(f));
            if (!v.holds) {
                REQUIRE(v.witness.has_value());
                CHECK(poly_mod(f, *v.witness).is_zero());
                CHECK_FALSE(poly_mod(substitute_power(f, n), *v.witness).is_zero());
            }
        }
    }
    CHECK(satisfies_property(FpPoly(2, {1, 1, 1})).holds);  // Phi_3 over F_2
    CHECK_THROWS_AS(satisfies_property(FpPoly::zero(2)), Error);
}

TEST_CASE("irreducible classification over Q") {
    CHECK(classify_irreducible_q(2) == std::vector<std::uint64_t>{3});
    CHECK(classify_irreducible_q(6) == std::vector<std::uint64_t>{7});
    CHECK(classify_irreducible_q(60) == std::vector<std::uint64_t>{61, 77});
    CHECK(classify_irreducible_q(4) == std::vector<std::uint64_t>{5});
    CHECK_THROWS_AS(classify_irreducible_q(1), Error);
    // every classified index yields a polynomial that passes the checker
    for (std::uint64_t n : {2ull, 4ull, 6ull}) {
        for (std::uint64_t d : classify_irreducible_q(n)) {
            IntPoly phi = cyclotomic_poly(d);
            CHECK(phi.degree() == static_cast<long>(n));
            CHECK(satisfies_property(phi).holds);
        }
    }
    // indices sharing a factor with the degree fail
    CHECK_FALSE(satisfies_property(cyclotomic_poly(4)).holds);   // phi(4) = 2, gcd = 2
    CHECK_FALSE(satisfies_property(cyclotomic_poly(9)).holds);   // phi(9) = 6, gcd = 3
}

TEST_CASE("shape families expand and respect closure") {
    ShapeFamily fam{1, {{1, 2}, {3, 1}}, 5};
    CHECK(fam.expand() == IntPoly::x() * cyclotomic_poly(1) * cyclotomic_poly(1) * cyclotomic_poly(3));
    CHECK(fam.closure_holds());  // 3 coprime to 5, 1 coprime to everything
    ShapeFamily bad{0, {{9, 1}}, 6};
    CHECK_FALSE(bad.closure_holds());  // chain of 9 under 6 requires indices 3 and 1
    ShapeFamily fixed{0, {{9, 1}, {3, 1}, {1, 1}}, 6};  // wrong degree but closed
    CHECK(fixed.closure_holds());
}

TEST_CASE("enumerate_q produces exactly the closed degree-n shapes") {
    CHECK_THROWS_AS(enumerate_q(1), Error);
    CHECK_THROWS_AS(enumerate_q(13), Error);
    for (std::uint64_t n : {2ull, 3ull, 4ull, 6ull}) {
        auto fams = enumerate_q(n);
        CHECK(std::is_sorted(fams.begin(), fams.end()));
        CHECK(std::adjacent_find(fams.begin(), fams.end()) == fams.end());
        for (const auto& fam : fams) {
            CHECK(fam.n == n);
            CHECK(fam.closure_holds());
            IntPoly f = fam.expand();
            CHECK(f.degree() == static_cast<long>(n));
            CHECK(satisfies_property(f).holds);
        }
    }
    // the two famous degree-6 members
    auto fams6 = enumerate_q(6);
    ShapeFamily phi7{0, {{7, 1}}, 6};
    ShapeFamily mixed{0, {{1, 1}, {2, 1}, {12, 1}}, 6};
    CHECK(std::find(fams6.begin(), fams6.end(), phi7) != fams6.end());
    CHECK(std::find(fams6.begin(), fams6.end(), mixed) != fams6.end());
    ShapeFamily lone9{0, {{9, 1}}, 6};
    CHECK(std::find(fams6.begin(), fams6.end(), lone9) == fams6.end());
}

TEST_CASE("irreducible classification over F_p matches brute force") {
    auto c22 = classify_irreducible_fp(2, 2);
    REQUIRE(c22.size() == 1);
    CHECK(c22[0] == FpPoly(2, {1, 1, 1}));
    auto c24 = classify_irreducible_fp(2, 4);
    CHECK(c24.size() == 3);  // all three irreducible quartics over F_2
    CHECK(c24 == brute_classify_fp(2, 4));
    CHECK(classify_irreducible_fp(3, 4) == brute_classify_fp(3, 4));
    CHECK(classify_irreducible_fp(5, 3) == brute_classify_fp(5, 3));
    CHECK(classify_irreducible_fp(2, 6) == brute_classify_fp(2, 6));
    CHECK_THROWS_AS(classify_irreducible_fp(4, 3), Error);
    CHECK_THROWS_AS(classify_irreducible_fp(2, 1), Error);
    CHECK_THROWS_AS(classify_irreducible_fp(2, 60), Error);  // guard
    CHECK_THROWS_AS(brute_classify_fp(5, 20), Error);        // guard
}
