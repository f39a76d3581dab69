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

#include "cyclokit/cyclotomic.hpp"
#include "cyclokit/poly_io.hpp"

using namespace cyclokit;

TEST_CASE("grammar accepts the documented term forms") {
    CHECK(parse_int_poly("x^2+x+1") == IntPoly{1, 1, 1});
    CHECK(parse_int_poly("3") == IntPoly{3});
    CHECK(parse_int_poly("x") == IntPoly{0, 1});
    CHECK(parse_int_poly("x^5") == IntPoly::monomial(5));
    CHECK(parse_int_poly("2*x^3") == IntPoly{0, 0, 0, 2});
    CHECK(parse_int_poly("-x+4") == IntPoly{4, -1});
    CHECK(parse_int_poly("x^2 - 2*x + 1") == IntPoly{1, -2, 1});
    CHECK(parse_int_poly("x+x") == IntPoly{0, 2});  // like terms merge
    CHECK(parse_int_poly("0") == IntPoly::zero());
    CHECK(parse_fp_poly("x^2+x+1", 2) == FpPoly(2, {1, 1, 1}));
    CHECK(parse_fp_poly("x^8+x^7+x^5+x^4+x^3+x+1", 2) == cyclotomic_mod_p(15, 2));
    CHECK(parse_fp_poly("5*x+7", 3) == FpPoly(3, {1, 2}));
    CHECK(parse_fp_poly("-x", 5) == FpPoly(5, {0, 4}));  // negatives reduce into [0, p)
}

TEST_CASE("syntax errors carry a position") {
    auto offset_of = [](const std::string& text) -> std::string {
        try {
            parse_int_poly(text);
        } catch (const Error& e) {
            CHECK(e.name() == std::string("syntax"));
            return e.what();
        }
        FAIL("expected a syntax error");
        return {};
    };
    CHECK(offset_of("x^^2").find("offset 2") != std::string::npos);
    CHECK(offset_of("").find("offset 0") != std::string::npos);
    CHECK(offset_of("x+").find("offset 2") != std::string::npos);
    CHECK(offset_of("x y").find("offset 2") != std::string::npos);
    CHECK(offset_of("*x").find("offset 0") != std::string::npos);
}

TEST_CASE("canonical printing round-trips") {
    CHECK(to_string(IntPoly{1, 1, 1}) == "x^2+x+1");
    CHECK(to_string(IntPoly{1, -2, 1}) == "x^2-2*x+1");
    CHECK(to_string(IntPoly{-1, 1}) == "x-1");
    CHECK(to_string(IntPoly{}) == "0");
    CHECK(to_string(IntPoly{-7}) == "-7");
    CHECK(to_string(FpPoly(2, {1, 0, 0, 1, 1})) == "x^4+x^3+1");
    CHECK(to_string(FpPoly(3, {0, 2})) == "2*x");
    std::mt19937_64 rng(401);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<mpz_class> c;
        for (int i = 0; i < 1 + trial % 7; ++i) c.emplace_back(coeff(rng));
        IntPoly f{std::move(c)};
        CHECK(parse_int_poly(to_string(f)) == f);
    }
    for (std::uint64_t p : {2ull, 3ull, 7ull}) {
        std::uniform_int_distribution<std::uint64_t> fc(0, p - 1);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::uint64_t> c;
            for (int i = 0; i < 1 + trial % 7; ++i) c.push_back(fc(rng));
            FpPoly f(p, std::move(c));
            CHECK(parse_fp_poly(to_string(f), p) == f);
        }
    }
}

TEST_CASE("JSON serialization uses decimal strings") {
    IntPoly f{-1, 0, 1};
    nlohmann::json j = poly_to_json(f);
    CHECK(j["p"].is_null());
    CHECK(j["coeffs"] == nlohmann::json::array({"-1", "0", "1"}));
    CHECK(int_poly_from_json(j) == f);
    FpPoly g(7, {3, 0, 5});
    nlohmann::json jg = poly_to_json(g);
    CHECK(jg["p"] == 7);
    CHECK(fp_poly_from_json(jg) == g);
    CHECK_THROWS_AS(fp_poly_from_json(j), Error);  // missing modulus
    // arbitrary precision survives the round trip
    IntPoly big(std::vector<mpz_class>{mpz_class("123456789012345678901234567890"), 1});
    CHECK(int_poly_from_json(poly_to_json(big)) == big);
}

TEST_CASE("residue strings") {
    CHECK(parse_residues("1011", 2) == std::vector<std::uint64_t>{1, 0, 1, 1});
    CHECK(parse_residues("2,0,4", 5) == std::vector<std::uint64_t>{2, 0, 4});
    CHECK(parse_residues("1,0", 2) == std::vector<std::uint64_t>{1, 0});  // commas work for p=2 too
    CHECK_THROWS_AS(parse_residues("102", 2), Error);
    CHECK_THROWS_AS(parse_residues("3,1", 3), Error);  // residue out of range
    CHECK_THROWS_AS(parse_residues("", 2), Error);
    CHECK_THROWS_AS(parse_residues("1,,2", 3), Error);
    CHECK(format_residues({1, 0, 1}, 2) == "101");
    CHECK(format_residues({2, 0, 4}, 5) == "2,0,4");
    CHECK(parse_residues(format_residues({1, 1, 0, 1}, 2), 2) ==
          std::vector<std::uint64_t>{1, 1, 0, 1});
}
