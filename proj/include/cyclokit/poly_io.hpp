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

#ifndef CYCLOKIT_POLY_IO_HPP
#define CYCLOKIT_POLY_IO_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclokit/errors.hpp"
#include "cyclokit/fp_poly.hpp"
#include "cyclokit/int_poly.hpp"

namespace cyclokit {

namespace detail {

[[noreturn]] inline void syntax_error(std::size_t offset, const std::string& what) {
    fail("syntax", "syntax error at offset " + std::to_string(offset) + ": " + what);
}

/// Parses the polynomial grammar: terms `c`, `x`, `x^k`, `c*x^k` joined by
/// `+`/`-`. Returns ascending coefficients.
inline std::vector<mpz_class> parse_poly_text(std::string_view text) {
    std::vector<mpz_class> coeffs;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto add = [&](std::size_t k, const mpz_class& c) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, mpz_class(0));
        coeffs[k] += c;
    };
    skip();
    if (i == text.size()) syntax_error(i, "empty polynomial");
    bool first = true;
    while (true) {
        skip();
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            if (i >= text.size()) break;
            syntax_error(i, "expected '+' or '-'");
        }
        first = false;
        if (i >= text.size()) syntax_error(i, "expected a term");
        mpz_class coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            coeff = mpz_class(std::string(text.substr(start, i - start)), 10);
            have_coeff = true;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
                if (i >= text.size() || text[i] != 'x') syntax_error(i, "expected 'x' after '*'");
            }
        }
        std::size_t exponent = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    syntax_error(i, "expected an exponent after '^'");
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                exponent = std::stoull(std::string(text.substr(start, i - start)));
            }
        } else if (!have_coeff) {
            syntax_error(i, "expected a coefficient or 'x'");
        }
        add(exponent, sign * coeff);
        skip();
        if (i >= text.size()) break;
        if (text[i] != '+' && text[i] != '-') syntax_error(i, "expected '+' or '-'");
    }
    return coeffs;
}

inline void print_term(std::string& out, const std::string& coeff_text, bool coeff_is_one,
                       std::size_t k, bool negative, bool first) {
    if (first) {
        if (negative) out += '-';
    } else {
        out += negative ? '-' : '+';
    }
    if (k == 0) {
        out += coeff_text;
        return;
    }
    if (!coeff_is_one) {
        out += coeff_text;
        out += '*';
    }
    out += 'x';
    if (k > 1) {
        out += '^';
        out += std::to_string(k);
    }
}

}  // namespace detail

inline IntPoly parse_int_poly(std::string_view text) {
    return IntPoly(detail::parse_poly_text(text));
}

inline FpPoly parse_fp_poly(std::string_view text, std::uint64_t p) {
    std::vector<mpz_class> raw = detail::parse_poly_text(text);
    std::vector<std::uint64_t> c;
    c.reserve(raw.size());
    for (const auto& v : raw) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
        c.push_back(r.get_ui());
    }
    return FpPoly(p, std::move(c));
}

/// Canonical printer (descending terms); parse(print(f)) = f.
inline std::string to_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        const mpz_class& c = f.coeffs()[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        detail::print_term(out, mag.get_str(), mag == 1, k, c < 0, first);
        first = false;
    }
    return out;
}

inline std::string to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        std::uint64_t c = f.coeffs()[k];
        if (c == 0) continue;
        detail::print_term(out, std::to_string(c), c == 1, k, false, first);
        first = false;
    }
    return out;
}

inline nlohmann::json poly_to_json(const IntPoly& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
    return {{"p", nullptr}, {"coeffs", coeffs}};
}

inline nlohmann::json poly_to_json(const FpPoly& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::uint64_t c : f.coeffs()) coeffs.push_back(std::to_string(c));
    return {{"p", f.modulus()}, {"coeffs", coeffs}};
}

inline IntPoly int_poly_from_json(const nlohmann::json& j) {
    std::vector<mpz_class> c;
    for (const auto& v : j.at("coeffs")) c.emplace_back(v.get<std::string>(), 10);
    return IntPoly(std::move(c));
}

inline FpPoly fp_poly_from_json(const nlohmann::json& j) {
    if (j.at("p").is_null()) fail("domain", "missing modulus in F_p polynomial JSON");
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    std::vector<std::uint64_t> c;
    for (const auto& v : j.at("coeffs")) c.push_back(std::stoull(v.get<std::string>()));
    return FpPoly(p, std::move(c));
}

/// Tap/seed text: binary string most-significant-first for p = 2,
/// comma-separated residues otherwise.
inline std::vector<std::uint64_t> parse_residues(std::string_view text, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    if (text.empty()) fail("syntax", "empty residue string");
    if (p == 2 && text.find(',') == std::string_view::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1')
                detail::syntax_error(i, "expected a binary digit");
            out.push_back(text[i] - '0');
        }
        return out;
    }
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t start = i;
        while (i < text.size() && text[i] != ',') ++i;
        std::string token(text.substr(start, i - start));
        if (token.empty()) detail::syntax_error(start, "expected a residue");
        for (char ch : token)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                detail::syntax_error(start, "expected a decimal residue");
        std::uint64_t v = std::stoull(token);
        if (v >= p) fail("domain", "residue " + token + " out of range for F_" + std::to_string(p));
        out.push_back(v);
        if (i == text.size()) break;
        ++i;  // skip comma
    }
    return out;
}

inline std::string format_residues(const std::vector<std::uint64_t>& r, std::uint64_t p) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (p == 2) {
            out += static_cast<char>('0' + r[i]);
        } else {
            if (i) out += ',';
            out += std::to_string(r[i]);
        }
    }
    return out;
}

}  // namespace cyclokit

#endif
