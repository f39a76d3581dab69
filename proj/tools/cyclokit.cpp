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

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclokit/cyclokit.hpp"

namespace {

using nlohmann::json;

bool g_json = false;

void emit(const std::string& text, const json& j) {
    if (g_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

cyclokit::TapVector taps_from_flags(const std::string& taps_text, const std::string& chi_text,
                                    std::uint64_t p) {
    using namespace cyclokit;
    if (!chi_text.empty()) {
        FpPoly chi = parse_fp_poly(chi_text, p);
        if (chi.degree() < 1 || !chi.is_monic())
            fail("domain", "--chi must be a monic polynomial of degree >= 1");
        std::size_t n = static_cast<std::size_t>(chi.degree());
        TapVector t{p, std::vector<std::uint64_t>(n, 0)};
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t c = chi.coeff(n - 1 - i);
            t.taps[i] = p == 2 ? c : (p - c) % p;
        }
        return t;
    }
    if (taps_text.empty()) fail("domain", "one of --taps or --chi is required");
    return cyclokit::TapVector{p, cyclokit::parse_residues(taps_text, p)};
}

std::string factor_line(const cyclokit::FpFactor& f) {
    std::string s = cyclokit::to_string(f.poly);
    if (f.multiplicity > 1) s = "(" + s + ")^" + std::to_string(f.multiplicity);
    return s;
}

json factor_list_json(const cyclokit::FactorList& fl) {
    json factors = json::array();
    for (const auto& f : fl.factors)
        factors.push_back({{"poly", cyclokit::poly_to_json(f.poly)},
                           {"multiplicity", std::to_string(f.multiplicity)}});
    return {{"unit", std::to_string(fl.unit)}, {"factors", factors}};
}

json family_json(const cyclokit::ShapeFamily& fam) {
    json parts = json::object();
    for (const auto& [k, e] : fam.parts) parts[std::to_string(k)] = std::to_string(e);
    std::string constraint = std::to_string(fam.a);
    for (const auto& [k, e] : fam.parts)
        constraint += " + " + std::to_string(e) + "*phi(" + std::to_string(k) + ")";
    constraint += " = " + std::to_string(fam.n);
    return {{"a", std::to_string(fam.a)},
            {"parts", parts},
            {"constraints", json::array({constraint})}};
}

std::string family_text(const cyclokit::ShapeFamily& fam) {
    std::string s;
    if (fam.a > 0) s = fam.a == 1 ? "x" : "x^" + std::to_string(fam.a);
    for (const auto& [k, e] : fam.parts) {
        if (!s.empty()) s += "*";
        s += "Phi_" + std::to_string(k);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace cyclokit;

    CLI::App app{"exact LFSR symmetry, cyclotomic, and root-power-closure toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // let --json appear after the subcommand too
    app.add_flag("--json", g_json, "emit a single JSON document");

    std::uint64_t p = 2, n = 0, degree = 0, limit = 0, count = 0;
    bool composite_only = false;
    std::string seed_text, taps_text, chi_text, poly_text;

    std::vector<std::function<void()>> actions;
    auto run = [&](std::function<void()> fn) {
        return [&actions, fn = std::move(fn)]() { actions.push_back(fn); };
    };

    // lfsr
    auto* lfsr_cmd = app.add_subcommand("lfsr", "linear feedback shift registers");
    lfsr_cmd->require_subcommand(1);
    {
        auto* stream = lfsr_cmd->add_subcommand("stream", "generate s_0..s_{count-1}");
        stream->add_option("--p", p, "field characteristic")->capture_default_str();
        stream->add_option("--chi", chi_text, "characteristic polynomial");
        stream->add_option("--taps", taps_text, "tap vector (p_{n-1}..p_0)");
        stream->add_option("--seed", seed_text, "initial state (s_{n-1}..s_0)")->required();
        stream->add_option("--count", count, "number of symbols")->required();
        stream->callback(run([&] {
            TapVector t = taps_from_flags(taps_text, chi_text, p);
            auto s = lfsr_stream(t, RegisterState{parse_residues(seed_text, p)}, count);
            json js = json::array();
            for (auto v : s) js.push_back(std::to_string(v));
            emit(format_residues(s, p), {{"stream", js}});
        }));

        auto* check = lfsr_cmd->add_subcommand("check-symmetry", "test L = tau L^n tau");
        check->add_option("--p", p, "field characteristic")->capture_default_str();
        check->add_option("--chi", chi_text, "characteristic polynomial");
        check->add_option("--taps", taps_text, "tap vector");
        check->callback(run([&] {
            bool ok = symmetry_check(taps_from_flags(taps_text, chi_text, p));
            emit(ok ? "true" : "false", {{"symmetric", ok}});
        }));

        auto* enumerate = lfsr_cmd->add_subcommand("enumerate-symmetric",
                                                   "all symmetric tap vectors of width n");
        enumerate->add_option("--p", p, "field characteristic")->capture_default_str();
        enumerate->add_option("--n", n, "register width")->required();
        enumerate->callback(run([&] {
            auto found = enumerate_symmetric(n, p);
            std::string text;
            json js = json::array();
            for (const auto& t : found) {
                if (!text.empty()) text += "\n";
                text += format_residues(t.taps, p);
                js.push_back(format_residues(t.taps, p));
            }
            emit(text, {{"symmetric_taps", js}});
        }));

        auto* cp = lfsr_cmd->add_subcommand("char-poly", "characteristic polynomial of L");
        cp->add_option("--p", p, "field characteristic")->capture_default_str();
        cp->add_option("--taps", taps_text, "tap vector")->required();
        cp->callback(run([&] {
            FpPoly chi = char_poly(TapVector{p, parse_residues(taps_text, p)});
            emit(to_string(chi), poly_to_json(chi));
        }));
    }

    // cyclo
    auto* cyclo_cmd = app.add_subcommand("cyclo", "cyclotomic polynomials");
    cyclo_cmd->require_subcommand(1);
    {
        auto* poly = cyclo_cmd->add_subcommand("poly", "Phi_n over Z");
        poly->add_option("--n", n, "cyclotomic index")->required();
        poly->callback(run([&] {
            IntPoly phi = cyclotomic_poly(n);
            emit(to_string(phi), poly_to_json(phi));
        }));

        auto* mod = cyclo_cmd->add_subcommand("mod", "Phi_n reduced modulo p");
        mod->add_option("--n", n, "cyclotomic index")->required();
        mod->add_option("--p", p, "prime modulus")->required();
        mod->callback(run([&] {
            FpPoly phi = cyclotomic_mod_p(n, p);
            emit(to_string(phi), poly_to_json(phi));
        }));

        auto* factor = cyclo_cmd->add_subcommand("factor", "factor Phi_n over F_p");
        factor->add_option("--n", n, "cyclotomic index")->required();
        factor->add_option("--p", p, "prime modulus")->required();
        factor->callback(run([&] {
            FactorList fl = factor_fp(cyclotomic_mod_p(n, p));
            std::string text;
            for (const auto& f : fl.factors) {
                if (!text.empty()) text += "\n";
                text += factor_line(f);
            }
            emit(text, factor_list_json(fl));
        }));

        auto* pattern = cyclo_cmd->add_subcommand("pattern", "predicted factorization shape");
        pattern->add_option("--n", n, "cyclotomic index")->required();
        pattern->add_option("--p", p, "prime modulus")->required();
        pattern->callback(run([&] {
            FactorPattern fp = factor_pattern(n, p);
            std::ostringstream os;
            os << "count=" << fp.count << " degree=" << fp.degree
               << " multiplicity=" << fp.multiplicity;
            emit(os.str(), {{"count", std::to_string(fp.count)},
                            {"degree", std::to_string(fp.degree)},
                            {"multiplicity", std::to_string(fp.multiplicity)}});
        }));
    }

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "root-power-closure classification");
    classify_cmd->require_subcommand(1);
    {
        auto* check = classify_cmd->add_subcommand("check", "test the closure property");
        check->add_option("--poly", poly_text, "polynomial text")->required();
        auto* popt = check->add_option("--p", p, "prime modulus (omit for Q)");
        check->callback(run([&, popt] {
            if (popt->count() > 0) {
                auto v = satisfies_property(parse_fp_poly(poly_text, p));
                json j{{"holds", v.holds}, {"n", std::to_string(v.exponent)}};
                std::string text = v.holds ? "holds" : "fails";
                if (v.witness) {
                    j["witness"] = to_string(*v.witness);
                    text += " witness=" + to_string(*v.witness);
                }
                emit(text, j);
            } else {
                auto v = satisfies_property(parse_int_poly(poly_text));
                json j{{"holds", v.holds}, {"n", std::to_string(v.exponent)}};
                std::string text = v.holds ? "holds" : "fails";
                if (v.witness) {
                    j["witness"] = to_string(*v.witness);
                    text += " witness=" + to_string(*v.witness);
                }
                emit(text, j);
            }
        }));

        auto* irr_q = classify_cmd->add_subcommand(
            "irreducible-q", "cyclotomic indices of the irreducible solutions over Q");
        irr_q->add_option("--degree", degree, "target degree")->required();
        irr_q->callback(run([&] {
            auto ds = classify_irreducible_q(degree);
            std::string text;
            json js = json::array();
            for (auto d : ds) {
                if (!text.empty()) text += " ";
                text += std::to_string(d);
                js.push_back(std::to_string(d));
            }
            emit(text, {{"indices", js}});
        }));

        auto* enum_q = classify_cmd->add_subcommand("enumerate-q",
                                                    "all closed product shapes of degree n");
        enum_q->add_option("--degree", degree, "target degree")->required();
        enum_q->callback(run([&] {
            auto fams = enumerate_q(degree);
            std::string text;
            json js = json::array();
            for (const auto& fam : fams) {
                if (!text.empty()) text += "\n";
                text += family_text(fam);
                js.push_back(family_json(fam));
            }
            emit(text, {{"families", js}});
        }));

        auto* irr_fp = classify_cmd->add_subcommand(
            "irreducible-fp", "irreducible degree-n solutions over F_p");
        irr_fp->add_option("--p", p, "prime modulus")->required();
        irr_fp->add_option("--degree", degree, "target degree")->required();
        irr_fp->callback(run([&] {
            auto polys = classify_irreducible_fp(p, degree);
            std::string text;
            json js = json::array();
            for (const auto& f : polys) {
                if (!text.empty()) text += "\n";
                text += to_string(f);
                js.push_back(poly_to_json(f));
            }
            emit(text, {{"polynomials", js}});
        }));
    }

    // numbers
    auto* numbers_cmd = app.add_subcommand("numbers", "cyclic and Carmichael numbers");
    numbers_cmd->require_subcommand(1);
    {
        auto* cyclic = numbers_cmd->add_subcommand("cyclic", "cyclic numbers below a limit");
        cyclic->add_option("--limit", limit, "upper bound (exclusive)")->required();
        cyclic->add_flag("--composite-only", composite_only, "exclude primes");
        cyclic->callback(run([&] {
            auto records = cyclic_list(limit, composite_only);
            std::ostringstream top, bottom;
            top << "d     ";
            bottom << "phi(d)";
            json js = json::array();
            for (const auto& r : records) {
                std::size_t w = std::max(std::to_string(r.d).size(),
                                         std::to_string(r.phi).size()) + 2;
                top << std::setw(static_cast<int>(w)) << r.d;
                bottom << std::setw(static_cast<int>(w)) << r.phi;
                js.push_back({{"d", std::to_string(r.d)},
                              {"phi", std::to_string(r.phi)},
                              {"prime", r.is_prime}});
            }
            emit(top.str() + "\n" + bottom.str(), {{"records", js}});
        }));

        auto* carmichael = numbers_cmd->add_subcommand("carmichael",
                                                       "Carmichael numbers below a limit");
        carmichael->add_option("--limit", limit, "upper bound (exclusive)")->required();
        carmichael->callback(run([&] {
            auto ms = carmichael_numbers(limit);
            std::string text;
            json js = json::array();
            for (auto m : ms) {
                if (!text.empty()) text += " ";
                text += std::to_string(m);
                js.push_back(std::to_string(m));
            }
            emit(text, {{"carmichael", js}});
        }));

        auto* consecutive = numbers_cmd->add_subcommand(
            "consecutive", "product of the i-th and (i+1)-th primes");
        consecutive->add_option("--n", n, "prime index i >= 2")->required();
        consecutive->callback(run([&] {
            auto r = check_consecutive_prime_product(n);
            emit("d=" + std::to_string(r.d) + " cyclic=" + (r.cyclic ? "true" : "false"),
                 {{"d", std::to_string(r.d)}, {"cyclic", r.cyclic}});
        }));

        auto* michon = numbers_cmd->add_subcommand("michon",
                                                   "bounded search for a Carmichael multiple");
        michon->add_option("--n", n, "odd cyclic number d")->required();
        michon->add_option("--limit", limit, "multiplier bound")->required();
        michon->callback(run([&] {
            auto found = michon_search(n, limit);
            if (found)
                emit(std::to_string(*found), {{"found", std::to_string(*found)}});
            else
                emit("none-found", {{"found", nullptr}});
        }));
    }

    try {
        app.parse(argc, argv);
        for (auto& fn : actions) fn();
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        if (g_json)
            std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "error (" << e.name() << "): " << e.what() << "\n";
        return 1;
    }
    return 0;
}
