#pragma once

// Text and JSON formats.
//
// ASM text format: a line "n", then n lines of n space-separated integers.
// ASM JSON: {"n": int, "entries": [[int]]}.
// Permutations: one-line notation "4312" (digits) or "10,2,1,..." when n > 9.

#include <cctype>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "asm.hpp"
#include "error.hpp"
#include "poly.hpp"
#include "symbolic.hpp"

namespace asmg {

struct ParseError : Error {
    explicit ParseError(const std::string &detail) : Error("ParseError", detail) {}
};

// Reads "n" followed by n*n integers. Throws ParseError on malformed input
// and InvalidAsm when the matrix violates an axiom.
inline std::vector<std::vector<int>> read_matrix_text(std::istream &in)
{
    int n = 0;
    if (!(in >> n) || n < 1) throw ParseError("expected a positive size on the first line");
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> rows[i][j])) throw ParseError("expected " + std::to_string(n * n) + " integer entries");
    return rows;
}

inline Asm parse_asm_text(const std::string &text)
{
    std::istringstream in(text);
    return Asm::from_rows(read_matrix_text(in));
}

inline std::string format_asm_text(const Asm &a)
{
    std::ostringstream out;
    out << a.size() << "\n";
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) out << (j > 1 ? " " : "") << a(i, j);
        out << "\n";
    }
    return out.str();
}

inline Permutation parse_permutation(const std::string &text)
{
    std::vector<int> images;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        std::string part;
        while (std::getline(in, part, ',')) {
            try {
                images.push_back(std::stoi(part));
            } catch (const std::exception &) {
                throw ParseError("bad permutation entry '" + part + "'");
            }
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad permutation '" + text + "'");
            images.push_back(c - '0');
        }
    }
    if (images.empty()) throw ParseError("empty permutation");
    return Permutation(std::move(images));
}

inline nlohmann::json asm_to_json(const Asm &a)
{
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 1; i <= a.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= a.size(); ++j) row.push_back(a(i, j));
        entries.push_back(std::move(row));
    }
    return {{"n", a.size()}, {"entries", std::move(entries)}};
}

inline Asm asm_from_json(const nlohmann::json &j)
{
    try {
        const int n = j.at("n").get<int>();
        auto rows = j.at("entries").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(rows.size()) != n) throw ParseError("\"n\" does not match the number of rows");
        return Asm::from_rows(rows);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(e.what());
    }
}

inline std::string cell_key(const Cell &c) { return "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")"; }

inline Cell parse_cell_key(const std::string &key)
{
    int i = 0, j = 0;
    char open = 0, comma = 0, close = 0;
    std::istringstream in(key);
    if (!(in >> open >> i >> comma >> j >> close) || open != '(' || comma != ',' || close != ')') {
        throw ParseError("bad cell key '" + key + "'");
    }
    return {i, j};
}

inline nlohmann::json exponents_to_json(const LaurentMonomial &m)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto &[cell, e] : m.exponents()) out[cell_key(cell)] = e;
    return out;
}

inline LaurentMonomial exponents_from_json(const nlohmann::json &j)
{
    LaurentMonomial m;
    for (const auto &[key, value] : j.items()) m.multiply_variable(parse_cell_key(key), value.get<int>());
    return m;
}

// {"endpoints": [asm, asm], "beta": [int, int], "steps": [{"prefix": {"(i,j)": e},
//  "divisor": {...}, "minor": {"rows": [i, j], "cols": [k, l]}}]}
inline nlohmann::json certificate_to_json(const SflCertificate &c)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const auto &s : c.steps) {
        steps.push_back({{"prefix", exponents_to_json(s.prefix)},
                         {"divisor", exponents_to_json(s.divisor)},
                         {"minor", {{"rows", s.minor.rows}, {"cols", s.minor.cols}}}});
    }
    return {{"endpoints", {asm_to_json(c.lower), asm_to_json(c.upper)}},
            {"beta", {c.beta_lower, c.beta_upper}},
            {"steps", std::move(steps)}};
}

inline SflCertificate certificate_from_json(const nlohmann::json &j)
{
    try {
        SflCertificate c{asm_from_json(j.at("endpoints").at(0)), asm_from_json(j.at("endpoints").at(1)),
                         j.at("beta").at(0).get<int>(), j.at("beta").at(1).get<int>(), {}};
        for (const auto &s : j.at("steps")) {
            c.steps.push_back(SflStep{exponents_from_json(s.at("prefix")), exponents_from_json(s.at("divisor")),
                                      MinorRef{s.at("minor").at("rows").get<std::vector<int>>(),
                                               s.at("minor").at("cols").get<std::vector<int>>()}});
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(e.what());
    }
}

inline std::string exponent_key(long twice_exponent)
{
    if (twice_exponent % 2 == 0) return std::to_string(twice_exponent / 2);
    return std::to_string(twice_exponent) + "/2";
}

// {"n": n, "coeffs": {"0": 1, "1": -3, ...}} in ascending exponent order.
inline nlohmann::ordered_json poly_to_json(int n, const IntQPoly &p)
{
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto &[e, c] : p.terms()) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
            coeffs[exponent_key(e)] = static_cast<long long>(c);
        } else {
            coeffs[exponent_key(e)] = c.str();
        }
    }
    return {{"n", n}, {"coeffs", std::move(coeffs)}};
}

} // namespace asmg
