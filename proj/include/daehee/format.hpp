/**
 * @file format.hpp
 * @brief Text, LaTeX, JSON and CSV rendering of rationals, polynomials,
 * triangles and coefficient lists.
 *
 * Rationals are always written as "p/q" or "p"; nothing is ever rounded.
 */
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "errors.hpp"
#include "poly.hpp"
#include "rat.hpp"

namespace daehee {

namespace detail {

inline std::string power_suffix(int i, bool latex) {
    if (i == 0) return "";
    if (i == 1) return "x";
    const std::string e = std::to_string(i);
    if (latex && e.size() > 1) return "x^{" + e + "}";
    return "x^" + e;
}

inline std::string magnitude(const Rat& a, int power, bool latex) {
    const bool unit = a == Rat(1) && power > 0;
    std::string coeff;
    if (!unit) {
        if (a.is_integer()) {
            coeff = a.to_string();
        } else if (latex) {
            coeff = "\\tfrac{" + a.num().get_str() + "}{" + a.den().get_str() + "}";
        } else {
            coeff = power > 0 ? "(" + a.to_string() + ")" : a.to_string();
        }
    }
    return coeff + power_suffix(power, latex);
}

inline std::string render_terms(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += magnitude(negative ? -c : c, i, latex);
    }
    return out;
}

}  // namespace detail

/// "x^3 - (9/2)x^2 + (11/2)x - 3/2"
inline std::string to_plain(const Poly& p) { return detail::render_terms(p, false); }

/// "x^3 - \tfrac{9}{2}x^2 + \tfrac{11}{2}x - \tfrac{3}{2}"
inline std::string to_latex(const Poly& p) { return detail::render_terms(p, true); }

inline std::string to_latex(const Rat& v) {
    if (v.is_integer()) return v.to_string();
    const std::string body = "\\tfrac{" + BigInt(abs(v.num())).get_str() + "}{" + v.den().get_str() + "}";
    return v.sign() < 0 ? "-" + body : body;
}

inline nlohmann::ordered_json poly_to_json(const Poly& p) {
    nlohmann::ordered_json j;
    j["var"] = "x";
    j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs()) j["coeffs"].push_back(c.to_string());
    return j;
}

/// Inverse of poly_to_json. Throws domain_error on malformed input.
inline Poly poly_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw domain_error("polynomial JSON needs a \"coeffs\" array");
    if (j.contains("var") && j["var"] != "x") throw domain_error("polynomial JSON must use the variable x");
    std::vector<Rat> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw domain_error("polynomial coefficients must be strings");
        coeffs.push_back(Rat::parse(c.get<std::string>()));
    }
    return Poly(std::move(coeffs));
}

inline Poly poly_from_json(const std::string& text) {
    try {
        return poly_from_json(nlohmann::ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("invalid polynomial JSON: ") + e.what());
    }
}

inline nlohmann::ordered_json rats_to_json(const std::vector<Rat>& values) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& v : values) j.push_back(v.to_string());
    return j;
}

using IntRows = std::vector<std::vector<BigInt>>;

inline std::string rows_to_csv(const IntRows& rows) {
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].get_str();
        os << '\n';
    }
    return os.str();
}

inline std::string rows_to_plain(const IntRows& rows) {
    std::ostringstream os;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i].get_str();
        os << '\n';
    }
    return os.str();
}

inline nlohmann::ordered_json rows_to_json(const IntRows& rows) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        j.push_back(std::move(r));
    }
    return j;
}

}  // namespace daehee
