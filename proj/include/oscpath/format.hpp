#pragma once

#include <cctype>
#include <string>

#include <json.hpp>

#include "oscpath/errors.hpp"
#include "oscpath/numbers.hpp"
#include "oscpath/omega_poly.hpp"
#include "oscpath/problem.hpp"

namespace oscpath {

using Json = nlohmann::json;

/// Canonical one-line rendering with w as the osculation variable:
/// "20 + 8*w + w^2", "-1 + w", "0".  Unit coefficients drop the "1*", the
/// linear term drops the exponent, zero coefficients are skipped.
inline std::string poly_to_text(const OmegaPoly& p) {
    if (p.degree() < 0) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        const Integer& c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Integer mag = neg ? Integer(-c) : c;
        std::string term;
        if (k == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str() + "*";
            term += "w";
            if (k >= 2) term += "^" + std::to_string(k);
        }
        if (out.empty())
            out = (neg ? "-" : "") + term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

/// Coefficients as a JSON object keyed by degree, values as decimal strings:
/// {"0": "20", "1": "8", "2": "1"}.  Zero coefficients are omitted; the zero
/// polynomial maps to {}.
inline Json poly_to_json(const OmegaPoly& p) {
    Json obj = Json::object();
    for (int k = 0; k <= p.degree(); ++k) {
        const Integer& c = p.coeff(k);
        if (c != 0) obj[std::to_string(k)] = c.get_str();
    }
    return obj;
}

/// Inverse of poly_to_json.  Throws ParseError on malformed keys or values.
inline OmegaPoly poly_from_json(const Json& obj) {
    if (!obj.is_object()) throw ParseError("polynomial JSON must be an object");
    OmegaPoly p;
    for (const auto& [key, value] : obj.items()) {
        int degree = 0;
        try {
            std::size_t used = 0;
            degree = std::stoi(key, &used);
            if (used != key.size() || degree < 0) throw ParseError("");
        } catch (...) {
            throw ParseError("polynomial key is not a nonnegative degree: " + key);
        }
        if (!value.is_string()) throw ParseError("polynomial coefficient must be a decimal string");
        const std::string& text = value.get_ref<const std::string&>();
        Integer c;
        if (mpz_set_str(c.get_mpz_t(), text.c_str(), 10) != 0)
            throw ParseError("polynomial coefficient is not a decimal integer: " + text);
        p += OmegaPoly::monomial(c, degree);
    }
    p.normalize();
    return p;
}

/// Full result record for one evaluation, as emitted by the command-line
/// front end in JSON mode.
inline Json result_to_json(const ProblemSpec& spec, const std::string& method, int window,
                           int omega_cap, const OmegaPoly& poly) {
    Json out;
    out["n"] = spec.n();
    out["t"] = spec.t();
    out["y_start"] = spec.y_start();
    out["y_end"] = spec.y_end();
    out["method"] = method;
    out["settings"] = Json{{"window", window}, {"omega_cap", omega_cap}};
    out["poly"] = poly_to_json(poly);
    return out;
}

/// Parse "p", "-p", or "p/q" into an exact rational.  Throws ParseError on
/// anything else, including a zero denominator.
inline Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) throw ParseError("not a rational number: " + text);
    if (num_end != text.size()) {
        if (text[num_end] != '/') throw ParseError("not a rational number: " + text);
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != text.size())
            throw ParseError("not a rational number: " + text);
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("not a rational number: " + text);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

/// Canonical "p" or "p/q" rendering of an exact rational.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace oscpath
