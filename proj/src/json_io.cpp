#include "lforge/json_io.hpp"

#include <cctype>

#include "lforge/errors.hpp"
#include "lforge/satake.hpp"

namespace lforge {

namespace {

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InputError("expected a rational as \"p/q\" string or integer, got: " + j.dump());
}

bool looks_like_symbol(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (const char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

// A Satake entry: rational string, integer, or a symbol name.
LaurentPoly mono_from_json(const nlohmann::json& j, const std::string& what) {
    if (j.is_number_integer()) return LaurentPoly::constant(Rational(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (looks_like_symbol(s)) return LaurentPoly::symbol(s);
        try {
            return LaurentPoly::constant(rational_from_string(s));
        } catch (const InputError&) {
            throw InputError(what + ": expected a rational \"p/q\" or a symbol name, got \"" +
                             s + "\"");
        }
    }
    throw InputError(what + ": expected a rational or symbol, got: " + j.dump());
}

nlohmann::json mono_to_json(const LaurentPoly& p) {
    if (p.is_constant()) return rational_to_string(p.constant_value());
    const LaurentPoly pruned = p.pruned();
    if (pruned.is_monomial() && pruned.vars().size() == 1 &&
        pruned.terms().begin()->second == 1 && pruned.terms().begin()->first[0] == 1)
        return pruned.vars()[0];
    return p.str();
}

} // namespace

nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    const std::size_t width = p.vars().size();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json exp = nlohmann::json::array();
        for (std::size_t i = 0; i < width; ++i) exp.push_back(e[i]);
        terms.push_back({{"exp", std::move(exp)}, {"coef", rational_to_string(c)}});
    }
    return {{"vars", p.vars()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw InputError("polynomial JSON needs \"vars\" and \"terms\"");
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) {
        if (!v.is_string()) throw InputError("polynomial variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::vector<int>, Rational>> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            throw InputError("polynomial term needs \"exp\" and \"coef\"");
        std::vector<int> exp;
        for (const auto& e : t.at("exp")) {
            if (!e.is_number_integer()) throw InputError("exponents must be integers");
            exp.push_back(e.get<int>());
        }
        terms.emplace_back(std::move(exp), rational_from_json(t.at("coef")));
    }
    return LaurentPoly::from_terms(vars, terms);
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [k, p] : s.coefficients())
        coeffs.push_back({{"deg", {k.first, k.second}}, {"poly", poly_to_json(p)}});
    return {{"deformation_vars", s.deformation_vars()},
            {"bounds", {s.bounds().first, s.bounds().second}},
            {"coefficients", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("deformation_vars") || !j.contains("bounds") ||
        !j.contains("coefficients"))
        throw InputError("series JSON needs \"deformation_vars\", \"bounds\", \"coefficients\"");
    std::vector<std::string> vars = j.at("deformation_vars").get<std::vector<std::string>>();
    const auto& b = j.at("bounds");
    if (!b.is_array() || b.size() != 2) throw InputError("series bounds must be a pair");
    TruncatedSeries s(std::move(vars), {b.at(0).get<int>(), b.at(1).get<int>()});
    for (const auto& c : j.at("coefficients")) {
        const auto& d = c.at("deg");
        if (!d.is_array() || d.size() != 2) throw InputError("series degree must be a pair");
        s.set_coeff(d.at(0).get<int>(), d.at(1).get<int>(), poly_from_json(c.at("poly")));
    }
    return s;
}

nlohmann::json satake_to_json(const SatakeData& s) {
    nlohmann::json j = nlohmann::json::object();
    if (s.gl4) {
        j["gl4"] = {{"alpha",
                     {mono_to_json(s.gl4->alpha[0]), mono_to_json(s.gl4->alpha[1]),
                      mono_to_json(s.gl4->alpha[2]), mono_to_json(s.gl4->alpha[3])}},
                    {"chi", mono_to_json(s.gl4->chi)}};
    }
    if (s.gl2) {
        j["gl2"] = {{"beta", {mono_to_json(s.gl2->beta[0]), mono_to_json(s.gl2->beta[1])}}};
    }
    if (s.gsp4) {
        j["gsp4"] = {{"c0", mono_to_json(s.gsp4->c0)},
                     {"c1", mono_to_json(s.gsp4->c1)},
                     {"c2", mono_to_json(s.gsp4->c2)}};
    }
    return j;
}

SatakeData satake_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("Satake JSON must be an object");
    SatakeData out;
    if (j.contains("gl4")) {
        const auto& g = j.at("gl4");
        if (!g.is_object() || !g.contains("alpha") || !g.at("alpha").is_array() ||
            g.at("alpha").size() != 4)
            throw InputError("\"gl4\" needs an \"alpha\" array of four entries");
        SatakeGL4 s;
        for (int i = 0; i < 4; ++i)
            s.alpha[static_cast<std::size_t>(i)] =
                mono_from_json(g.at("alpha").at(i), "alpha" + std::to_string(i + 1));
        s.chi = g.contains("chi") ? mono_from_json(g.at("chi"), "chi") : LaurentPoly::one();
        s.validate();
        out.gl4 = std::move(s);
    }
    if (j.contains("gl2")) {
        const auto& g = j.at("gl2");
        if (!g.is_object() || !g.contains("beta") || !g.at("beta").is_array() ||
            g.at("beta").size() != 2)
            throw InputError("\"gl2\" needs a \"beta\" array of two entries");
        SatakeGL2 s;
        s.beta[0] = mono_from_json(g.at("beta").at(0), "beta1");
        s.beta[1] = mono_from_json(g.at("beta").at(1), "beta2");
        s.validate();
        out.gl2 = std::move(s);
    }
    if (j.contains("gsp4")) {
        const auto& g = j.at("gsp4");
        if (!g.is_object() || !g.contains("c0") || !g.contains("c1") || !g.contains("c2"))
            throw InputError("\"gsp4\" needs \"c0\", \"c1\", \"c2\"");
        SatakeGSp4 s;
        s.c0 = mono_from_json(g.at("c0"), "c0");
        s.c1 = mono_from_json(g.at("c1"), "c1");
        s.c2 = mono_from_json(g.at("c2"), "c2");
        s.validate();
        out.gsp4 = std::move(s);
    }
    if (!out.gl4 && !out.gl2 && !out.gsp4)
        throw InputError("Satake JSON needs at least one of \"gl4\", \"gl2\", \"gsp4\"");
    return out;
}

} // namespace lforge
