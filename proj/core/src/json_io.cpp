#include "perfectoid/json_io.hpp"

#include <json.hpp>

namespace perfectoid {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

ordered_json exp_node(const PExponent& e) {
    return ordered_json{{"num", e.num()}, {"kpow", e.kpow()}};
}

PExponent exp_from(const json& node, std::uint32_t p) {
    try {
        return PExponent(p, node.at("num").get<std::int64_t>(), node.value("kpow", 0u));
    } catch (const json::exception& e) {
        throw ParseError(std::string("exponent: ") + e.what());
    }
}

ordered_json norm_node(const NormValue& v) {
    if (v.is_zero()) return ordered_json{{"zero", true}};
    return ordered_json{{"exp", exp_node(v.exponent())}};
}

NormValue norm_from(const json& node, std::uint32_t p) {
    if (node.contains("zero") && node["zero"].get<bool>()) return NormValue::zero(p);
    if (!node.contains("exp")) throw ParseError("norm value: expected 'zero' or 'exp'");
    return NormValue::pow(exp_from(node["exp"], p));
}

ordered_json charp_node(const CharPSeries& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        ordered_json t = exp_node(e);
        t["coeff"] = c;
        terms.push_back(std::move(t));
    }
    return ordered_json{{"p", f.p()}, {"terms", std::move(terms)}, {"prec", exp_node(f.prec())}};
}

CharPSeries charp_from(const json& node) {
    try {
        std::uint32_t p = node.at("p").get<std::uint32_t>();
        CharPSeries f(p, exp_from(node.at("prec"), p));
        for (const auto& t : node.at("terms"))
            f = f + CharPSeries::monomial(p, exp_from(t, p), t.at("coeff").get<std::uint32_t>(), f.prec());
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("series: ") + e.what());
    }
}

ordered_json untilt_node(const UntiltElement& x) {
    ordered_json digits = ordered_json::array();
    for (const auto& d : x.digits()) digits.push_back(charp_node(d));
    ordered_json out{{"digits", std::move(digits)}, {"n", x.n()}, {"N", exp_node(x.t_prec())}};
    if (x.padic_prec() < PExponent::integer(x.p(), x.n())) out["padicPrec"] = exp_node(x.padic_prec());
    return out;
}

UntiltElement untilt_from(const json& node) {
    try {
        std::uint32_t n = node.at("n").get<std::uint32_t>();
        std::vector<CharPSeries> digits;
        for (const auto& d : node.at("digits")) digits.push_back(charp_from(d));
        if (digits.empty()) throw ParseError("untilt element needs at least one digit");
        std::uint32_t p = digits.front().p();
        PExponent N = exp_from(node.at("N"), p);
        PExponent prec = node.contains("padicPrec") ? exp_from(node.at("padicPrec"), p)
                                                    : PExponent::integer(p, n);
        return UntiltElement(p, n, N, std::move(digits), prec);
    } catch (const json::exception& e) {
        throw ParseError(std::string("untilt: ") + e.what());
    }
}

ordered_json fraction_node(const UntiltFraction& x) {
    return ordered_json{{"num", untilt_node(x.numerator())}, {"denomPow", x.denom_pow()}};
}

UntiltFraction fraction_from(const json& node) {
    try {
        return UntiltFraction(untilt_from(node.at("num")), node.value("denomPow", 0u));
    } catch (const json::exception& e) {
        throw ParseError(std::string("fraction: ") + e.what());
    }
}

} // namespace

std::string pexponent_to_json(const PExponent& e) { return exp_node(e).dump(); }
PExponent pexponent_from_json(const std::string& text, std::uint32_t p) {
    return exp_from(parse(text, "exponent"), p);
}

std::string norm_value_to_json(const NormValue& v) { return norm_node(v).dump(); }
NormValue norm_value_from_json(const std::string& text, std::uint32_t p) {
    return norm_from(parse(text, "norm value"), p);
}

std::string charp_to_json(const CharPSeries& f) { return charp_node(f).dump(); }
CharPSeries charp_from_json(const std::string& text) { return charp_from(parse(text, "series")); }

std::string untilt_to_json(const UntiltElement& x) { return untilt_node(x).dump(); }
UntiltElement untilt_from_json(const std::string& text) { return untilt_from(parse(text, "untilt")); }

std::string fraction_to_json(const UntiltFraction& x) { return fraction_node(x).dump(); }
UntiltFraction fraction_from_json(const std::string& text) { return fraction_from(parse(text, "fraction")); }

std::string ideal_to_json(const MonomialIdeal& I) {
    if (I.is_zero()) return ordered_json{{"kind", "zero"}, {"d", I.d()}}.dump();
    if (I.bounds().size() == 1) {
        const auto& [var, b] = *I.bounds().begin();
        if (b.type == MonomialIdeal::BoundType::principal)
            return ordered_json{{"kind", "principal"}, {"var", var}, {"bound", exp_node(b.a)}, {"d", I.d()}}
                .dump();
        return ordered_json{{"kind", "augmentation"}, {"var", var}, {"d", I.d()}}.dump();
    }
    ordered_json bounds = ordered_json::array();
    for (const auto& [var, b] : I.bounds()) {
        if (b.type == MonomialIdeal::BoundType::principal)
            bounds.push_back(ordered_json{{"kind", "principal"}, {"var", var}, {"bound", exp_node(b.a)}});
        else
            bounds.push_back(ordered_json{{"kind", "augmentation"}, {"var", var}});
    }
    return ordered_json{{"kind", "bounds"}, {"bounds", std::move(bounds)}, {"d", I.d()}}.dump();
}

MonomialIdeal ideal_from_json(const std::string& text, std::uint32_t p) {
    json node = parse(text, "ideal");
    try {
        std::string kind = node.at("kind").get<std::string>();
        std::uint32_t d = node.value("d", 1u);
        if (kind == "zero") return MonomialIdeal::zero_ideal(p, d);
        if (kind == "principal") {
            std::uint32_t var = node.value("var", 0u);
            return MonomialIdeal::principal(p, d, var, exp_from(node.at("bound"), p));
        }
        if (kind == "augmentation") {
            std::uint32_t var = node.value("var", 0u);
            return MonomialIdeal::augmentation(p, d, var);
        }
        if (kind == "bounds") {
            std::map<std::uint32_t, MonomialIdeal::VarBound> bounds;
            for (const auto& b : node.at("bounds")) {
                std::uint32_t var = b.value("var", 0u);
                if (b.at("kind").get<std::string>() == "principal")
                    bounds.emplace(var, MonomialIdeal::VarBound{MonomialIdeal::BoundType::principal,
                                                                exp_from(b.at("bound"), p)});
                else
                    bounds.emplace(var, MonomialIdeal::VarBound{MonomialIdeal::BoundType::augmentation,
                                                                PExponent::zero(p)});
            }
            return MonomialIdeal::with_bounds(p, d, std::move(bounds));
        }
        throw ParseError("ideal: unknown kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("ideal: ") + e.what());
    }
}

std::string gauss_to_json(const GaussElement& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        ordered_json exps = ordered_json::array();
        for (const auto& x : e) exps.push_back(exp_node(x));
        ordered_json t{{"exps", std::move(exps)}};
        if (f.side() == CoefSide::charp)
            t["coeff"] = charp_node(c.as_charp());
        else
            t["coeff"] = fraction_node(c.as_untilt());
        terms.push_back(std::move(t));
    }
    return ordered_json{{"coef", to_string(f.side())},
                        {"d", f.d()},
                        {"p", f.p()},
                        {"n", f.witt_len()},
                        {"prec", exp_node(f.t_prec())},
                        {"terms", std::move(terms)}}
        .dump();
}

GaussElement gauss_from_json(const std::string& text) {
    json node = parse(text, "gauss element");
    try {
        std::string coef = node.at("coef").get<std::string>();
        CoefSide side = coef == "charp" ? CoefSide::charp : CoefSide::untilt;
        if (coef != "charp" && coef != "untilt") throw ParseError("gauss element: coef must be charp|untilt");
        std::uint32_t d = node.at("d").get<std::uint32_t>();
        std::uint32_t p = node.at("p").get<std::uint32_t>();
        std::uint32_t n = node.value("n", 1u);
        PExponent prec = exp_from(node.at("prec"), p);
        GaussElement f(side, p, d, n, prec);
        for (const auto& t : node.at("terms")) {
            MultiExp e;
            for (const auto& x : t.at("exps")) e.push_back(exp_from(x, p));
            FieldElem c = side == CoefSide::charp ? FieldElem(charp_from(t.at("coeff")))
                                                  : FieldElem(fraction_from(t.at("coeff")));
            f.add_term(e, c);
        }
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("gauss element: ") + e.what());
    }
}

} // namespace perfectoid
