#include "gencyc/report.hpp"

#include <optional>

namespace gencyc {

namespace {

/// Ambient representative of a positive-degree smooth factor; nullopt for constants.
std::optional<RingElement> factor_lift(const Scenario& s, const Component& c) {
    if (c.coeff.max_degree() <= 0)
        return std::nullopt;
    if (s.space().support(c.support).is_full())
        return c.coeff;
    const auto gammas = s.engine.lifts(c.support, c.coeff);
    if (gammas.empty())
        throw StructuralError("no ambient lift for " + c.coeff.to_string() + " on " + c.support);
    return gammas.front();
}

} // namespace

std::string decimal(const Integer& v) { return v.str(); }

std::string class_text(const Scenario& s, const GCycleClass& mu) {
    if (mu.empty())
        return "0";
    std::string out;
    for (const auto& c : mu.components()) {
        std::optional<RingElement> gamma = factor_lift(s, c);
        Integer coeff = 1;
        std::string body = c.support;
        if (!gamma) {
            coeff = c.coeff.constant_term();
        } else {
            if (gamma->terms().begin()->second < 0) {
                gamma = -*gamma;
                coeff = -1;
            }
            body = "wedge(" + gamma->to_string() + ", " + c.support + ")";
        }
        const bool negative = coeff < 0;
        const Integer mag = negative ? Integer(-coeff) : coeff;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += decimal(mag) + "*";
        out += body;
    }
    return out;
}

nlohmann::json multiplicities_json(const MultMap& m) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [dim, v] : m)
        out[std::to_string(dim)] = decimal(v);
    return out;
}

nlohmann::json class_json(const Scenario& s, const GCycleClass& mu) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& c : mu.components()) {
        nlohmann::json coeff = nlohmann::json::object();
        const RingDescriptor& ring = *c.coeff.ring();
        for (const auto& [m, v] : c.coeff.terms())
            coeff[monomial_to_string(ring, m)] = decimal(v);
        components.push_back({{"support", c.support}, {"dim", c.dim}, {"coeff", coeff}});
    }
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& p : s.space().points())
        mult[p] = multiplicities_json(mult_at(s.space(), mu, p));
    return {
        {"ambient", mu.ambient()},
        {"text", class_text(s, mu)},
        {"components", components},
        {"degree", decimal(deg_L(s.space(), mu))},
        {"multiplicities", mult},
        {"effective", is_effective(mu)},
    };
}

nlohmann::json trace_json(const Trace& trace) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : trace)
        out.push_back({{"rule", t.rule}, {"formula", t.formula}, {"detail", t.detail}});
    return out;
}

std::string value_text(const Scenario& s, const Value& v) {
    if (const auto* mu = std::get_if<GCycleClass>(&v))
        return class_text(s, *mu);
    if (const auto* n = std::get_if<Integer>(&v))
        return decimal(*n);
    std::string out = "{";
    for (const auto& [dim, m] : std::get<MultMap>(v)) {
        if (out.size() > 1)
            out += ", ";
        out += std::to_string(dim) + ": " + decimal(m);
    }
    return out + "}";
}

nlohmann::json value_json(const Scenario& s, const Value& v) {
    if (const auto* mu = std::get_if<GCycleClass>(&v))
        return {{"type", "class"}, {"value", class_json(s, *mu)}};
    if (const auto* n = std::get_if<Integer>(&v))
        return {{"type", "integer"}, {"value", decimal(*n)}};
    const MultMap& m = std::get<MultMap>(v);
    return {{"type", "multiplicities"}, {"value", multiplicities_json(m)}, {"total", decimal(total(m))}};
}

} // namespace gencyc
