#pragma once

#include "gencyc/engine.hpp"
#include "gencyc/expr.hpp"
#include "gencyc/gcycle.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace gencyc {

inline constexpr const char* kScenarioSchema = "gencyc.scenario/1";

/// Malformed scenario document: bad schema, dangling reference, rejected axiom.
class ScenarioError : public Error {
public:
    using Error::Error;
};

struct Expectation {
    std::string expr;
    nlohmann::json equals; // class expression, integer, or {dim: multiplicity}
};

/// A frozen, validated scenario: the space, admitted axioms, named classes and golden values.
struct Scenario {
    std::string name;
    std::map<std::string, Integer> variables;
    ProductEngine engine;
    std::map<std::string, GCycleClass> classes;
    std::vector<Expectation> expectations;
    nlohmann::json source;

    const Space& space() const noexcept { return engine.space(); }
};

Scenario load_scenario(const nlohmann::json& doc);
Scenario load_scenario_file(const std::string& path);

using Value = std::variant<GCycleClass, Integer, MultMap>;

Value evaluate(const Expr& e, const Scenario& scenario, Trace* trace = nullptr);
Value evaluate(const std::string& text, const Scenario& scenario, Trace* trace = nullptr);
GCycleClass evaluate_class(const Expr& e, const Scenario& scenario, Trace* trace = nullptr);
Integer evaluate_integer(const Expr& e, const std::map<std::string, Integer>& variables);
/// Polynomial in generator names, "wL" (polarization), "cTY" (total Chern class) and scenario variables.
RingElement evaluate_polynomial(const Expr& e, const Ambient& ambient,
                                const std::map<std::string, Integer>& variables = {});

struct ExpectationResult {
    Expectation expectation;
    bool passed = false;
    std::string actual;
    std::string expected;
    std::string error;
};

std::vector<ExpectationResult> check_expectations(const Scenario& scenario);

} // namespace gencyc
