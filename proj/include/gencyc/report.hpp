#pragma once

#include "gencyc/scenario.hpp"

#include <json.hpp>

#include <string>

namespace gencyc {

/// Decimal string; integers never travel as JSON numbers.
std::string decimal(const Integer& v);

/// Expression text for mu that parses back to mu in the scenario. Smooth factors on proper
/// supports are written through an ambient lift: wedge(gamma, S).
std::string class_text(const Scenario& scenario, const GCycleClass& mu);
std::string value_text(const Scenario& scenario, const Value& v);

nlohmann::json class_json(const Scenario& scenario, const GCycleClass& mu);
nlohmann::json multiplicities_json(const MultMap& m);
nlohmann::json trace_json(const Trace& trace);
nlohmann::json value_json(const Scenario& scenario, const Value& v);

} // namespace gencyc
