#include "gencyc/scenario.hpp"

#include "gencyc/report.hpp"

#include <fstream>

namespace gencyc {

namespace {

std::string where(const Expr& e) { return std::to_string(e.line) + ":" + std::to_string(e.column) + ": "; }

Integer json_integer(const nlohmann::json& j, const std::map<std::string, Integer>& vars, const std::string& what) {
    if (j.is_number_integer())
        return Integer(j.get<long long>());
    if (j.is_string()) {
        try {
            return evaluate_integer(parse_arith(j.get<std::string>()), vars);
        } catch (const Error& e) {
            throw ScenarioError(what + ": " + e.what());
        }
    }
    throw ScenarioError(what + ": expected an integer or a decimal string");
}

int small_int(const nlohmann::json& j, const std::map<std::string, Integer>& vars, const std::string& what) {
    const Integer v = json_integer(j, vars, what);
    if (v < -1000000 || v > 1000000)
        throw ScenarioError(what + ": value out of range");
    return static_cast<int>(v);
}

const nlohmann::json& field(const nlohmann::json& obj, const char* key, const std::string& what) {
    if (!obj.is_object() || !obj.contains(key))
        throw ScenarioError(what + ": missing field '" + key + "'");
    return obj.at(key);
}

std::string string_field(const nlohmann::json& obj, const char* key, const std::string& what) {
    const auto& v = field(obj, key, what);
    if (!v.is_string())
        throw ScenarioError(what + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

Ambient load_ambient(const nlohmann::json& j, const std::map<std::string, Integer>& vars) {
    const std::string type = string_field(j, "type", "ambient");
    if (type == "projective")
        return make_projective(small_int(field(j, "n", "ambient"), vars, "ambient.n"));
    if (type == "biprojective")
        return make_biprojective(small_int(field(j, "m", "ambient"), vars, "ambient.m"),
                                 small_int(field(j, "n", "ambient"), vars, "ambient.n"));
    if (type == "blowup_p2")
        return make_blowup_p2(j.contains("embed_dim") ? small_int(j.at("embed_dim"), vars, "ambient.embed_dim") : 5);
    throw ScenarioError("ambient: unknown type '" + type + "' (expected projective, biprojective or blowup_p2)");
}

bool equal_values(const Value& a, const Value& b) {
    if (a.index() != b.index())
        return false;
    if (const auto* m = std::get_if<MultMap>(&a))
        return same_multiplicities(*m, std::get<MultMap>(b));
    return a == b;
}

} // namespace

Integer evaluate_integer(const Expr& e, const std::map<std::string, Integer>& variables) {
    switch (e.kind) {
    case Expr::Kind::Int:
        return e.value;
    case Expr::Kind::Ref: {
        auto it = variables.find(e.name);
        if (it == variables.end())
            throw ArgumentError(where(e) + "unknown variable '" + e.name + "'");
        return it->second;
    }
    case Expr::Kind::Neg:
        return -evaluate_integer(e.args[0], variables);
    case Expr::Kind::Add:
        return evaluate_integer(e.args[0], variables) + evaluate_integer(e.args[1], variables);
    case Expr::Kind::Sub:
        return evaluate_integer(e.args[0], variables) - evaluate_integer(e.args[1], variables);
    case Expr::Kind::Mul:
        return evaluate_integer(e.args[0], variables) * evaluate_integer(e.args[1], variables);
    case Expr::Kind::Pow: {
        if (e.value < 0 || e.value > 4096)
            throw ArgumentError(where(e) + "integer exponent must lie in [0, 4096]");
        return boost::multiprecision::pow(evaluate_integer(e.args[0], variables), static_cast<unsigned>(e.value));
    }
    default:
        throw ArgumentError(where(e) + "expected an integer expression");
    }
}

RingElement evaluate_polynomial(const Expr& e, const Ambient& ambient, const std::map<std::string, Integer>& variables) {
    switch (e.kind) {
    case Expr::Kind::Int:
        return RingElement::constant(ambient.ring, e.value);
    case Expr::Kind::Ref:
        if (ambient.ring->has(e.name))
            return ambient.generator(e.name);
        if (e.name == "wL")
            return ambient.polarization;
        if (e.name == "cTY")
            return ambient.chern;
        if (auto it = variables.find(e.name); it != variables.end())
            return RingElement::constant(ambient.ring, it->second);
        throw ArgumentError(where(e) + "unknown generator '" + e.name + "' on " + ambient.id);
    case Expr::Kind::Neg:
        return -evaluate_polynomial(e.args[0], ambient, variables);
    case Expr::Kind::Add:
        return evaluate_polynomial(e.args[0], ambient, variables) + evaluate_polynomial(e.args[1], ambient, variables);
    case Expr::Kind::Sub:
        return evaluate_polynomial(e.args[0], ambient, variables) - evaluate_polynomial(e.args[1], ambient, variables);
    case Expr::Kind::Mul:
        return evaluate_polynomial(e.args[0], ambient, variables) * evaluate_polynomial(e.args[1], ambient, variables);
    case Expr::Kind::Pow: {
        if (e.value < -4096 || e.value > 4096)
            throw ArgumentError(where(e) + "exponent out of range");
        try {
            return evaluate_polynomial(e.args[0], ambient, variables).pow(static_cast<long long>(e.value));
        } catch (const InversionError& err) {
            throw InversionError(where(e) + err.what());
        }
    }
    default:
        throw ArgumentError(where(e) + "expected a polynomial in the ambient generators");
    }
}

GCycleClass evaluate_class(const Expr& e, const Scenario& s, Trace* trace) {
    const Space& space = s.space();
    switch (e.kind) {
    case Expr::Kind::Int:
        if (e.value != 0)
            throw ArgumentError(where(e) + "an integer is not a class; write k*X");
        return GCycleClass(space.ambient().id);
    case Expr::Kind::Ref: {
        if (auto it = s.classes.find(e.name); it != s.classes.end())
            return it->second;
        if (space.has_support(e.name))
            return fundamental(space, e.name);
        throw ArgumentError(where(e) + "unknown identifier '" + e.name + "'");
    }
    case Expr::Kind::Neg:
        return Integer(-1) * evaluate_class(e.args[0], s, trace);
    case Expr::Kind::Add:
        return evaluate_class(e.args[0], s, trace) + evaluate_class(e.args[1], s, trace);
    case Expr::Kind::Sub:
        return evaluate_class(e.args[0], s, trace) - evaluate_class(e.args[1], s, trace);
    case Expr::Kind::Scale:
        return evaluate_integer(e.args[0], s.variables) * evaluate_class(e.args[1], s, trace);
    case Expr::Kind::Diamond:
    case Expr::Kind::BulletL: {
        const GCycleClass lhs = evaluate_class(e.args[0], s, trace);
        const GCycleClass rhs = evaluate_class(e.args[1], s, trace);
        const ProductKind kind = e.kind == Expr::Kind::Diamond ? ProductKind::Diamond : ProductKind::BulletL;
        return s.engine.product(kind, lhs, rhs, trace);
    }
    case Expr::Kind::Wedge:
        return wedge(space, evaluate_polynomial(e.args[0], space.ambient(), s.variables),
                     evaluate_class(e.args[1], s, trace));
    case Expr::Kind::DimPart:
        if (e.value < 0 || e.value > space.ambient().dim)
            throw ArgumentError(where(e) + "dimension out of range");
        return dim_part(evaluate_class(e.args[0], s, trace), static_cast<int>(e.value));
    case Expr::Kind::Deg:
    case Expr::Kind::Mult:
        throw ArgumentError(where(e) + "deg(...) and mult(...) yield numbers, not classes");
    default:
        throw ArgumentError(where(e) + "expected a class expression");
    }
}

Value evaluate(const Expr& e, const Scenario& s, Trace* trace) {
    if (e.kind == Expr::Kind::Deg)
        return deg_L(s.space(), evaluate_class(e.args[0], s, trace));
    if (e.kind == Expr::Kind::Mult) {
        if (!s.space().has_point(e.name))
            throw ArgumentError(where(e) + "unknown marked point '" + e.name + "'");
        return mult_at(s.space(), evaluate_class(e.args[0], s, trace), e.name);
    }
    return evaluate_class(e, s, trace);
}

Value evaluate(const std::string& text, const Scenario& s, Trace* trace) { return evaluate(parse(text), s, trace); }

Scenario load_scenario(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw ScenarioError("scenario must be a JSON object");
    if (!doc.contains("schema") || doc.at("schema") != kScenarioSchema)
        throw ScenarioError(std::string("scenario: schema must be \"") + kScenarioSchema + "\"");

    std::map<std::string, Integer> vars;
    if (doc.contains("variables")) {
        for (const auto& [k, v] : doc.at("variables").items())
            vars[k] = json_integer(v, {}, "variable " + k);
    }

    Ambient ambient = load_ambient(field(doc, "ambient", "scenario"), vars);
    std::optional<std::string> full_id = std::string("Y");
    if (doc.contains("full_support"))
        full_id = doc.at("full_support").is_null() ? std::nullopt
                                                    : std::optional<std::string>(doc.at("full_support").get<std::string>());

    try {
        Space space(ambient, full_id);
        if (doc.contains("points"))
            for (const auto& p : doc.at("points"))
                space.add_point(p.get<std::string>());
        if (doc.contains("supports")) {
            for (const auto& js : doc.at("supports")) {
                const std::string id = string_field(js, "id", "support");
                const std::string what = "support " + id;
                const int dim = small_int(field(js, "dim", what), vars, what + ".dim");
                std::vector<Integer> coefficients(ambient.ring->size(), 0);
                for (const auto& [gen, c] : field(js, "restriction", what).items()) {
                    if (!ambient.ring->has(gen))
                        throw ScenarioError(what + ": unknown generator '" + gen + "'");
                    coefficients[ambient.ring->index_of(gen)] = json_integer(c, vars, what + ".restriction");
                }
                const Integer degree = js.contains("degree") ? json_integer(js.at("degree"), vars, what + ".degree") : 1;
                std::set<std::string> points;
                if (js.contains("points"))
                    for (const auto& p : js.at("points"))
                        points.insert(p.get<std::string>());
                space.add_support(Support::linear(ambient, id, dim, coefficients, degree, points));
            }
        }
        if (doc.contains("inclusions"))
            for (const auto& inc : doc.at("inclusions"))
                space.declare_inclusion(inc.at(0).get<std::string>(), inc.at(1).get<std::string>());

        Scenario s{
            .name = doc.value("name", std::string("unnamed")),
            .variables = vars,
            .engine = ProductEngine(std::move(space)),
            .classes = {},
            .expectations = {},
            .source = doc,
        };

        if (doc.contains("axioms")) {
            for (const auto& ja : doc.at("axioms")) {
                const std::string what = "axiom";
                const std::string left = string_field(ja, "left", what);
                const std::string right = string_field(ja, "right", what);
                ProductAxiom ax{
                    .kind = axiom_kind_from_string(string_field(ja, "kind", what)),
                    .left = left,
                    .right = right,
                    .left_class = evaluate_class(parse(left), s),
                    .right_class = evaluate_class(parse(right), s),
                    .result = evaluate_class(parse(string_field(ja, "result", what)), s),
                    .dim_v = ja.contains("dim_v") ? std::optional<int>(small_int(ja.at("dim_v"), vars, "dim_v"))
                                                  : std::nullopt,
                    .note = ja.value("note", std::string()),
                };
                AxiomVerdict verdict = s.engine.admit(std::move(ax));
                if (!verdict)
                    throw ScenarioError("rejected axiom " + verdict.reason);
            }
        }
        // Named classes may use products, so they are evaluated once every axiom is in.
        if (doc.contains("classes")) {
            for (const auto& jc : doc.at("classes")) {
                const std::string name = string_field(jc, "name", "class");
                if (s.space().has_support(name))
                    throw ScenarioError("class " + name + " shadows a support id");
                s.classes.insert_or_assign(name, evaluate_class(parse(string_field(jc, "expr", "class " + name)), s));
            }
        }
        if (doc.contains("expect"))
            for (const auto& je : doc.at("expect"))
                s.expectations.push_back({string_field(je, "expr", "expectation"), field(je, "equals", "expectation")});
        return s;
    } catch (const ScenarioError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    } catch (const Error& e) {
        throw ScenarioError(std::string("scenario: ") + e.what());
    }
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ScenarioError("cannot open scenario file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ScenarioError(path + ": " + e.what());
    }
    return load_scenario(doc);
}

std::vector<ExpectationResult> check_expectations(const Scenario& s) {
    std::vector<ExpectationResult> out;
    for (const auto& ex : s.expectations) {
        ExpectationResult r{ex, false, {}, {}, {}};
        try {
            const Value actual = evaluate(ex.expr, s);
            Value expected = actual;
            if (std::holds_alternative<GCycleClass>(actual)) {
                expected = evaluate_class(parse(ex.equals.get<std::string>()), s);
            } else if (std::holds_alternative<Integer>(actual)) {
                expected = json_integer(ex.equals, s.variables, "expected value");
            } else {
                MultMap m;
                for (const auto& [k, v] : ex.equals.items())
                    m[std::stoi(k)] = json_integer(v, s.variables, "expected multiplicity");
                expected = m;
            }
            r.actual = value_text(s, actual);
            r.expected = value_text(s, expected);
            r.passed = equal_values(actual, expected);
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace gencyc
