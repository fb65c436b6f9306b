#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencyc/builtin.hpp"
#include "gencyc/random.hpp"
#include "gencyc/report.hpp"
#include "gencyc/scenario.hpp"

#include <filesystem>

using namespace gencyc;
using nlohmann::json;

namespace {

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("built-in scenarios load and meet their expectations") {
    std::vector<json> docs = {segre_document(), blowup_document()};
    for (int m : {1, 2, 3, 5})
        docs.push_back(kokong_document(m));
    for (int n = 1; n <= 6; ++n)
        for (int k = (n + 1) / 2; k <= n; ++k)
            docs.push_back(planes_document(n, k));
    for (const auto& doc : docs) {
        const Scenario s = load_scenario(doc);
        for (const auto& r : check_expectations(s)) {
            INFO(s.name << ": " << r.expectation.expr << " = " << r.actual << " vs " << r.expected << " " << r.error);
            CHECK(r.passed);
        }
    }
    CHECK_THROWS_AS(builtin_document("hilbert"), ArgumentError);
    CHECK_THROWS_AS(kokong_document(0), ArgumentError);
    CHECK_THROWS_AS(planes_document(4, 1), ArgumentError);
}

TEST_CASE("evaluation examples") {
    const Scenario k = load_scenario(kokong_document(3));
    const GCycleClass a = fundamental(k.space(), "A");
    const GCycleClass spor5 = evaluate_class(parse("diamond(diamond(H3,H2), Z)"), k);
    CHECK(spor5 == point_class(k.space(), "a", 3) + a + wedge(k.space(), k.space().ambient().polarization, a));
    CHECK(std::get<GCycleClass>(evaluate("spor5", k)) == spor5);

    const Scenario y = load_scenario(segre_document());
    CHECK(std::get<Integer>(evaluate("deg(bulletL(Y,Y))", y)) == 4);

    const Scenario e = load_scenario(blowup_document());
    const MultMap mm = std::get<MultMap>(evaluate("mult(diamond(E,E), p)", e));
    CHECK(same_multiplicities(mm, MultMap{{1, 1}, {0, 0}}));
    CHECK(mm.size() == 2);

    CHECK(std::get<GCycleClass>(evaluate("dimpart(spor5, 0)", k)) ==
          point_class(k.space(), "a", 3) + wedge(k.space(), k.space().ambient().polarization, a));
    CHECK(std::get<GCycleClass>(evaluate("m*A - 3*A", k)).empty());
    CHECK(std::get<GCycleClass>(evaluate("wedge((1+w)^2, A)", k)) ==
          wedge(k.space(), (k.space().ambient().one() + k.space().ambient().polarization).pow(2), a));
    CHECK(std::get<GCycleClass>(evaluate("wedge(cTY - 1, Y)", y)) ==
          wedge(y.space(), y.space().ambient().chern - y.space().ambient().one(), unit_class(y.space())));
}

TEST_CASE("evaluation errors") {
    const Scenario k = load_scenario(kokong_document(3));
    CHECK(contains(error_of([&] { evaluate("diamond(H2, Q)", k); }), "1:13: unknown identifier 'Q'"));
    CHECK(contains(error_of([&] { evaluate("wedge(v, A)", k); }), "1:7: unknown generator 'v'"));
    CHECK(contains(error_of([&] { evaluate("mult(A, zz)", k); }), "unknown marked point"));
    CHECK(contains(error_of([&] { evaluate("q*A", k); }), "unknown variable 'q'"));
    CHECK(contains(error_of([&] { evaluate("diamond(H2, H2)", k); }), "underivable"));
    CHECK(contains(error_of([&] { evaluate("wedge(w^-1, A)", k); }), "not a unit"));
    CHECK(contains(error_of([&] { evaluate("dimpart(A, 9)", k); }), "out of range"));
    CHECK_THROWS_AS(evaluate("diamond(H2,", k), ParseError);
}

TEST_CASE("loader rejects malformed documents") {
    json doc = segre_document();
    doc["schema"] = "gencyc.scenario/0";
    CHECK(contains(error_of([&] { load_scenario(doc); }), "schema"));

    doc = segre_document();
    doc["ambient"]["type"] = "grassmannian";
    CHECK(contains(error_of([&] { load_scenario(doc); }), "unknown type"));

    doc = segre_document();
    doc["supports"][0]["restriction"]["w_z"] = "1";
    CHECK(contains(error_of([&] { load_scenario(doc); }), "unknown generator 'w_z'"));

    doc = segre_document();
    doc["supports"][0]["points"] = json::array({"nowhere"});
    CHECK_THROWS_AS(load_scenario(doc), ScenarioError);

    doc = kokong_document(3);
    doc["axioms"][0]["result"] = "A";
    CHECK(contains(error_of([&] { load_scenario(doc); }), "rejected axiom"));

    doc = kokong_document(3);
    doc["classes"].push_back({{"name", "A"}, {"expr", "B"}});
    CHECK(contains(error_of([&] { load_scenario(doc); }), "shadows"));

    doc = segre_document();
    doc["supports"][0]["dim"] = true;
    CHECK_THROWS_AS(load_scenario(doc), ScenarioError);

    CHECK_THROWS_AS(load_scenario(json::array()), ScenarioError);
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/scenario.json"), ScenarioError);
}

TEST_CASE("integers travel as decimal strings") {
    json doc = kokong_document(3);
    doc["variables"]["m"] = "100000000000000000000000000000";
    const Scenario s = load_scenario(doc);
    const Value v = evaluate("deg(spor5)", s);
    CHECK(std::get<Integer>(v) == Integer("100000000000000000000000000002"));
    const json out = value_json(s, v);
    CHECK(out["value"] == "100000000000000000000000000002");

    const json cls = value_json(s, evaluate("spor5", s));
    CHECK(cls["type"] == "class");
    CHECK(cls["value"]["degree"] == "100000000000000000000000000002");
    for (const auto& comp : cls["value"]["components"])
        for (const auto& [mono, c] : comp["coeff"].items())
            CHECK(c.is_string());
    CHECK(cls["value"]["multiplicities"]["a"]["0"] == "100000000000000000000000000000");
    CHECK(cls["value"]["effective"] == true);
}

TEST_CASE("reports are deterministic") {
    const Scenario a = load_scenario(kokong_document(5));
    const Scenario b = load_scenario(kokong_document(5));
    Trace ta;
    Trace tb;
    const Value va = evaluate("diamond(H3, diamond(H2, Z))", a, &ta);
    const Value vb = evaluate("diamond(H3, diamond(H2, Z))", b, &tb);
    CHECK(value_json(a, va).dump() == value_json(b, vb).dump());
    CHECK(trace_json(ta).dump() == trace_json(tb).dump());
    CHECK(!ta.empty());
    for (const auto& t : trace_json(ta))
        CHECK(t.contains("formula"));
}

TEST_CASE("printed classes parse back to themselves") {
    Rng rng(17);
    for (const Space& sp : catalog_spaces()) {
        json doc = {{"schema", kScenarioSchema}, {"name", "probe"}};
        // rebuild the catalog space as a scenario
        const Ambient& y = sp.ambient();
        if (y.kind == AmbientKind::Projective)
            doc["ambient"] = {{"type", "projective"}, {"n", std::to_string(y.dim)}};
        else if (y.kind == AmbientKind::Biprojective)
            doc["ambient"] = {{"type", "biprojective"},
                              {"m", std::to_string(y.ring->order(0))},
                              {"n", std::to_string(y.ring->order(1))}};
        else
            doc["ambient"] = {{"type", "blowup_p2"}};
        if (!sp.full_support_id())
            doc["full_support"] = nullptr;
        doc["points"] = sp.points();
        doc["supports"] = json::array();
        for (const auto& [id, s] : sp.supports()) {
            if (s.is_full() || s.dim() == 0)
                continue;
            json restriction = json::object();
            for (std::size_t i = 0; i < y.ring->size(); ++i)
                restriction[y.ring->generators()[i].name] = s.images()[i].coefficient(Monomial{1}).str();
            doc["supports"].push_back({{"id", id}, {"dim", s.dim()}, {"restriction", restriction},
                                       {"degree", s.degree().str()}, {"points", s.points()}});
        }
        const Scenario scen = load_scenario(doc);
        for (int i = 0; i < 100; ++i) {
            const GCycleClass mu = random_class(sp, rng, 0, y.dim);
            GCycleClass same(y.id);
            for (const auto& c : mu.components())
                same.add(scen.space(), c.support, c.dim, c.coeff);
            const std::string text = class_text(scen, same);
            INFO(text);
            CHECK(evaluate_class(parse(text), scen) == same);
        }
    }
}

TEST_CASE("example scenario files") {
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(GENCYC_SCENARIO_DIR)) {
        if (entry.path().extension() != ".json")
            continue;
        ++files;
        const Scenario s = load_scenario_file(entry.path().string());
        for (const auto& r : check_expectations(s)) {
            INFO(entry.path().filename().string() << ": " << r.expectation.expr << " " << r.error);
            CHECK(r.passed);
        }
    }
    CHECK(files >= 5);
}
