#include "gencyc/builtin.hpp"

#include "gencyc/errors.hpp"
#include "gencyc/scenario.hpp"

namespace gencyc {

using nlohmann::json;

namespace {

json support(const std::string& id, int dim, json restriction, std::vector<std::string> points,
             const std::string& degree = "1") {
    return {{"id", id}, {"dim", std::to_string(dim)}, {"restriction", std::move(restriction)},
            {"degree", degree}, {"points", std::move(points)}};
}

json axiom(const std::string& kind, const std::string& left, const std::string& right, const std::string& result,
           std::optional<int> dim_v = std::nullopt, const std::string& note = "") {
    json a = {{"kind", kind}, {"left", left}, {"right", right}, {"result", result}};
    if (dim_v)
        a["dim_v"] = std::to_string(*dim_v);
    if (!note.empty())
        a["note"] = note;
    return a;
}

json expect(const std::string& expr, json equals) { return {{"expr", expr}, {"equals", std::move(equals)}}; }

} // namespace

json kokong_document(int m) {
    if (m < 1)
        throw ArgumentError("kokong: m must be a positive integer");
    return {
        {"schema", kScenarioSchema},
        {"name", "kokong-m" + std::to_string(m)},
        {"variables", {{"m", std::to_string(m)}}},
        {"ambient", {{"type", "projective"}, {"n", "3"}}},
        {"points", json::array({"a", "b"})},
        {"supports",
         {
             support("H2", 2, {{"w", "1"}}, {"a", "b"}),
             support("H3", 2, {{"w", "1"}}, {"a", "b"}),
             support("Z", 2, {{"w", "1"}}, {"a", "b"}, "m+1"),
             support("A", 1, {{"w", "1"}}, {"a", "b"}),
             support("B", 1, {{"w", "1"}}, {"b"}),
         }},
        {"inclusions", json::array({json::array({"A", "H2"}), json::array({"A", "H3"}), json::array({"A", "Z"}),
                                    json::array({"B", "H2"}), json::array({"B", "Z"})})},
        {"axioms",
         {
             axiom("proper_dot", "H2", "Z", "2*A + (m-1)*B", std::nullopt, "proper intersection"),
             axiom("proper_dot", "H3", "B", "b", std::nullopt, "proper intersection"),
             axiom("proper_dot", "H3", "H2", "A", std::nullopt, "proper intersection"),
             axiom("bullet_pn", "H3", "A", "A", 1, "A lies in H3"),
             axiom("bullet_pn", "A", "Z", "A + m*a", 1, "A lies in Z"),
         }},
        {"classes",
         {
             {{"name", "spor4"}, {"expr", "diamond(H3, diamond(H2, Z))"}},
             {{"name", "spor5"}, {"expr", "diamond(diamond(H3, H2), Z)"}},
         }},
        {"expect",
         {
             expect("diamond(H2, Z)", "2*A + (m-1)*B"),
             expect("diamond(H3, A)", "A + wedge(w, A)"),
             expect("spor4", "2*(A + wedge(w, A)) + (m-1)*b"),
             expect("spor5", "m*a + A + wedge(w, A)"),
             expect("deg(spor4)", "m+3"),
             expect("deg(spor5)", "m+2"),
             expect("mult(spor4, b)", {{"1", "2"}, {"0", "m-1"}}),
             expect("mult(spor5, a)", {{"1", "1"}, {"0", "m"}}),
         }},
    };
}

json segre_document() {
    return {
        {"schema", kScenarioSchema},
        {"name", "segre"},
        {"ambient", {{"type", "biprojective"}, {"m", "1"}, {"n", "1"}}},
        {"full_support", "Y"},
        {"points", json::array({"x"})},
        {"supports",
         {
             support("F1", 1, {{"w_x", "0"}, {"w_y", "1"}}, {"x"}),
             support("F2", 1, {{"w_x", "1"}, {"w_y", "0"}}, {"x"}),
         }},
        {"axioms",
         {
             axiom("proper_dot", "Y", "Y", "Y", std::nullopt, "self-intersection of the whole space"),
             axiom("proper_dot", "F1", "F2", "x", std::nullopt, "transverse fibers"),
         }},
        {"expect",
         {
             expect("diamond(Y, Y)", "Y"),
             expect("bulletL(Y, Y)", "Y + wedge(wL, Y)"),
             expect("deg(Y)", "2"),
             expect("deg(bulletL(Y, Y))", "4"),
             expect("mult(bulletL(Y, Y), x)", {{"2", "1"}, {"1", "0"}, {"0", "0"}}),
         }},
    };
}

json blowup_document(int embed_dim) {
    return {
        {"schema", kScenarioSchema},
        {"name", "blowup"},
        {"ambient", {{"type", "blowup_p2"}, {"embed_dim", std::to_string(embed_dim)}}},
        {"full_support", nullptr},
        {"points", json::array({"p"})},
        {"supports", {support("E", 1, {{"w_x", "0"}, {"w_y", "1"}}, {"p"})}},
        {"axioms", {axiom("bullet_L", "E", "E", "E", 1, "exceptional curve")}},
        {"expect",
         {
             expect("bulletL(E, E)", "E"),
             expect("diamond(E, E)", "E - wedge(wL, E)"),
             expect("deg(diamond(E, E))", "0"),
             expect("mult(diamond(E, E), p)", {{"1", "1"}, {"0", "0"}}),
         }},
    };
}

json planes_document(int n, int k) {
    if (n < 1 || k < 0 || k > n || 2 * k < n)
        throw ArgumentError("planes: need 0 <= k <= n and 2k >= n");
    const std::string factor = Integer(Integer(1) << (n - k)).str();
    return {
        {"schema", kScenarioSchema},
        {"name", "planes-n" + std::to_string(n) + "-k" + std::to_string(k)},
        {"ambient", {{"type", "projective"}, {"n", std::to_string(n)}}},
        {"points", json::array({"o"})},
        {"supports", {support("V", k, {{"w", "1"}}, {"o"})}},
        {"axioms", {axiom("bullet_pn", "V", "V", "V", k, "self-intersection of a linear space")}},
        {"expect",
         {
             expect("bulletL(V, V)", "V"),
             expect("deg(diamond(V, V))", factor),
         }},
    };
}

std::vector<std::string> builtin_names() { return {"kokong", "segre", "blowup", "planes"}; }

json builtin_document(const std::string& name, int m, int n, int k) {
    if (name == "kokong")
        return kokong_document(m);
    if (name == "segre")
        return segre_document();
    if (name == "blowup")
        return blowup_document();
    if (name == "planes")
        return planes_document(n, k);
    throw ArgumentError("unknown built-in scenario '" + name + "'");
}

} // namespace gencyc
