#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencyc/expr.hpp"

#include <random>

using namespace gencyc;

namespace {

using K = Expr::Kind;

Expr ref(const std::string& n) {
    Expr e;
    e.kind = K::Ref;
    e.name = n;
    return e;
}

Expr call(K k, std::vector<Expr> args, const std::string& name = "", Integer value = 0) {
    Expr e;
    e.kind = k;
    e.args = std::move(args);
    e.name = name;
    e.value = value;
    return e;
}

// Random sentences of the grammar, used to exercise parse/print round trips.
class Sentences {
public:
    explicit Sentences(std::uint64_t seed) : rng_(seed) {}

    std::string query() {
        switch (pick(4)) {
        case 0:
            return "deg(" + expr(3) + ")";
        case 1:
            return "mult(" + expr(3) + ", " + ident() + ")";
        default:
            return expr(3);
        }
    }

    std::string expr(int depth) {
        std::string s = pick(5) == 0 ? "-" : "";
        s += term(depth);
        for (int i = pick(3); i > 0; --i)
            s += (pick(2) ? " + " : " - ") + term(depth);
        return s;
    }

private:
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    std::string ident() {
        static const char* names[] = {"A", "B", "H2", "Z", "Y", "m", "w", "w_x", "a"};
        return names[pick(9)];
    }
    std::string integer() { return std::to_string(pick(12)); }

    std::string term(int depth) {
        switch (pick(4)) {
        case 0:
            return integer() + "*" + atom(depth);
        case 1:
            return "(" + arith(depth) + ")*" + atom(depth);
        case 2:
            return ident() + " * " + atom(depth);
        default:
            return atom(depth);
        }
    }

    std::string atom(int depth) {
        if (depth <= 0)
            return ident();
        switch (pick(7)) {
        case 0:
            return "diamond(" + expr(depth - 1) + ", " + expr(depth - 1) + ")";
        case 1:
            return "bulletL(" + expr(depth - 1) + "," + expr(depth - 1) + ")";
        case 2:
            return "wedge(" + arith(depth - 1) + ", " + expr(depth - 1) + ")";
        case 3:
            return "dimpart(" + expr(depth - 1) + ", " + integer() + ")";
        case 4:
            return "(" + expr(depth - 1) + ")";
        default:
            return ident();
        }
    }

    std::string arith(int depth) {
        std::string s = aterm(depth);
        for (int i = pick(3); i > 0; --i)
            s += (pick(2) ? "+" : "-") + aterm(depth);
        return s;
    }
    std::string aterm(int depth) {
        std::string s = afactor(depth);
        for (int i = pick(2); i > 0; --i)
            s += "*" + afactor(depth);
        return s;
    }
    std::string afactor(int depth) {
        if (pick(6) == 0)
            return "-" + afactor(depth);
        std::string base;
        switch (depth > 0 ? pick(3) : pick(2)) {
        case 0:
            base = integer();
            break;
        case 1:
            base = ident();
            break;
        default:
            base = "(" + arith(depth - 1) + ")";
        }
        if (pick(4) == 0)
            base += std::string("^") + (pick(3) == 0 ? "-" : "") + integer();
        return base;
    }

    std::mt19937_64 rng_;
};

} // namespace

TEST_CASE("basic parses") {
    CHECK(parse("diamond(H2, Z)") == call(K::Diamond, {ref("H2"), ref("Z")}));
    CHECK(parse("deg(bulletL(Y, Y))") == call(K::Deg, {call(K::BulletL, {ref("Y"), ref("Y")})}));
    CHECK(parse("diamond(H3, diamond(H2, Z))") ==
          call(K::Diamond, {ref("H3"), call(K::Diamond, {ref("H2"), ref("Z")})}));
    CHECK(parse("mult(diamond(E,E), p)") == call(K::Mult, {call(K::Diamond, {ref("E"), ref("E")})}, "p"));
    CHECK(parse("dimpart(A, 1)") == call(K::DimPart, {ref("A")}, "", 1));
    CHECK(parse(" A ") == ref("A"));
}

TEST_CASE("scalars and polynomials") {
    const Expr e = parse("2*A + (m-1)*B");
    REQUIRE(e.kind == K::Add);
    CHECK(e.args[0].kind == K::Scale);
    CHECK(e.args[0].args[0].value == 2);
    CHECK(e.args[1].kind == K::Scale);
    CHECK(e.args[1].args[0].kind == K::Sub);

    const Expr w = parse("wedge(1 + 2*w_x^2, Y)");
    REQUIRE(w.kind == K::Wedge);
    CHECK(w.args[0].kind == K::Add);
    CHECK(w.args[0].args[1].kind == K::Mul);
    CHECK(w.args[0].args[1].args[1].kind == K::Pow);
    CHECK(w.args[0].args[1].args[1].value == 2);

    CHECK(parse_arith("(1+w)^-2").value == -2);
    CHECK(parse("-A").kind == K::Neg);
    CHECK(parse("(A)") == ref("A"));
    CHECK(parse("(2)*A") == parse("2*A"));
}

TEST_CASE("big integers survive parsing") {
    const Expr e = parse("123456789012345678901234567890*A");
    CHECK(e.args[0].value == Integer("123456789012345678901234567890"));
}

TEST_CASE("syntax errors carry positions") {
    auto position = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.column());
        }
        return std::make_pair(0, 0);
    };
    CHECK(position("diamond(H2,, Z)") == std::make_pair(1, 12));
    CHECK(position("diamond(H2, Z") == std::make_pair(1, 14));
    CHECK(position("A +\n  $") == std::make_pair(2, 3));
    CHECK(position("A B") == std::make_pair(1, 3));
    CHECK(position("dimpart(A, B)") == std::make_pair(1, 12));
    CHECK(position("") == std::make_pair(1, 1));
    CHECK(position("deg(A, B)").first == 1);
    CHECK_THROWS_AS(parse("mult(A)"), ParseError);
    CHECK_THROWS_AS(parse("diamond(A, deg(B))"), ParseError);
}

TEST_CASE("printing is canonical") {
    CHECK(print(parse("diamond( H2 ,Z )")) == "diamond(H2, Z)");
    CHECK(print(parse("2*A+(m-1)*B")) == "2*A + (m - 1)*B");
    CHECK(print(parse("mult(A, p)")) == "mult(A, p)");
    CHECK(print(parse("wedge((1+w)^-1, A)")) == "wedge((1 + w)^-1, A)");
}

TEST_CASE("parse after print is the identity") {
    Sentences gen(99);
    for (int i = 0; i < 2000; ++i) {
        const std::string text = gen.query();
        Expr e;
        try {
            e = parse(text);
        } catch (const ParseError& err) {
            FAIL_CHECK("generated sentence rejected: " << text << " (" << err.what() << ")");
            continue;
        }
        const std::string printed = print(e);
        INFO(text << "  ->  " << printed);
        CHECK(parse(printed) == e);
        CHECK(print(parse(printed)) == printed);
    }
}
