#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencyc/errors.hpp"
#include "gencyc/products.hpp"
#include "gencyc/random.hpp"

using namespace gencyc;

namespace {

Integer binom(long long e, int j) {
    Integer num = 1;
    Integer den = 1;
    for (int i = 0; i < j; ++i) {
        num *= Integer(e - i);
        den *= Integer(i + 1);
    }
    return num / den;
}

// On P^n every support ring is Z[h]/(h^{s+1}) and w restricts to h, so
// (1 + sign*w)^(l+r) ^ c h^(s-l) [S] = sum_j C(l+r, j) sign^j c h^(s-l+j) [S] in dimension l-j.
GCycleClass transform_oracle(const Space& space, const GCycleClass& mu, int sign, int r) {
    GCycleClass out(mu.ambient());
    for (const auto& comp : mu.components()) {
        const Support& s = space.support(comp.support);
        const int l = comp.dim;
        const Integer c = comp.coeff.coefficient(Monomial{s.dim() - l});
        for (int j = 0; j <= l; ++j) {
            const Integer k = binom(l + r, j) * (j % 2 == 1 && sign < 0 ? -1 : 1) * c;
            GCycleClass piece(mu.ambient());
            piece.add(space, comp.support, l - j, RingElement::monomial(s.ring(), {s.dim() - l + j}, k));
            out += piece;
        }
    }
    return out;
}

Space kokong_space() {
    Space s(make_projective(3));
    s.add_point("a");
    s.add_point("b");
    for (const char* h : {"H2", "H3"})
        s.add_support(Support::linear(s.ambient(), h, 2, {1}, 1, {"a", "b"}));
    s.add_support(Support::linear(s.ambient(), "Z", 2, {1}, 4, {"a", "b"}));
    s.add_support(Support::linear(s.ambient(), "A", 1, {1}, 1, {"a", "b"}));
    s.add_support(Support::linear(s.ambient(), "B", 1, {1}, 1, {"b"}));
    return s;
}

Space segre_space() {
    Space s(make_biprojective(1, 1));
    s.add_point("x");
    return s;
}

Space blowup_space() {
    Space s(make_blowup_p2());
    s.add_point("p");
    s.add_support(Support::linear(s.ambient(), "E", 1, {0, 1}, 1, {"p"}));
    return s;
}

GCycleClass w_wedge(const Space& s, const GCycleClass& mu) { return wedge(s, s.ambient().polarization, mu); }

ProductAxiom make_axiom(AxiomKind kind, const GCycleClass& l, const GCycleClass& r, const GCycleClass& result,
                        std::optional<int> dim_v = std::nullopt) {
    return {kind, "L", "R", l, r, result, dim_v, ""};
}

} // namespace

TEST_CASE("transform examples") {
    const Space s = kokong_space();
    const GCycleClass a = fundamental(s, "A");
    const RingElement w = s.ambient().polarization;
    CHECK(graded_series_transform(s, a, w, 1, 0) == a + w_wedge(s, a));
    const GCycleClass pt = point_class(s, "a");
    CHECK(graded_series_transform(s, pt, w, 1, 0) == pt);
    CHECK(graded_series_transform(s, pt, w, -1, 5) == pt);
    CHECK_THROWS_AS(graded_series_transform(s, a, w, 2, 0), ArgumentError);
    CHECK_THROWS_AS(graded_series_transform(s, a, w * w, 1, 0), ArgumentError);
}

TEST_CASE("transform matches the binomial oracle on P^n") {
    Rng rng(21);
    std::uniform_int_distribution<int> shift(-8, 8);
    for (const Space& s : catalog_spaces()) {
        if (!s.ambient().projective())
            continue;
        for (int i = 0; i < 200; ++i) {
            const GCycleClass mu = random_class(s, rng, 0, s.ambient().dim);
            const int r = shift(rng);
            const int sign = i % 2 == 0 ? 1 : -1;
            CHECK(graded_series_transform(s, mu, s.ambient().polarization, sign, r) == transform_oracle(s, mu, sign, r));
        }
    }
}

TEST_CASE("context") {
    const Ambient p3 = make_projective(3);
    const ProductContext c = make_context(p3, 2, 2, 1);
    CHECK(c.rho == 1);
    CHECK(c.rho_hat == 1);
    CHECK(c.d == 4);
    CHECK(make_context(make_blowup_p2(), 1, 1, 1).rho_hat == -3);
    CHECK_THROWS_AS(make_context(p3, 2, 2, 0), DomainError);
    CHECK_THROWS_AS(make_context(p3, 1, 2, 2), DomainError);
    CHECK_THROWS_AS(make_context(p3, 4, 2, 1), DomainError);
    CHECK(make_context(p3, 1, 1, -1).dim_v == -1);
}

TEST_CASE("bullet to diamond on P^n") {
    const Space s = kokong_space();
    const GCycleClass a = fundamental(s, "A");
    const ProductContext h3a = make_context(s.ambient(), 2, 1, 1);
    CHECK(diamond_from_bullet(s, a, h3a) == a + w_wedge(s, a));

    const int m = 3;
    const ProductContext az = make_context(s.ambient(), 1, 2, 1);
    const GCycleClass bullet = a + point_class(s, "a", m);
    const GCycleClass diamond = diamond_from_bullet(s, bullet, az);
    CHECK(diamond == point_class(s, "a", m) + a + w_wedge(s, a));
    CHECK(bullet_from_diamond(s, diamond, az) == bullet);

    const ProductContext bad = make_context(s.ambient(), 2, 2, 1);
    CHECK_THROWS_AS(diamond_from_bullet(s, point_class(s, "a"), bad), DomainError);
    CHECK(bullet_from_diamond(s, point_class(s, "b"), az) == point_class(s, "b"));

    const Space bl = blowup_space();
    CHECK_THROWS_AS(diamond_from_bullet(bl, fundamental(bl, "E"), make_context(bl.ambient(), 1, 1, 1)),
                    ArgumentError);
}

TEST_CASE("self-intersection of linear spaces") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = (n + 1) / 2; k <= n; ++k) {
            Space s(make_projective(n));
            s.add_support(Support::linear(s.ambient(), "V", k, {1}));
            const GCycleClass v = fundamental(s, "V");
            const ProductContext ctx = make_context(s.ambient(), k, k, k);
            const GCycleClass expected = wedge(s, (s.ambient().one() + s.ambient().polarization).pow(n - k), v);
            const GCycleClass diamond = diamond_from_bullet(s, v, ctx);
            CHECK(diamond == expected);
            CHECK(deg_L(s, diamond) == Integer(1) << (n - k));
            CHECK(bullet_from_diamond(s, diamond, ctx) == v);
            CHECK(diamond_from_bulletL(s, v, ctx) == diamond);
        }
    }
}

TEST_CASE("conversions through c(TY)") {
    const Space y = segre_space();
    const GCycleClass one = unit_class(y);
    const ProductContext yy = make_context(y.ambient(), 2, 2, 2);
    CHECK(diamond_from_bulletL(y, one + w_wedge(y, one), yy) == one);
    CHECK(bulletL_from_diamond(y, one, yy) == one + w_wedge(y, one));
    CHECK(diamond_from_bulletL(y, GCycleClass(y.ambient().id), yy).empty());

    const Space bl = blowup_space();
    const GCycleClass e = fundamental(bl, "E");
    const ProductContext ee = make_context(bl.ambient(), 1, 1, 1);
    CHECK(diamond_from_bulletL(bl, e, ee) == e - w_wedge(bl, e));
    CHECK(bulletL_from_diamond(bl, e - w_wedge(bl, e), ee) == e);
}

TEST_CASE("unit and point rules") {
    const Space bl = blowup_space();
    CHECK(diamond_unit(fundamental(bl, "E")) == fundamental(bl, "E"));

    for (int n = 1; n <= 5; ++n) {
        Space s(make_projective(n));
        s.add_point("o");
        const GCycleClass one = unit_class(s);
        CHECK(bulletL_unit(s, one) == bulletL_from_diamond(s, one, make_context(s.ambient(), n, n, n)));
        CHECK(bulletL_unit(s, point_class(s, "o")) == point_class(s, "o"));
    }

    const Space s = kokong_space();
    const GCycleClass a = fundamental(s, "A");
    CHECK(product_with_point(s, Integer(2) * a, "a") == point_class(s, "a", 2));
    CHECK(product_with_point(s, fundamental(s, "B"), "a").empty());
    CHECK(product_with_point(s, a + w_wedge(s, a), "a", ProductKind::BulletL) == point_class(s, "a"));
    CHECK(product_by_smooth_factor(s, s.ambient().one(), a) == a);
}

TEST_CASE("axiom validation") {
    const Space s = kokong_space();
    const int m = 3;
    const GCycleClass h2 = fundamental(s, "H2");
    const GCycleClass h3 = fundamental(s, "H3");
    const GCycleClass z = fundamental(s, "Z");
    const GCycleClass a = fundamental(s, "A");
    const GCycleClass b = fundamental(s, "B");

    CHECK(validate_axiom(s, make_axiom(AxiomKind::ProperDot, h2, z, Integer(2) * a + Integer(m - 1) * b)));
    CHECK(validate_axiom(s, make_axiom(AxiomKind::BulletPn, a, z, a + point_class(s, "a", m), 1)));
    CHECK(validate_axiom(s, make_axiom(AxiomKind::BulletPn, h3, a, a, 1)));

    // proper product with a point when rho = 1
    CHECK_FALSE(validate_axiom(s, make_axiom(AxiomKind::ProperDot, h2, h3, a + point_class(s, "a"))));
    // degree 1 instead of 4
    const AxiomVerdict v = validate_axiom(s, make_axiom(AxiomKind::ProperDot, h2, z, a));
    CHECK_FALSE(v);
    CHECK(v.reason.find("Bezout") != std::string::npos);
    // component above dim V
    CHECK_FALSE(validate_axiom(s, make_axiom(AxiomKind::BulletPn, a, z, a, 0)));
    // effective operands, non-effective result
    CHECK_FALSE(validate_axiom(s, make_axiom(AxiomKind::BulletPn, a, z, Integer(2) * a - point_class(s, "a"), 1)));

    const Space bl = blowup_space();
    const GCycleClass e = fundamental(bl, "E");
    CHECK(validate_axiom(bl, make_axiom(AxiomKind::BulletL, e, e, e, 1)));
    CHECK_FALSE(validate_axiom(bl, make_axiom(AxiomKind::BulletPn, e, e, e, 1)));
    CHECK_FALSE(validate_axiom(bl, make_axiom(AxiomKind::BulletL, e, e, Integer(3) * e, 1)));

    const Space y = segre_space();
    const GCycleClass one = unit_class(y);
    CHECK(validate_axiom(y, make_axiom(AxiomKind::ProperDot, one, one, one)));

    CHECK(axiom_kind_from_string("bullet_L") == AxiomKind::BulletL);
    CHECK(to_string(AxiomKind::ProperDot) == "proper_dot");
    CHECK_THROWS_AS(axiom_kind_from_string("cup"), ArgumentError);
}

TEST_CASE("Bezout estimate on P^n") {
    const Space s = kokong_space();
    const int m = 3;
    const GCycleClass a = fundamental(s, "A");
    const GCycleClass bullet = Integer(2) * a + point_class(s, "b", m - 1);
    const GCycleClass diamond = Integer(2) * (a + w_wedge(s, a)) + point_class(s, "b", m - 1);
    const ProductContext ctx = make_context(s.ambient(), 2, 1, 1);
    const BezoutReport r = bezout_bound_pn(s, bullet, diamond, ctx);
    CHECK(r.diamond_degree == 6);
    CHECK(r.bullet_degree == 4);
    CHECK(r.factor == 2);
    CHECK(r.bound == 8);
    CHECK(r.slack == 2);
    CHECK_FALSE(r.equality);
    CHECK_THROWS_AS(bezout_bound_pn(s, bullet, Integer(5) * diamond, ctx), InvariantFailure);
    CHECK_THROWS_AS(bezout_bound_pn(s, bullet - Integer(3) * a, diamond, ctx), ArgumentError);
}

TEST_CASE("local intersection numbers") {
    const Space bl = blowup_space();
    const GCycleClass e = fundamental(bl, "E");
    const MultMap from_diamond = local_intersection_numbers(bl, e - w_wedge(bl, e), "p");
    CHECK(same_multiplicities(from_diamond, MultMap{{1, 1}, {0, 0}}));
    CHECK(same_multiplicities(from_diamond, local_intersection_numbers(bl, e, "p")));
}

TEST_CASE("push-forward compatibility") {
    const Space y = segre_space();
    const Embedding emb = segre_embedding(y.ambient());
    const GCycleClass one = unit_class(y);
    const CompatReport r = pushforward_compat_check(emb, y, one, one, one);
    CHECK(r.equal);
    const GCycleClass oracle = pushforward(emb, y, r.target, one + Integer(2) * w_wedge(y, one));
    CHECK(r.lhs == oracle);
    CHECK(r.rhs == oracle);

    const GCycleClass none(y.ambient().id);
    const CompatReport e = pushforward_compat_check(emb, y, none, one, none);
    CHECK(e.equal);
    CHECK(e.lhs.empty());
    CHECK(e.rhs.empty());

    const GCycleClass bullet = bulletL_from_diamond(y, one, make_context(y.ambient(), 2, 2, 2));
    CHECK(deg_L(r.target, pushforward(emb, y, r.target, bullet)) == deg_L(y, bullet));
}

TEST_CASE("randomized conversion agreement on P^n") {
    Rng rng(5);
    for (const Space& s : catalog_spaces()) {
        if (!s.ambient().projective())
            continue;
        const int n = s.ambient().dim;
        for (int d1 = 0; d1 <= n; ++d1)
            for (int d2 = 0; d2 <= n; ++d2)
                for (int v = std::max(0, d1 + d2 - n); v <= std::min(d1, d2); ++v) {
                    const ProductContext ctx = make_context(s.ambient(), d1, d2, v);
                    const GCycleClass b = random_class(s, rng, std::max(0, ctx.rho), v);
                    CHECK(diamond_from_bullet(s, b, ctx) == diamond_from_bulletL(s, b, ctx));
                    const GCycleClass d = random_class(s, rng, 0, v);
                    CHECK(bullet_from_diamond(s, d, ctx) == bulletL_from_diamond(s, d, ctx));
                }
    }
}
