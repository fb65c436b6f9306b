#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gencyc/errors.hpp"
#include "gencyc/gcycle.hpp"
#include "gencyc/random.hpp"

using namespace gencyc;

namespace {

Space p3_with_lines() {
    Space s(make_projective(3));
    s.add_point("a");
    s.add_point("b");
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

} // namespace

TEST_CASE("sums and scalars") {
    const Space s = p3_with_lines();
    const int m = 3;
    const GCycleClass mu = gc_add(gc_scale(2, fundamental(s, "A")), fundamental(s, "B", m - 1));
    const auto comps = mu.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].support == "A");
    CHECK(comps[0].dim == 1);
    CHECK(comps[0].coeff.constant_term() == 2);
    CHECK(comps[1].support == "B");
    CHECK(comps[1].coeff.constant_term() == 2);
    CHECK(mu + GCycleClass(s.ambient().id) == mu);
    CHECK(gc_scale(0, mu).empty());
    CHECK((mu - mu).empty());
    CHECK(mu.pure());
    CHECK(mu.top_dim() == 1);
    CHECK(GCycleClass(s.ambient().id).top_dim() == -1);

    const Space other = segre_space();
    CHECK_THROWS_AS(mu + unit_class(other), StructuralError);
}

TEST_CASE("component validation") {
    const Space s = p3_with_lines();
    GCycleClass mu(s.ambient().id);
    const Support& a = s.support("A");
    CHECK_THROWS_AS(mu.add(s, "A", 2, a.one()), ArgumentError);
    CHECK_THROWS_AS(mu.add(s, "A", 0, a.one()), ArgumentError);
    CHECK_THROWS_AS(mu.add(s, "A", 1, s.ambient().one()), StructuralError);
    CHECK_THROWS_AS(mu.add(s, "nope", 1, a.one()), Error);
    CHECK_NOTHROW(mu.add(s, "A", 0, RingElement::monomial(a.ring(), {1}, 5)));
}

TEST_CASE("wedge") {
    const Space s = p3_with_lines();
    const RingElement w = s.ambient().polarization;
    const GCycleClass a = fundamental(s, "A");
    const GCycleClass out = wedge(s, s.ambient().one() + w, a);
    const auto comps = out.components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].dim == 1);
    CHECK(comps[0].coeff == s.support("A").one());
    CHECK(comps[1].dim == 0);
    CHECK(comps[1].coeff == RingElement::monomial(s.support("A").ring(), {1}));
    CHECK(wedge(s, s.ambient().one(), out) == out);
    CHECK(wedge(s, w * w, a).empty());

    const Space bl = blowup_space();
    CHECK(wedge(bl, bl.ambient().generator("w_x"), fundamental(bl, "E")).empty());
}

TEST_CASE("dimension parts") {
    const Space s = segre_space();
    const GCycleClass y = unit_class(s);
    const GCycleClass wy = wedge(s, s.ambient().polarization, y);
    CHECK(dim_part(y + wy, 1) == wy);
    CHECK(dim_part(y, 0).empty());

    const Space p = p3_with_lines();
    const int m = 4;
    const GCycleClass a = fundamental(p, "A");
    const GCycleClass wa = wedge(p, p.ambient().polarization, a);
    CHECK(dim_part(point_class(p, "a", m) + a + wa, 0) == point_class(p, "a", m) + wa);
}

TEST_CASE("degrees") {
    const Space s = segre_space();
    const GCycleClass y = unit_class(s);
    CHECK(deg_L(s, y) == 2);
    CHECK(deg_L(s, y + wedge(s, s.ambient().polarization, y)) == 4);
    CHECK(deg_L(s, GCycleClass(s.ambient().id)) == 0);

    const Space bl = blowup_space();
    const GCycleClass e = fundamental(bl, "E");
    CHECK(deg_L(bl, e - wedge(bl, bl.ambient().polarization, e)) == 0);
    CHECK(deg_L(bl, e) == 1);
}

TEST_CASE("multiplicities") {
    const Space s = p3_with_lines();
    const int m = 3;
    const GCycleClass a = fundamental(s, "A");
    const GCycleClass w = wedge(s, s.ambient().polarization, a);
    const GCycleClass spor4 = Integer(2) * (a + w) + point_class(s, "b", m - 1);
    const MultMap at_b = mult_at(s, spor4, "b");
    CHECK(same_multiplicities(at_b, MultMap{{1, 2}, {0, 2}}));
    CHECK(total(at_b) == 4);
    const MultMap at_a = mult_at(s, spor4, "a");
    CHECK(same_multiplicities(at_a, MultMap{{1, 2}}));
    CHECK(same_multiplicities(mult_at(s, fundamental(s, "B"), "a"), {}));

    const Space y = segre_space();
    const GCycleClass moving = wedge(y, y.ambient().polarization, unit_class(y));
    CHECK(same_multiplicities(mult_at(y, moving, "x"), {}));
    CHECK(same_multiplicities(mult_at(y, unit_class(y), "x"), MultMap{{2, 1}}));
    CHECK_FALSE(same_multiplicities(MultMap{{0, 1}}, MultMap{{1, 1}}));
    CHECK(same_multiplicities(MultMap{{0, 0}, {1, 1}}, MultMap{{1, 1}}));
}

TEST_CASE("effectivity and fixed/moving split") {
    const Space y = segre_space();
    const GCycleClass one = unit_class(y);
    const GCycleClass wy = wedge(y, y.ambient().polarization, one);
    CHECK(is_effective(one + wy));
    CHECK(is_effective(GCycleClass(y.ambient().id)));
    const FixMov fm = fix_mov(y, one + wy);
    CHECK(fm.fixed == one);
    CHECK(fm.moving == wy);

    const Space bl = blowup_space();
    const GCycleClass e = fundamental(bl, "E");
    CHECK_FALSE(is_effective(e - wedge(bl, bl.ambient().polarization, e)));

    const Space p = p3_with_lines();
    const GCycleClass cycle = fundamental(p, "A", 2) + fundamental(p, "B", 3);
    CHECK(fix_mov(p, cycle).fixed == cycle);
    CHECK(fix_mov(p, cycle).moving.empty());
    const int m = 5;
    const GCycleClass a = fundamental(p, "A");
    const GCycleClass wa = wedge(p, p.ambient().polarization, a);
    const FixMov split = fix_mov(p, point_class(p, "a", m) + a + wa);
    CHECK(split.fixed == point_class(p, "a", m) + a);
    CHECK(split.moving == wa);
}

TEST_CASE("random wedge and degree properties") {
    Rng rng(3);
    for (const Space& s : catalog_spaces()) {
        const Ambient& y = s.ambient();
        for (int i = 0; i < 100; ++i) {
            const GCycleClass mu = random_class(s, rng, 0, y.dim);
            const GCycleClass nu = random_class(s, rng, 0, y.dim);
            const RingElement g1 = y.one() + random_homogeneous(y.ring, 1, rng) + random_homogeneous(y.ring, 2, rng);
            const RingElement g2 = random_homogeneous(y.ring, 1, rng);
            CHECK(wedge(s, g1, wedge(s, g2, mu)) == wedge(s, g1 * g2, mu));
            CHECK(wedge(s, g1, mu + nu) == wedge(s, g1, mu) + wedge(s, g1, nu));
            CHECK(wedge(s, g1 + g2, mu) == wedge(s, g1, mu) + wedge(s, g2, mu));
            CHECK(deg_L(s, mu + nu) == deg_L(s, mu) + deg_L(s, nu));
            const FixMov fm = fix_mov(s, mu);
            CHECK(fm.fixed + fm.moving == mu);
            GCycleClass parts(y.id);
            for (int l = 0; l <= y.dim; ++l)
                parts += dim_part(mu, l);
            CHECK(parts == mu);
            for (const auto& x : s.points())
                CHECK(same_multiplicities(mult_at(s, mu, x), mult_at(s, fm.fixed, x)));
        }
    }
}
