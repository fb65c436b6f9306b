#include "gencyc/suite.hpp"

#include "gencyc/builtin.hpp"
#include "gencyc/random.hpp"
#include "gencyc/report.hpp"
#include "gencyc/scenario.hpp"

#include <sstream>

namespace gencyc {

namespace {

struct Instance {
    std::string lhs;
    std::string rhs;
    int dim_v;
};

struct SuiteScenario {
    Scenario scenario;
    std::vector<Instance> instances;
};

const int kKokongParameters[] = {1, 2, 3, 5};

std::vector<SuiteScenario> suite_scenarios() {
    std::vector<SuiteScenario> out;
    for (int m : kKokongParameters)
        out.push_back({load_scenario(kokong_document(m)),
                       {{"H2", "Z", 1},
                        {"H3", "B", 0},
                        {"H3", "H2", 1},
                        {"H3", "A", 1},
                        {"A", "Z", 1},
                        {"H3", "diamond(H2, Z)", 1},
                        {"diamond(H3, H2)", "Z", 1}}});
    out.push_back({load_scenario(segre_document()), {{"Y", "Y", 2}, {"F1", "F2", 0}, {"F1", "Y", 1}, {"Y", "x", 0}}});
    out.push_back({load_scenario(blowup_document()), {{"E", "E", 1}, {"E", "p", 0}}});
    for (int n = 1; n <= 6; ++n)
        for (int k = (n + 1) / 2; k <= n; ++k)
            out.push_back({load_scenario(planes_document(n, k)), {{"V", "V", k}, {"V", "o", 0}}});
    return out;
}

/// Collects failures for one criterion; the first few are kept in the detail line.
class Tally {
public:
    void ok() { ++checked_; }
    void fail(const std::string& what) {
        ++checked_;
        ++failed_;
        if (failed_ <= 3)
            notes_ << (failed_ > 1 ? "; " : "") << what;
    }
    void expect(bool cond, const std::string& what) { cond ? ok() : fail(what); }

    CheckResult result(int criterion, const std::string& name, const std::string& summary) const {
        std::ostringstream detail;
        detail << checked_ << " checks";
        if (!summary.empty())
            detail << ", " << summary;
        if (failed_ > 0)
            detail << ", " << failed_ << " failed: " << notes_.str();
        return {criterion, name, failed_ == 0 && checked_ > 0, detail.str()};
    }

private:
    int checked_ = 0;
    int failed_ = 0;
    std::ostringstream notes_;
};

template <typename F>
void guarded(Tally& t, const std::string& label, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        t.fail(label + ": " + e.what());
    }
}

void check_expectations_into(Tally& t, const Scenario& s) {
    for (const auto& r : check_expectations(s))
        t.expect(r.passed, s.name + " " + r.expectation.expr + " = " + (r.error.empty() ? r.actual : r.error) +
                               ", expected " + r.expected);
}

GCycleClass value(const Scenario& s, const std::string& text) { return evaluate_class(parse(text), s); }

GCycleClass wedge_polarization(const Scenario& s, const GCycleClass& mu) {
    return wedge(s.space(), s.space().ambient().polarization, mu);
}

CheckResult check_blowup() {
    Tally t;
    guarded(t, "blowup", [&] {
        const Scenario s = load_scenario(blowup_document());
        const GCycleClass e = fundamental(s.space(), "E");
        const GCycleClass diamond = s.engine.product(ProductKind::Diamond, e, e);
        t.expect(diamond == e - wedge_polarization(s, e), "E diamond E = " + class_text(s, diamond));
        const ProductContext ctx = axiom_context(s.space(), s.engine.axioms().front());
        const GCycleClass back = bulletL_from_diamond(s.space(), diamond, ctx);
        t.expect(back == e, "round trip gives " + class_text(s, back));
        check_expectations_into(t, s);
    });
    return t.result(1, "blow-up: E diamond E = E - wL^E, round trip to E bulletL E = E", "");
}

CheckResult check_segre() {
    Tally t;
    guarded(t, "segre", [&] {
        const Scenario s = load_scenario(segre_document());
        const GCycleClass y = unit_class(s.space());
        const GCycleClass bullet = s.engine.product(ProductKind::BulletL, y, y);
        t.expect(bullet == y + wedge_polarization(s, y), "Y bulletL Y = " + class_text(s, bullet));
        t.expect(deg_L(s.space(), y) == 2, "deg Y");
        t.expect(deg_L(s.space(), bullet) == 4, "deg(Y bulletL Y)");
        check_expectations_into(t, s);
    });
    return t.result(2, "Segre: Y bulletL Y = Y + wL^Y, degree 4", "");
}

CheckResult check_nonassociativity() {
    Tally t;
    for (int m : kKokongParameters) {
        guarded(t, "m=" + std::to_string(m), [&] {
            const Scenario s = load_scenario(kokong_document(m));
            const Space& sp = s.space();
            const GCycleClass a_line = fundamental(sp, "A");
            const GCycleClass one_plus_w_a = a_line + wedge_polarization(s, a_line);
            const GCycleClass spor4 = value(s, "diamond(H3, diamond(H2, Z))");
            const GCycleClass spor5 = value(s, "diamond(diamond(H3, H2), Z)");
            const std::string tag = "m=" + std::to_string(m) + " ";
            t.expect(spor4 == Integer(2) * one_plus_w_a + point_class(sp, "b", m - 1), tag + "spor4 = " + class_text(s, spor4));
            t.expect(spor5 == point_class(sp, "a", m) + one_plus_w_a, tag + "spor5 = " + class_text(s, spor5));
            t.expect(!(spor4 == spor5), tag + "spor4 == spor5");
            check_expectations_into(t, s);
        });
    }
    return t.result(3, "non-associativity: spor4 != spor5 for m in {1,2,3,5}", "");
}

CheckResult check_sharpness() {
    Tally t;
    int cases = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int k = (n + 1) / 2; k <= n; ++k) {
            const std::string tag = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
            guarded(t, tag, [&] {
                const Scenario s = load_scenario(planes_document(n, k));
                const GCycleClass v = fundamental(s.space(), "V");
                const ProductContext ctx = make_context(s.space().ambient(), k, k, k);
                const GCycleClass diamond = s.engine.product(ProductKind::Diamond, v, v);
                const GCycleClass bullet = s.engine.product(ProductKind::BulletL, v, v);
                const Integer expected = Integer(1) << (ctx.dim_v - ctx.rho);
                t.expect(deg_L(s.space(), diamond) == expected, tag + " deg = " + deg_L(s.space(), diamond).str());
                const BezoutReport rep = bezout_bound_pn(s.space(), bullet, diamond, ctx);
                t.expect(rep.equality, tag + " bound not attained");
                check_expectations_into(t, s);
                ++cases;
            });
        }
    }
    return t.result(4, "sharpness: deg(V diamond V) = 2^(dim V - rho) with equality", std::to_string(cases) + " planes");
}

RingElement random_linear_form(const Ambient& ambient, Rng& rng) {
    for (;;) {
        RingElement u = random_homogeneous(ambient.ring, 1, rng, 3);
        if (!u.is_zero())
            return u;
    }
}

CheckResult check_involution(const SuiteOptions& opt) {
    Tally t;
    Rng rng(opt.seed);
    std::uniform_int_distribution<int> shift(-8, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    for (const Space& space : catalog_spaces()) {
        const Ambient& y = space.ambient();
        for (int i = 0; i < opt.samples; ++i) {
            guarded(t, y.id, [&] {
                const GCycleClass mu = random_class(space, rng, 0, y.dim);
                const RingElement u = coin(rng) ? y.polarization : random_linear_form(y, rng);
                const int sign = coin(rng) ? 1 : -1;
                const int r = shift(rng);
                const GCycleClass there = graded_series_transform(space, mu, u, sign, r);
                const GCycleClass back = graded_series_transform(space, there, u, -sign, r);
                t.expect(back == mu, y.id + " r=" + std::to_string(r) + " on " + mu.to_string());
            });
        }
    }
    return t.result(5, "transform involution on random classes", std::to_string(opt.samples) + " per ambient");
}

ProductContext random_context(const Ambient& y, Rng& rng) {
    std::uniform_int_distribution<int> dim(0, y.dim);
    const int d1 = dim(rng);
    const int d2 = dim(rng);
    const int rho = d1 + d2 - y.dim;
    std::uniform_int_distribution<int> v(std::max(0, rho), std::min(d1, d2));
    return make_context(y, d1, d2, v(rng));
}

CheckResult check_round_trips(const SuiteOptions& opt) {
    Tally t;
    Rng rng(opt.seed + 1);
    for (const Space& space : catalog_spaces()) {
        const Ambient& y = space.ambient();
        for (int i = 0; i < opt.samples; ++i) {
            guarded(t, y.id, [&] {
                const ProductContext ctx = random_context(y, rng);
                const int lo_hat = std::max(0, ctx.rho_hat);
                const GCycleClass beta = random_class(space, rng, lo_hat, ctx.dim_v);
                const GCycleClass there = diamond_from_bulletL(space, beta, ctx);
                t.expect(bulletL_from_diamond(space, there, ctx) == beta, y.id + " snar2(snar1) on " + beta.to_string());
                const GCycleClass delta = ctx.rho_hat <= 0 ? random_class(space, rng, 0, ctx.dim_v)
                                                           : diamond_from_bulletL(space, random_class(space, rng, lo_hat, ctx.dim_v), ctx);
                const GCycleClass bullet = bulletL_from_diamond(space, delta, ctx);
                t.expect(diamond_from_bulletL(space, bullet, ctx) == delta, y.id + " snar1(snar2) on " + delta.to_string());

                if (!y.projective())
                    return;
                const int lo = std::max(0, ctx.rho);
                const GCycleClass b = random_class(space, rng, lo, ctx.dim_v);
                const GCycleClass d = diamond_from_bullet(space, b, ctx);
                t.expect(bullet_from_diamond(space, d, ctx) == b, y.id + " potatis2(potatis) on " + b.to_string());
                t.expect(d == diamond_from_bulletL(space, b, ctx), y.id + " potatis != snar1 on " + b.to_string());
                const GCycleClass dd = ctx.rho <= 0 ? random_class(space, rng, 0, ctx.dim_v)
                                                    : diamond_from_bullet(space, random_class(space, rng, lo, ctx.dim_v), ctx);
                t.expect(diamond_from_bullet(space, bullet_from_diamond(space, dd, ctx), ctx) == dd,
                         y.id + " potatis(potatis2) on " + dd.to_string());
            });
        }
    }
    return t.result(6, "conversion round trips (P^n and c(TY) formulas)", std::to_string(opt.samples) + " per ambient");
}

struct Evaluated {
    const Scenario* scenario;
    Instance instance;
    GCycleClass lhs;
    GCycleClass rhs;
    GCycleClass diamond;
    GCycleClass bullet;
};

std::vector<Evaluated> evaluate_instances(const std::vector<SuiteScenario>& suite, Tally& t) {
    std::vector<Evaluated> out;
    for (const auto& ss : suite) {
        for (const auto& inst : ss.instances) {
            guarded(t, ss.scenario.name + " " + inst.lhs + "*" + inst.rhs, [&] {
                const Scenario& s = ss.scenario;
                const GCycleClass l = value(s, inst.lhs);
                const GCycleClass r = value(s, inst.rhs);
                out.push_back({&s, inst, l, r, s.engine.product(ProductKind::Diamond, l, r),
                               s.engine.product(ProductKind::BulletL, l, r)});
            });
        }
    }
    return out;
}

CheckResult check_bezout(const std::vector<SuiteScenario>& suite) {
    Tally t;
    for (const auto& ss : suite)
        for (const auto& ax : ss.scenario.engine.axioms()) {
            const AxiomVerdict v = validate_axiom(ss.scenario.space(), ax);
            t.expect(v.accepted, ss.scenario.name + " " + v.reason);
        }
    for (const auto& ev : evaluate_instances(suite, t)) {
        const Scenario& s = *ev.scenario;
        const std::string tag = s.name + " " + ev.instance.lhs + "*" + ev.instance.rhs;
        if (!is_effective(ev.lhs) || !is_effective(ev.rhs))
            continue;
        const Integer bound = deg_L(s.space(), ev.lhs) * deg_L(s.space(), ev.rhs);
        t.expect(deg_L(s.space(), ev.bullet) <= bound, tag + " deg(bulletL) exceeds product of degrees");
        if (!s.space().ambient().projective())
            continue;
        guarded(t, tag, [&] {
            const ProductContext ctx =
                make_context(s.space().ambient(), ev.lhs.top_dim(), ev.rhs.top_dim(), ev.instance.dim_v);
            const BezoutReport rep = bezout_bound_pn(s.space(), ev.bullet, ev.diamond, ctx);
            t.expect(rep.diamond_degree <= rep.bound, tag + " deg(diamond) above 2^(dim V - rho) deg(bullet)");
        });
    }
    return t.result(7, "Bezout: axioms validate, degree bounds hold", std::to_string(suite.size()) + " scenarios");
}

CheckResult check_multiplicities(const std::vector<SuiteScenario>& suite) {
    Tally t;
    for (const auto& ev : evaluate_instances(suite, t)) {
        const Space& sp = ev.scenario->space();
        const std::string tag = ev.scenario->name + " " + ev.instance.lhs + "*" + ev.instance.rhs;
        for (const auto& x : sp.points()) {
            t.expect(same_multiplicities(mult_at(sp, ev.diamond, x), mult_at(sp, ev.bullet, x)), tag + " at " + x);
            for (const GCycleClass* product : {&ev.diamond, &ev.bullet}) {
                const MultMap moving = mult_at(sp, fix_mov(sp, *product).moving, x);
                t.expect(total(moving) == 0 && same_multiplicities(moving, {}), tag + " moving part at " + x);
            }
        }
    }
    return t.result(8, "multiplicities of diamond and bulletL agree at marked points", "");
}

CheckResult check_proper_structure() {
    Tally t;
    guarded(t, "segre", [&] {
        const Scenario s = load_scenario(segre_document());
        const Space& sp = s.space();
        const GCycleClass y = unit_class(sp);
        const GCycleClass bullet = s.engine.product(ProductKind::BulletL, y, y);
        const GCycleClass dot = s.engine.axioms().front().result;
        const FixMov fm = fix_mov(sp, bullet);
        t.expect(fm.fixed == dot, "fixed part " + class_text(s, fm.fixed));
        t.expect(!fm.moving.empty(), "no moving part");
        t.expect(fm.fixed + fm.moving == bullet, "split does not add up");
        for (const auto& c : fm.moving.components())
            t.expect(c.dim < sp.support(c.support).dim(), "moving component of full dimension");
        for (const auto& x : sp.points())
            t.expect(same_multiplicities(mult_at(sp, fm.moving, x), {}), "moving multiplicity at " + x);
    });
    return t.result(9, "proper case: bulletL = cycle + moving terms of zero multiplicity", "");
}

CheckResult check_pushforward() {
    Tally t;
    guarded(t, "segre", [&] {
        const Scenario s = load_scenario(segre_document());
        const Space& sp = s.space();
        const Ambient& y = sp.ambient();
        const Embedding emb = segre_embedding(y);
        const GCycleClass one = unit_class(sp);
        const GCycleClass diamond = s.engine.product(ProductKind::Diamond, one, one);
        const CompatReport rep = pushforward_compat_check(emb, sp, one, one, diamond);
        const RingElement expected_normal = y.one() + Integer(2) * y.polarization;
        t.expect(rep.normal_chern == expected_normal, "i^*c(N) = " + rep.normal_chern.to_string());
        const GCycleClass oracle = pushforward(emb, sp, rep.target, one + Integer(2) * wedge_polarization(s, one));
        t.expect(rep.equal, "sides differ");
        t.expect(rep.lhs == oracle, "lhs = " + rep.lhs.to_string());
        t.expect(rep.rhs == oracle, "rhs = " + rep.rhs.to_string());
    });
    return t.result(10, "push-forward compatibility along the Segre embedding", "");
}

} // namespace

std::vector<CheckResult> verify_suite(const SuiteOptions& options) {
    std::vector<CheckResult> out;
    out.push_back(check_blowup());
    out.push_back(check_segre());
    out.push_back(check_nonassociativity());
    out.push_back(check_sharpness());
    out.push_back(check_involution(options));
    out.push_back(check_round_trips(options));
    std::vector<SuiteScenario> suite;
    try {
        suite = suite_scenarios();
    } catch (const std::exception& e) {
        out.push_back({7, "Bezout", false, std::string("loading scenarios: ") + e.what()});
        out.push_back({8, "multiplicities", false, std::string("loading scenarios: ") + e.what()});
    }
    if (!suite.empty()) {
        out.push_back(check_bezout(suite));
        out.push_back(check_multiplicities(suite));
    }
    out.push_back(check_proper_structure());
    out.push_back(check_pushforward());
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed)
            return false;
    return !results.empty();
}

nlohmann::json suite_json(const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results)
        checks.push_back({{"criterion", r.criterion}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    return {{"passed", all_passed(results)}, {"checks", checks}};
}

std::string suite_text(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const auto& r : results)
        out << (r.passed ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << " (" << r.detail << ")\n";
    return out.str();
}

} // namespace gencyc
