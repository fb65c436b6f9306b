#include "gencyc/engine.hpp"

#include "gencyc/errors.hpp"

namespace gencyc {

namespace {

const char* const kPnToDiamond = "diamond = sum_{l=max(0,rho)}^{dim V} (1+w)^(l-rho) (bullet)_l";
const char* const kPnToBullet = "bullet = sum_{k=0}^{dim V} (1-w)^(k-rho) (diamond)_k";
const char* const kLToDiamond = "diamond_Y = sum_{l=max(0,rho_hat)}^{dim V} (1+wL)^(l-d-1) c(TY) (bulletL)_l";
const char* const kLToBullet = "bulletL = sum_{k=0}^{dim V} (1-wL)^(k-d-1) (c(TY)^-1 diamond_Y)_k";

/// Records a step before its sub-derivations and fills in the result afterwards.
class Step {
public:
    Step(Trace* trace, std::string rule, std::string formula) : trace_(trace) {
        if (trace_) {
            index_ = trace_->size();
            trace_->push_back({std::move(rule), std::move(formula), {}});
        }
    }

    void done(const std::string& detail) {
        if (trace_)
            (*trace_)[index_].detail = detail;
    }

private:
    Trace* trace_;
    std::size_t index_ = 0;
};

bool is_fundamental(const Space& space, const Component& c) {
    const Support& s = space.support(c.support);
    return c.dim == s.dim() && c.coeff.constant_term() == 1 && c.coeff.terms().size() == 1;
}

GCycleClass single(const Space& space, const Component& c) {
    GCycleClass mu(space.ambient().id);
    return mu.add(space, c.support, c.dim, c.coeff);
}

std::string describe(ProductKind kind, const GCycleClass& a, const GCycleClass& b) {
    return "[" + a.to_string() + "] " + to_string(kind) + " [" + b.to_string() + "]";
}

} // namespace

AxiomVerdict ProductEngine::admit(ProductAxiom axiom) {
    AxiomVerdict verdict = validate_axiom(space_, axiom);
    if (verdict)
        axioms_.push_back(std::move(axiom));
    return verdict;
}

std::vector<RingElement> ProductEngine::lifts(const std::string& support, const RingElement& kappa) const {
    const Support& s = space_.support(support);
    const RingPtr& ring = space_.ambient().ring;
    if (s.is_full())
        return {kappa};
    const int j = kappa.max_degree();
    if (j <= 0)
        return {RingElement::constant(ring, kappa.constant_term())};
    const Integer c = kappa.coefficient(Monomial{j});
    std::vector<RingElement> out;
    for (const auto& m : monomials_of_degree(*ring, j)) {
        const Integer a = s.restrict(RingElement::monomial(ring, m)).coefficient(Monomial{j});
        if (a != 0 && c % a == 0)
            out.push_back(RingElement::monomial(ring, m, c / a));
    }
    return out;
}

GCycleClass ProductEngine::product(ProductKind kind, const GCycleClass& mu1, const GCycleClass& mu2,
                                   Trace* trace) const {
    const std::string& amb = space_.ambient().id;
    if (mu1.ambient() != amb || mu2.ambient() != amb)
        throw StructuralError("product operands must live on " + amb);
    if (mu1.empty() || mu2.empty())
        return GCycleClass(amb);

    for (const auto& ax : axioms_) {
        const bool direct = ax.left_class == mu1 && ax.right_class == mu2;
        const bool swapped = ax.left_class == mu2 && ax.right_class == mu1;
        if (direct || swapped)
            return from_axiom(kind, ax, trace);
    }

    if (space_.full_support_id()) {
        const GCycleClass unit = unit_class(space_);
        const GCycleClass* other = mu2 == unit ? &mu1 : (mu1 == unit ? &mu2 : nullptr);
        if (other) {
            if (kind == ProductKind::Diamond) {
                Step step(trace, "unit", "mu diamond 1_Y = mu");
                GCycleClass out = diamond_unit(*other);
                step.done(describe(kind, mu1, mu2) + " = " + out.to_string());
                return out;
            }
            Step step(trace, "unit", "mu bulletL 1_Y = sum_k (1-wL)^(k-n-dim mu-1) (c(TY)^-1 mu)_k");
            GCycleClass out = bulletL_unit(space_, *other);
            step.done(describe(kind, mu1, mu2) + " = " + out.to_string());
            return out;
        }
    }

    for (int side = 0; side < 2; ++side) {
        const GCycleClass& p = side == 0 ? mu2 : mu1;
        const GCycleClass& other = side == 0 ? mu1 : mu2;
        if (p.size() != 1)
            continue;
        const Component c = p.components().front();
        if (c.dim != 0 || !space_.has_point(c.support))
            continue;
        Step step(trace, "point", "mu * {a} = mult_a(mu) [a]");
        GCycleClass out = c.coeff.constant_term() * product_with_point(space_, other, c.support, kind);
        step.done(describe(kind, mu1, mu2) + " = " + out.to_string());
        return out;
    }

    if (mu1.size() == 1 && !is_fundamental(space_, mu1.components().front()))
        return smooth_factor(kind, mu1.components().front(), mu2, trace);
    if (mu2.size() == 1 && !is_fundamental(space_, mu2.components().front()))
        return smooth_factor(kind, mu2.components().front(), mu1, trace);

    if (mu1.size() > 1 || mu2.size() > 1) {
        const bool split_first = mu1.size() > 1;
        const GCycleClass& split = split_first ? mu1 : mu2;
        const GCycleClass& other = split_first ? mu2 : mu1;
        Step step(trace, "bilinear", "(mu + mu') * nu = mu * nu + mu' * nu");
        GCycleClass out(amb);
        for (const auto& c : split.components())
            out += product(kind, single(space_, c), other, trace);
        step.done(describe(kind, mu1, mu2) + " = " + out.to_string());
        return out;
    }

    throw Underivable(describe(kind, mu1, mu2));
}

GCycleClass ProductEngine::from_axiom(ProductKind kind, const ProductAxiom& ax, Trace* trace) const {
    const ProductContext ctx = axiom_context(space_, ax);
    const bool knows_diamond = ax.kind == AxiomKind::ProperDot;
    const std::string label = to_string(ax.kind) + "(" + ax.left + ", " + ax.right + ")";
    {
        Step step(trace, "axiom", "declared " + to_string(ax.kind) + " value");
        step.done(label + " = " + ax.result.to_string() + (ax.note.empty() ? "" : " [" + ax.note + "]"));
    }
    if ((kind == ProductKind::Diamond) == knows_diamond)
        return ax.result;

    const bool pn = space_.ambient().projective();
    if (kind == ProductKind::Diamond) {
        Step step(trace, "convert bulletL->diamond", kLToDiamond);
        GCycleClass out = diamond_from_bulletL(space_, ax.result, ctx);
        if (pn) {
            Step check(trace, "convert bullet->diamond (P^n)", kPnToDiamond);
            const GCycleClass alt = diamond_from_bullet(space_, ax.result, ctx);
            check.done(alt.to_string());
            if (!(alt == out))
                throw InvariantFailure("conversion routes disagree for " + label + ": " + out.to_string() + " vs " +
                                       alt.to_string());
        }
        step.done(out.to_string());
        return out;
    }
    Step step(trace, "convert diamond->bulletL", kLToBullet);
    GCycleClass out = bulletL_from_diamond(space_, ax.result, ctx);
    if (pn) {
        Step check(trace, "convert diamond->bullet (P^n)", kPnToBullet);
        const GCycleClass alt = bullet_from_diamond(space_, ax.result, ctx);
        check.done(alt.to_string());
        if (!(alt == out))
            throw InvariantFailure("conversion routes disagree for " + label + ": " + out.to_string() + " vs " +
                                   alt.to_string());
    }
    step.done(out.to_string());
    return out;
}

GCycleClass ProductEngine::smooth_factor(ProductKind kind, const Component& factor, const GCycleClass& other,
                                         Trace* trace) const {
    const std::vector<RingElement> gammas = lifts(factor.support, factor.coeff);
    if (gammas.empty())
        throw Underivable("smooth factor " + factor.coeff.to_string() + " on " + factor.support +
                          " (no integral lift to the ambient ring)");
    Step step(trace, "smooth-factor", "(gamma ^ mu0) * mu2 = gamma ^ (mu0 * mu2)");
    const GCycleClass base = product(kind, fundamental(space_, factor.support), other, trace);
    GCycleClass out = product_by_smooth_factor(space_, gammas.front(), base);
    for (std::size_t i = 1; i < gammas.size(); ++i)
        if (!(product_by_smooth_factor(space_, gammas[i], base) == out))
            throw InvariantFailure("lifts of " + factor.coeff.to_string() + " on " + factor.support +
                                   " give different products; check declared restrictions");
    step.done("gamma = " + gammas.front().to_string() + ", result " + out.to_string());
    return out;
}

} // namespace gencyc
