#include "gencyc/products.hpp"

#include "gencyc/errors.hpp"

#include <algorithm>
#include <set>

namespace gencyc {

namespace {

void require_projective(const Space& space, const char* what) {
    if (!space.ambient().projective())
        throw ArgumentError(std::string(what) + " is only valid on projective space, not " + space.ambient().id);
}

std::set<int> dims_of(const GCycleClass& mu) {
    std::set<int> dims;
    for (const auto& [key, coeff] : mu.parts())
        dims.insert(key.dim);
    return dims;
}

void require_window(const GCycleClass& mu, int lo, int hi, const char* what) {
    for (int ell : dims_of(mu))
        if (ell < lo || ell > hi)
            throw DomainError(std::string(what) + ": component of dimension " + std::to_string(ell) +
                              " lies outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "]; input is not a valid product");
}

int pure_dim(const GCycleClass& mu, const std::string& name) {
    if (mu.empty() || !mu.pure())
        throw ArgumentError("operand " + name + " must be a nonzero class of pure dimension");
    return mu.top_dim();
}

} // namespace

std::string to_string(ProductKind kind) { return kind == ProductKind::Diamond ? "diamond" : "bulletL"; }

ProductContext make_context(const Ambient& ambient, int dim1, int dim2, int dim_v) {
    if (dim1 < 0 || dim2 < 0 || dim1 > ambient.dim || dim2 > ambient.dim)
        throw DomainError("operand dimensions must lie in [0, " + std::to_string(ambient.dim) + "]");
    ProductContext ctx;
    ctx.n = ambient.dim;
    ctx.M = ambient.embed_dim;
    ctx.dim1 = dim1;
    ctx.dim2 = dim2;
    ctx.d = dim1 + dim2;
    ctx.rho = ctx.d - ctx.n;
    ctx.rho_hat = ctx.d - ctx.M;
    ctx.dim_v = dim_v;
    if (dim_v > std::min(dim1, dim2))
        throw DomainError("dim V = " + std::to_string(dim_v) + " exceeds min(dim mu1, dim mu2)");
    if (dim_v < -1 || (dim_v >= 0 && dim_v < ctx.rho))
        throw DomainError("dim V = " + std::to_string(dim_v) + " is below the expected dimension " +
                          std::to_string(ctx.rho));
    return ctx;
}

GCycleClass graded_series_transform(const Space& space, const GCycleClass& mu, const RingElement& u, int sign,
                                    int r) {
    if (sign != 1 && sign != -1)
        throw ArgumentError("sign must be +1 or -1");
    if (!u.is_homogeneous(1))
        throw ArgumentError("transform variable must be homogeneous of degree 1, got " + u.to_string());
    const RingElement base = space.ambient().one() + u * Integer(sign);
    GCycleClass out(mu.ambient());
    for (int ell : dims_of(mu))
        out += wedge(space, base.pow(ell + r), dim_part(mu, ell));
    return out;
}

GCycleClass diamond_from_bullet(const Space& space, const GCycleClass& bullet, const ProductContext& ctx) {
    require_projective(space, "diamond_from_bullet");
    require_window(bullet, std::max(0, ctx.rho), ctx.dim_v, "diamond_from_bullet");
    return graded_series_transform(space, bullet, space.ambient().polarization, +1, -ctx.rho);
}

GCycleClass bullet_from_diamond(const Space& space, const GCycleClass& diamond, const ProductContext& ctx) {
    require_projective(space, "bullet_from_diamond");
    return graded_series_transform(space, diamond, space.ambient().polarization, -1, -ctx.rho);
}

GCycleClass diamond_from_bulletL(const Space& space, const GCycleClass& bullet, const ProductContext& ctx) {
    require_window(bullet, std::max(0, ctx.rho_hat), ctx.dim_v, "diamond_from_bulletL");
    const Ambient& y = space.ambient();
    return wedge(space, y.chern, graded_series_transform(space, bullet, y.polarization, +1, -ctx.d - 1));
}

GCycleClass bulletL_from_diamond(const Space& space, const GCycleClass& diamond, const ProductContext& ctx) {
    const Ambient& y = space.ambient();
    return graded_series_transform(space, wedge(space, y.chern.inverse(), diamond), y.polarization, -1, -ctx.d - 1);
}

GCycleClass diamond_unit(const GCycleClass& mu) { return mu; }

GCycleClass bulletL_unit(const Space& space, const GCycleClass& mu) {
    const Ambient& y = space.ambient();
    const RingElement inverse_chern = y.chern.inverse();
    GCycleClass out(mu.ambient());
    for (int k : dims_of(mu))
        out += graded_series_transform(space, wedge(space, inverse_chern, dim_part(mu, k)), y.polarization, -1,
                                       -y.dim - k - 1);
    return out;
}

GCycleClass product_with_point(const Space& space, const GCycleClass& mu, const std::string& point, ProductKind) {
    return point_class(space, point, total(mult_at(space, mu, point)));
}

GCycleClass product_by_smooth_factor(const Space& space, const RingElement& gamma, const GCycleClass& base_product) {
    return wedge(space, gamma, base_product);
}

std::string to_string(AxiomKind kind) {
    switch (kind) {
    case AxiomKind::BulletPn:
        return "bullet_pn";
    case AxiomKind::BulletL:
        return "bullet_L";
    case AxiomKind::ProperDot:
        return "proper_dot";
    }
    return "?";
}

AxiomKind axiom_kind_from_string(const std::string& s) {
    if (s == "bullet_pn")
        return AxiomKind::BulletPn;
    if (s == "bullet_L")
        return AxiomKind::BulletL;
    if (s == "proper_dot")
        return AxiomKind::ProperDot;
    throw ArgumentError("unknown axiom kind '" + s + "' (expected bullet_pn, bullet_L or proper_dot)");
}

ProductContext axiom_context(const Space& space, const ProductAxiom& axiom) {
    const int dim1 = pure_dim(axiom.left_class, axiom.left);
    const int dim2 = pure_dim(axiom.right_class, axiom.right);
    return make_context(space.ambient(), dim1, dim2, axiom.dim_v.value_or(axiom.result.top_dim()));
}

AxiomVerdict validate_axiom(const Space& space, const ProductAxiom& axiom) {
    const std::string label = to_string(axiom.kind) + "(" + axiom.left + ", " + axiom.right + ")";
    auto reject = [&](const std::string& why) { return AxiomVerdict{false, label + ": " + why}; };
    const std::string& amb = space.ambient().id;
    if (axiom.left_class.ambient() != amb || axiom.right_class.ambient() != amb || axiom.result.ambient() != amb)
        return reject("operands and result must live on " + amb);
    if (axiom.kind == AxiomKind::BulletPn && !space.ambient().projective())
        return reject("bullet_pn axioms need projective space");

    ProductContext ctx;
    try {
        ctx = axiom_context(space, axiom);
    } catch (const Error& e) {
        return reject(e.what());
    }

    const std::set<int> dims = dims_of(axiom.result);
    if (axiom.kind == AxiomKind::ProperDot) {
        for (int ell : dims)
            if (ell != ctx.rho)
                return reject("proper product has a component of dimension " + std::to_string(ell) +
                              " but the expected dimension is " + std::to_string(ctx.rho));
    }
    const int lo = std::max(0, axiom.kind == AxiomKind::BulletL ? ctx.rho_hat : ctx.rho);
    for (int ell : dims)
        if (ell < lo || ell > ctx.dim_v)
            return reject("component of dimension " + std::to_string(ell) + " outside the window [" +
                          std::to_string(lo) + ", " + std::to_string(ctx.dim_v) + "]");

    const Integer deg1 = deg_L(space, axiom.left_class);
    const Integer deg2 = deg_L(space, axiom.right_class);
    const Integer deg = deg_L(space, axiom.result);
    const bool bezout_applies = (axiom.kind == AxiomKind::ProperDot && space.ambient().projective() && ctx.rho >= 0) ||
                                (axiom.kind == AxiomKind::BulletPn && ctx.rho >= 0) ||
                                (axiom.kind == AxiomKind::BulletL && ctx.rho_hat >= 0);
    if (bezout_applies && deg != deg1 * deg2)
        return reject("Bezout equality fails: deg(result) = " + deg.str() + " but deg(left)*deg(right) = " +
                      Integer(deg1 * deg2).str());
    if (axiom.kind != AxiomKind::ProperDot && is_effective(axiom.left_class) && is_effective(axiom.right_class)) {
        if (!is_effective(axiom.result))
            return reject("product of effective classes is not effective");
        if (deg > deg1 * deg2)
            return reject("Bezout inequality fails: deg(result) = " + deg.str() + " > " + Integer(deg1 * deg2).str());
    }
    return {true, label + ": accepted"};
}

BezoutReport bezout_bound_pn(const Space& space, const GCycleClass& bullet, const GCycleClass& diamond,
                             const ProductContext& ctx) {
    require_projective(space, "bezout_bound_pn");
    if (!is_effective(bullet))
        throw ArgumentError("Bezout estimate needs an effective bullet product");
    BezoutReport r;
    r.diamond_degree = deg_L(space, diamond);
    r.bullet_degree = deg_L(space, bullet);
    const int exponent = std::max(0, ctx.dim_v - ctx.rho);
    r.factor = Integer(1) << exponent;
    r.bound = r.factor * r.bullet_degree;
    r.slack = r.bound - r.diamond_degree;
    r.equality = r.slack == 0;
    if (r.diamond_degree > r.bound)
        throw InvariantFailure("Bezout estimate violated: deg(diamond) = " + r.diamond_degree.str() + " > " +
                               r.bound.str());
    return r;
}

MultMap local_intersection_numbers(const Space& space, const GCycleClass& product, const std::string& point) {
    return mult_at(space, product, point);
}

CompatReport pushforward_compat_check(const Embedding& embedding, const Space& source, const GCycleClass& mu1,
                                      const GCycleClass& mu2, const GCycleClass& diamond) {
    Space target = image_space(embedding, source);
    const RingElement normal = embedding.normal_chern();
    if (mu1.empty() || mu2.empty()) {
        GCycleClass lhs(target.ambient().id);
        GCycleClass rhs = pushforward(embedding, source, target, wedge(source, normal, diamond));
        const bool equal = lhs == rhs;
        return {std::move(target), std::move(lhs), std::move(rhs), normal, equal};
    }
    const int dim1 = pure_dim(mu1, "mu1");
    const int dim2 = pure_dim(mu2, "mu2");
    const int dim_v = diamond.top_dim();
    const ProductContext src_ctx = make_context(source.ambient(), dim1, dim2, dim_v);
    const GCycleClass bullet = bulletL_from_diamond(source, diamond, src_ctx);

    const GCycleClass pushed_bullet = pushforward(embedding, source, target, bullet);
    const ProductContext tgt_ctx = make_context(target.ambient(), dim1, dim2, dim_v);
    GCycleClass lhs = diamond_from_bulletL(target, pushed_bullet, tgt_ctx);
    if (target.ambient().projective()) {
        const GCycleClass via_pn = diamond_from_bullet(target, pushed_bullet, tgt_ctx);
        if (!(via_pn == lhs))
            throw InvariantFailure("P^n conversion and c(TY) conversion disagree on " + target.ambient().id + ": " +
                                   via_pn.to_string() + " vs " + lhs.to_string());
    }
    GCycleClass rhs = pushforward(embedding, source, target, wedge(source, normal, diamond));
    const bool equal = lhs == rhs;
    return {std::move(target), std::move(lhs), std::move(rhs), normal, equal};
}

} // namespace gencyc
