#pragma once

#include "gencyc/gcycle.hpp"
#include "gencyc/pushforward.hpp"
#include "gencyc/spaces.hpp"

#include <optional>
#include <string>

namespace gencyc {

enum class ProductKind { Diamond, BulletL };

std::string to_string(ProductKind kind);

/// Numerical data of a product of two pure-dimensional classes.
struct ProductContext {
    int n = 0;      // dim Y
    int M = 0;      // embedding dimension of L
    int dim1 = 0;
    int dim2 = 0;
    int d = 0;      // dim1 + dim2
    int rho = 0;    // d - n, the expected dimension
    int rho_hat = 0; // d - M
    int dim_v = 0;  // dim |mu1| cap |mu2|; -1 when the intersection is empty
};

/// Throws DomainError unless rho <= dim_v <= min(dim1, dim2) (or dim_v == -1).
ProductContext make_context(const Ambient& ambient, int dim1, int dim2, int dim_v);

/// Sum over ell of (1 + sign*u)^(ell + r) wedge mu_ell. Applying it with -sign undoes it.
GCycleClass graded_series_transform(const Space& space, const GCycleClass& mu, const RingElement& u, int sign, int r);

/// diamond = sum_{ell=max(0,rho)}^{dim V} (1+omega)^(ell-rho) bullet_ell, on P^n.
GCycleClass diamond_from_bullet(const Space& space, const GCycleClass& bullet, const ProductContext& ctx);
/// bullet = sum_{k=0}^{dim V} (1-omega)^(k-rho) diamond_k, on P^n.
GCycleClass bullet_from_diamond(const Space& space, const GCycleClass& diamond, const ProductContext& ctx);
/// diamond_Y = sum_{ell=max(0,rho_hat)}^{dim V} (1+omega_L)^(ell-d-1) c(TY) bulletL_ell.
GCycleClass diamond_from_bulletL(const Space& space, const GCycleClass& bullet, const ProductContext& ctx);
/// bulletL = sum_k (1-omega_L)^(k-d-1) (c(TY)^{-1} diamond_Y)_k.
GCycleClass bulletL_from_diamond(const Space& space, const GCycleClass& diamond, const ProductContext& ctx);

/// mu diamond 1_Y = mu.
GCycleClass diamond_unit(const GCycleClass& mu);
/// mu bulletL 1_Y, extended bilinearly over the pure parts of mu.
GCycleClass bulletL_unit(const Space& space, const GCycleClass& mu);
/// mu * {a} = (total multiplicity of mu at a) [a], for either product.
GCycleClass product_with_point(const Space& space, const GCycleClass& mu, const std::string& point,
                               ProductKind kind = ProductKind::Diamond);
/// (gamma wedge mu0) * mu2 = gamma wedge (mu0 * mu2), for either product.
GCycleClass product_by_smooth_factor(const Space& space, const RingElement& gamma, const GCycleClass& base_product);

enum class AxiomKind { BulletPn, BulletL, ProperDot };

std::string to_string(AxiomKind kind);
AxiomKind axiom_kind_from_string(const std::string& s);

/// A declared base-case product value.
struct ProductAxiom {
    AxiomKind kind = AxiomKind::ProperDot;
    std::string left;
    std::string right;
    GCycleClass left_class;
    GCycleClass right_class;
    GCycleClass result;
    std::optional<int> dim_v;
    std::string note;
};

struct AxiomVerdict {
    bool accepted = false;
    std::string reason;

    explicit operator bool() const noexcept { return accepted; }
};

/// Dimension window and Bezout checks an axiom must pass before admission.
AxiomVerdict validate_axiom(const Space& space, const ProductAxiom& axiom);

/// The context an admitted axiom describes.
ProductContext axiom_context(const Space& space, const ProductAxiom& axiom);

struct BezoutReport {
    Integer diamond_degree;
    Integer bullet_degree;
    Integer factor; // 2^(dim V - rho)
    Integer bound;  // factor * bullet_degree
    Integer slack;  // bound - diamond_degree
    bool equality = false;
};

/// deg(diamond) <= 2^(dim V - rho) deg(bullet) on P^n for effective classes; throws
/// InvariantFailure on violation.
BezoutReport bezout_bound_pn(const Space& space, const GCycleClass& bullet, const GCycleClass& diamond,
                             const ProductContext& ctx);

/// epsilon_ell(mu1, mu2, x) read off a computed product.
MultMap local_intersection_numbers(const Space& space, const GCycleClass& product, const std::string& point);

struct CompatReport {
    Space target;
    GCycleClass lhs; // i_* mu1 diamond_{Y'} i_* mu2
    GCycleClass rhs; // i_*(i^* c(N) wedge mu1 diamond_Y mu2)
    RingElement normal_chern;
    bool equal = false;
};

/// Checks the push-forward identity for the diamond product along a catalog embedding.
/// The left side is computed on the target from i_*(mu1 bulletL mu2) = i_* mu1 bullet i_* mu2.
CompatReport pushforward_compat_check(const Embedding& embedding, const Space& source, const GCycleClass& mu1,
                                      const GCycleClass& mu2, const GCycleClass& diamond);

} // namespace gencyc
