#pragma once

#include "gencyc/products.hpp"

#include <string>
#include <vector>

namespace gencyc {

/// One step of a derivation: which rule fired and the formula it applied.
struct TraceEntry {
    std::string rule;
    std::string formula;
    std::string detail;
};

using Trace = std::vector<TraceEntry>;

/// Derives products from validated base axioms and the product calculus.
///
/// Order of attempts for mu1 * mu2:
///   1. an admitted axiom whose operands match (either order), converted to the
///      requested product when the axiom records the other one;
///   2. the unit rule (1_Y) and the point rule ({a});
///   3. the smooth-factor rule for a single non-fundamental component;
///   4. the bilinear split over components.
/// When two routes apply (the P^n formulas and the c(TY) formulas) both are computed and
/// must agree.
class ProductEngine {
public:
    explicit ProductEngine(Space space) : space_(std::move(space)) {}

    const Space& space() const noexcept { return space_; }
    const std::vector<ProductAxiom>& axioms() const noexcept { return axioms_; }

    /// Validates and stores the axiom; rejected axioms are not stored.
    AxiomVerdict admit(ProductAxiom axiom);

    GCycleClass product(ProductKind kind, const GCycleClass& mu1, const GCycleClass& mu2,
                        Trace* trace = nullptr) const;

    /// gamma in the ambient ring with gamma|_S == kappa; every candidate lift is returned.
    std::vector<RingElement> lifts(const std::string& support, const RingElement& kappa) const;

private:
    GCycleClass from_axiom(ProductKind kind, const ProductAxiom& axiom, Trace* trace) const;
    GCycleClass smooth_factor(ProductKind kind, const Component& factor, const GCycleClass& other,
                              Trace* trace) const;

    Space space_;
    std::vector<ProductAxiom> axioms_;
};

} // namespace gencyc
