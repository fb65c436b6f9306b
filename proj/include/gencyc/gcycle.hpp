#pragma once

#include "gencyc/ring.hpp"
#include "gencyc/spaces.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gencyc {

/// kappa wedge [S] in dimension `dim`; kappa is homogeneous of degree dim(S) - dim in the support ring.
struct Component {
    std::string support;
    int dim = 0;
    RingElement coeff;
};

/// A generalized cycle class: finitely many components, at most one per (support, dim).
class GCycleClass {
public:
    struct Key {
        std::string support;
        int dim = 0;

        bool operator==(const Key&) const = default;
    };
    /// Higher dimensions first, then support id.
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const {
            return a.dim != b.dim ? a.dim > b.dim : a.support < b.support;
        }
    };
    using Parts = std::map<Key, RingElement, KeyOrder>;

    explicit GCycleClass(std::string ambient_id) : ambient_(std::move(ambient_id)) {}

    const std::string& ambient() const noexcept { return ambient_; }
    const Parts& parts() const noexcept { return parts_; }
    std::vector<Component> components() const;

    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }
    /// Largest component dimension, or -1 when empty.
    int top_dim() const;
    bool pure() const;

    /// Adds coeff wedge [S] in dimension dim after checking it against the space.
    GCycleClass& add(const Space& space, const std::string& support, int dim, const RingElement& coeff);

    /// The sub-class of components whose key satisfies `keep`.
    template <typename Pred>
    GCycleClass filter(Pred keep) const {
        GCycleClass out(ambient_);
        for (const auto& [key, coeff] : parts_)
            if (keep(key))
                out.parts_.emplace(key, coeff);
        return out;
    }

    GCycleClass& operator+=(const GCycleClass& other);
    GCycleClass& operator-=(const GCycleClass& other);
    GCycleClass& operator*=(const Integer& c);

    friend GCycleClass operator+(GCycleClass a, const GCycleClass& b) { return a += b; }
    friend GCycleClass operator-(GCycleClass a, const GCycleClass& b) { return a -= b; }
    friend GCycleClass operator*(const Integer& c, GCycleClass a) { return a *= c; }

    bool operator==(const GCycleClass& other) const { return ambient_ == other.ambient_ && parts_ == other.parts_; }

    /// Compact text form, e.g. "A + (h)*A@0 + 3*a@0".
    std::string to_string() const;

private:
    void merge(const Key& key, const RingElement& coeff);
    void require_same_ambient(const GCycleClass& other) const;

    std::string ambient_;
    Parts parts_;
};

GCycleClass gc_add(const GCycleClass& a, const GCycleClass& b);
GCycleClass gc_scale(const Integer& c, const GCycleClass& a);

/// c [S] for a declared support S.
GCycleClass fundamental(const Space& space, const std::string& support, const Integer& c = 1);
/// c [a] for a marked point a.
GCycleClass point_class(const Space& space, const std::string& point, const Integer& c = 1);
/// 1_Y; throws on ambients without a full-space support.
GCycleClass unit_class(const Space& space);

/// gamma wedge mu, with gamma in the ambient ring.
GCycleClass wedge(const Space& space, const RingElement& gamma, const GCycleClass& mu);
/// The component of dimension ell.
GCycleClass dim_part(const GCycleClass& mu, int ell);
/// deg_L, summed over pure-dimension parts.
Integer deg_L(const Space& space, const GCycleClass& mu);

/// Multiplicities per dimension 0..top_dim.
using MultMap = std::map<int, Integer>;

/// mult_x of each pure-dimension part. Only fixed components through x contribute; a
/// positive-degree smooth factor kills the multiplicity.
MultMap mult_at(const Space& space, const GCycleClass& mu, const std::string& point);
/// Equality of multiplicity maps, treating absent dimensions as zero.
bool same_multiplicities(const MultMap& a, const MultMap& b);
Integer total(const MultMap& m);

/// Certified effective: every coefficient in the monomial basis is nonnegative. A false
/// answer means "not certified", not "not effective".
bool is_effective(const GCycleClass& mu);

struct FixMov {
    GCycleClass fixed;
    GCycleClass moving;
};
/// Split into components of full support dimension (an ordinary cycle) and the rest.
FixMov fix_mov(const Space& space, const GCycleClass& mu);

} // namespace gencyc
