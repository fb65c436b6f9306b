#pragma once

#include "gencyc/ring.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gencyc {

enum class AmbientKind { Projective, Biprojective, BlowupP2 };

/// A catalog ambient manifold Y with polarization omega_L and total Chern class c(TY).
///
/// The blow-up of P^2 at a point is modelled as the hypersurface {x1 y1 = x2 y0} inside
/// P^2 x P^1: its ring is the ring of P^2 x P^1, `fundamental` is the class of the
/// hypersurface, and integration over Y is integration of fundamental * alpha.
struct Ambient {
    std::string id;
    AmbientKind kind = AmbientKind::Projective;
    int dim = 0;
    RingPtr ring;
    RingElement polarization;
    RingElement chern;
    RingElement fundamental;
    int embed_dim = 0; // M of the embedding Y -> P^M defined by L

    bool hypersurface_model() const noexcept { return kind == AmbientKind::BlowupP2; }
    bool projective() const noexcept { return kind == AmbientKind::Projective; }

    RingElement one() const { return RingElement::constant(ring, 1); }
    RingElement generator(const std::string& name) const { return RingElement::generator(ring, name); }

    /// Integral over Y of a class of degree dim.
    Integer integrate_top(const RingElement& alpha) const;
    /// deg_L(Y) = integral of omega_L^dim.
    Integer degree() const { return integrate_top(polarization.pow(dim)); }
};

Ambient make_projective(int n);
Ambient make_biprojective(int m, int n);
Ambient make_blowup_p2(int embed_dim = 5);

/// An irreducible smooth subvariety S of an ambient, with restricted ring Z[h]/(h^{s+1}).
///
/// The full-space support keeps the ambient ring and the identity substitution.
class Support {
public:
    /// The whole ambient as a support. Rejected on hypersurface-model ambients.
    static Support full(const Ambient& ambient, std::string id = "Y");

    /// S of dimension `dim` with generator g_i of the ambient restricting to coefficients[i] * h,
    /// and fundamental degree `degree` = integral over S of h^dim.
    static Support linear(const Ambient& ambient, std::string id, int dim, const std::vector<Integer>& coefficients,
                          Integer degree = 1, std::set<std::string> points = {});

    /// General constructor over an arbitrary single-generator ring; `images` are the
    /// restrictions of the ambient generators.
    static Support from_images(const Ambient& ambient, std::string id, int dim, std::vector<RingElement> images,
                               Integer degree, std::set<std::string> points);

    const std::string& id() const noexcept { return id_; }
    const std::string& ambient_id() const noexcept { return ambient_id_; }
    int dim() const noexcept { return dim_; }
    const RingPtr& ring() const noexcept { return ring_; }
    bool is_full() const noexcept { return full_; }
    const Integer& degree() const noexcept { return degree_; }
    const std::set<std::string>& points() const noexcept { return points_; }
    const std::vector<RingElement>& images() const noexcept { return images_; }

    /// Restriction gamma|_S, a ring homomorphism.
    RingElement restrict(const RingElement& gamma) const;
    /// Integral over S of a class of degree dim in the support ring.
    Integer integrate(const RingElement& gamma) const;

    RingElement one() const { return RingElement::constant(ring_, 1); }

    void add_point(const std::string& point) { points_.insert(point); }

private:
    Support() = default;

    std::string id_;
    std::string ambient_id_;
    int dim_ = 0;
    RingPtr ring_;
    RingPtr ambient_ring_;
    bool full_ = false;
    Integer degree_ = 1;
    std::set<std::string> points_;
    std::vector<RingElement> images_;
    std::optional<RingElement> ambient_fundamental_;
};

/// Free functions mirroring the Support members.
RingElement restrict(const RingElement& gamma, const Support& support);
Integer integrate(const Support& support, const RingElement& gamma);

/// An ambient together with its declared supports and marked points.
///
/// Declaring a marked point also declares the zero-dimensional support of the same id.
class Space {
public:
    explicit Space(Ambient ambient, std::optional<std::string> full_support_id = std::string("Y"));

    const Ambient& ambient() const noexcept { return ambient_; }
    const std::map<std::string, Support>& supports() const noexcept { return supports_; }
    const std::set<std::string>& points() const noexcept { return points_; }
    const std::optional<std::string>& full_support_id() const noexcept { return full_id_; }

    void add_point(const std::string& id);
    void add_support(Support support);
    /// Records S subset of T and checks that every point on S is declared on T.
    void declare_inclusion(const std::string& sub, const std::string& super);

    bool has_support(const std::string& id) const { return supports_.count(id) != 0; }
    bool has_point(const std::string& id) const { return points_.count(id) != 0; }
    const Support& support(const std::string& id) const;
    bool contains(const Support& support, const std::string& point) const;
    /// The dimension-zero support carrying the point class [point].
    const Support& point_support(const std::string& point) const;

private:
    Ambient ambient_;
    std::optional<std::string> full_id_;
    std::map<std::string, Support> supports_;
    std::set<std::string> points_;
    std::vector<std::pair<std::string, std::string>> inclusions_;
};

/// A catalog embedding i: source -> target, given by the pullback of each target generator.
struct Embedding {
    std::string id;
    Ambient source;
    Ambient target;
    std::vector<RingElement> pullback; // indexed by target generator, in the source ring

    RingElement pull_back(const RingElement& x) const { return substitute(x, source.ring, pullback); }
    /// i^* c(N_{i(Y)} Y') = i^* c(TY') * c(TY)^{-1}.
    RingElement normal_chern() const { return pull_back(target.chern) * source.chern.inverse(); }
};

/// Segre embedding P^m x P^n -> P^{(m+1)(n+1)-1}, omega -> omega_x + omega_y.
Embedding segre_embedding(const Ambient& biprojective);
/// Inclusion of the blow-up model into P^2 x P^1 (identity on generators).
Embedding blowup_inclusion(const Ambient& blowup);
/// Look up a catalog embedding by id ("segre", "blowup_inclusion").
Embedding catalog_embedding(const std::string& id, const Ambient& source);

} // namespace gencyc
