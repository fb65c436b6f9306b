#include "gencyc/spaces.hpp"

#include "gencyc/errors.hpp"

namespace gencyc {

namespace {

Monomial top_monomial(const RingDescriptor& ring) {
    Monomial m(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i)
        m[i] = ring.order(i);
    return m;
}

} // namespace

Integer Ambient::integrate_top(const RingElement& alpha) const {
    if (!alpha.is_homogeneous(dim))
        throw ArgumentError("integration over " + id + " needs a class of degree " + std::to_string(dim) + ", got " +
                            alpha.to_string());
    return (fundamental * alpha).coefficient(top_monomial(*ring));
}

Ambient make_projective(int n) {
    if (n < 1)
        throw ArgumentError("projective space needs n >= 1");
    auto ring = make_ring({{"w", n}});
    auto w = RingElement::generator(ring, "w");
    auto one = RingElement::constant(ring, 1);
    return Ambient{
        .id = "P" + std::to_string(n),
        .kind = AmbientKind::Projective,
        .dim = n,
        .ring = ring,
        .polarization = w,
        .chern = (one + w).pow(n + 1),
        .fundamental = one,
        .embed_dim = n,
    };
}

Ambient make_biprojective(int m, int n) {
    if (m < 1 || n < 1)
        throw ArgumentError("biprojective space needs m, n >= 1");
    auto ring = make_ring({{"w_x", m}, {"w_y", n}});
    auto wx = RingElement::generator(ring, "w_x");
    auto wy = RingElement::generator(ring, "w_y");
    auto one = RingElement::constant(ring, 1);
    return Ambient{
        .id = "P" + std::to_string(m) + "xP" + std::to_string(n),
        .kind = AmbientKind::Biprojective,
        .dim = m + n,
        .ring = ring,
        .polarization = wx + wy,
        .chern = (one + wx).pow(m + 1) * (one + wy).pow(n + 1),
        .fundamental = one,
        .embed_dim = (m + 1) * (n + 1) - 1,
    };
}

Ambient make_blowup_p2(int embed_dim) {
    if (embed_dim < 2)
        throw ArgumentError("embedding dimension must be at least the ambient dimension");
    auto ring = make_ring({{"w_x", 2}, {"w_y", 1}});
    auto wx = RingElement::generator(ring, "w_x");
    auto wy = RingElement::generator(ring, "w_y");
    auto one = RingElement::constant(ring, 1);
    // c(TY) = c(T(P^2 x P^1)) / c(N) with N = L|_Y.
    return Ambient{
        .id = "BlP2",
        .kind = AmbientKind::BlowupP2,
        .dim = 2,
        .ring = ring,
        .polarization = wx + wy,
        .chern = (one + wx).pow(3) * (one + wy).pow(2) * (one + wx + wy).inverse(),
        .fundamental = wx + wy,
        .embed_dim = embed_dim,
    };
}

Support Support::full(const Ambient& ambient, std::string id) {
    if (ambient.hypersurface_model())
        throw ArgumentError("ambient " + ambient.id + " admits no full-space support");
    Support s;
    s.id_ = std::move(id);
    s.ambient_id_ = ambient.id;
    s.dim_ = ambient.dim;
    s.ring_ = ambient.ring;
    s.ambient_ring_ = ambient.ring;
    s.full_ = true;
    s.degree_ = ambient.degree();
    for (const auto& g : ambient.ring->generators())
        s.images_.push_back(ambient.generator(g.name));
    s.ambient_fundamental_ = ambient.fundamental;
    return s;
}

Support Support::linear(const Ambient& ambient, std::string id, int dim, const std::vector<Integer>& coefficients,
                        Integer degree, std::set<std::string> points) {
    if (coefficients.size() != ambient.ring->size())
        throw ArgumentError("support " + id + ": need one restriction coefficient per ambient generator");
    if (dim < 0)
        throw ArgumentError("support " + id + ": negative dimension");
    auto ring = make_ring({{"h", dim}});
    auto h = RingElement::generator(ring, "h");
    std::vector<RingElement> images;
    for (const auto& c : coefficients)
        images.push_back(h * c);
    return from_images(ambient, std::move(id), dim, std::move(images), std::move(degree), std::move(points));
}

Support Support::from_images(const Ambient& ambient, std::string id, int dim, std::vector<RingElement> images,
                             Integer degree, std::set<std::string> points) {
    if (dim < 0 || dim > ambient.dim)
        throw ArgumentError("support " + id + ": dimension must lie in [0, " + std::to_string(ambient.dim) + "]");
    if (ambient.hypersurface_model() && dim >= ambient.dim)
        throw ArgumentError("support " + id + ": only proper supports are allowed on " + ambient.id);
    if (degree < 1)
        throw ArgumentError("support " + id + ": fundamental degree must be positive");
    if (images.size() != ambient.ring->size())
        throw ArgumentError("support " + id + ": need one image per ambient generator");
    const RingPtr ring = images.front().ring();
    if (ring->size() != 1 || ring->order(0) != dim)
        throw ArgumentError("support " + id + ": restricted ring must be Z[h]/(h^(dim+1))");
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i].is_homogeneous(1))
            throw ArgumentError("support " + id + ": restriction must preserve degree");
        // g_i^{n_i+1} = 0 must map to 0 for the substitution to be a homomorphism.
        if (!images[i].pow(ambient.ring->order(i) + 1).is_zero())
            throw ArgumentError("support " + id + ": restriction of " + ambient.ring->generators()[i].name +
                                " violates its nilpotency relation");
    }
    Support s;
    s.id_ = std::move(id);
    s.ambient_id_ = ambient.id;
    s.dim_ = dim;
    s.ring_ = ring;
    s.ambient_ring_ = ambient.ring;
    s.degree_ = std::move(degree);
    s.points_ = std::move(points);
    s.images_ = std::move(images);
    return s;
}

RingElement Support::restrict(const RingElement& gamma) const {
    if (!(*gamma.ring() == *ambient_ring_))
        throw StructuralError("cannot restrict " + gamma.to_string() + " to support " + id_ + ": wrong ring");
    if (full_)
        return gamma;
    return substitute(gamma, ring_, images_);
}

Integer Support::integrate(const RingElement& gamma) const {
    if (!(*gamma.ring() == *ring_))
        throw StructuralError("integrand does not live on support " + id_);
    if (!gamma.is_homogeneous(dim_))
        throw ArgumentError("integral over " + id_ + " needs a class of degree " + std::to_string(dim_) + ", got " +
                            gamma.to_string());
    if (full_)
        return (*ambient_fundamental_ * gamma).coefficient(top_monomial(*ring_));
    return gamma.coefficient(Monomial{dim_}) * degree_;
}

RingElement restrict(const RingElement& gamma, const Support& support) { return support.restrict(gamma); }

Integer integrate(const Support& support, const RingElement& gamma) { return support.integrate(gamma); }

Space::Space(Ambient ambient, std::optional<std::string> full_support_id) : ambient_(std::move(ambient)) {
    if (ambient_.hypersurface_model())
        full_support_id.reset();
    if (full_support_id) {
        full_id_ = full_support_id;
        supports_.emplace(*full_id_, Support::full(ambient_, *full_id_));
    }
}

void Space::add_point(const std::string& id) {
    if (points_.count(id))
        throw ArgumentError("duplicate marked point '" + id + "'");
    if (supports_.count(id))
        throw ArgumentError("marked point '" + id + "' clashes with a support id");
    points_.insert(id);
    std::vector<Integer> zeros(ambient_.ring->size(), 0);
    supports_.emplace(id, Support::linear(ambient_, id, 0, zeros, 1, {id}));
}

void Space::add_support(Support support) {
    if (support.ambient_id() != ambient_.id)
        throw StructuralError("support " + support.id() + " belongs to " + support.ambient_id() + ", not " +
                              ambient_.id);
    if (supports_.count(support.id()))
        throw ArgumentError("duplicate support id '" + support.id() + "'");
    for (const auto& p : support.points())
        if (!points_.count(p))
            throw ArgumentError("support " + support.id() + " references unknown point '" + p + "'");
    const std::string id = support.id();
    supports_.emplace(id, std::move(support));
}

void Space::declare_inclusion(const std::string& sub, const std::string& super) {
    const Support& s = support(sub);
    const Support& t = support(super);
    if (s.dim() > t.dim())
        throw ArgumentError("inclusion " + sub + " in " + super + ": dimension decreases");
    for (const auto& p : s.points())
        if (!contains(t, p))
            throw ArgumentError("inclusion " + sub + " in " + super + ": point " + p + " lies on " + sub +
                                " but is not declared on " + super);
    inclusions_.emplace_back(sub, super);
}

const Support& Space::support(const std::string& id) const {
    auto it = supports_.find(id);
    if (it == supports_.end())
        throw ArgumentError("unknown support '" + id + "' on " + ambient_.id);
    return it->second;
}

bool Space::contains(const Support& support, const std::string& point) const {
    return support.is_full() ? points_.count(point) != 0 : support.points().count(point) != 0;
}

const Support& Space::point_support(const std::string& point) const {
    if (!points_.count(point))
        throw ArgumentError("unknown marked point '" + point + "'");
    return support(point);
}

Embedding segre_embedding(const Ambient& biprojective) {
    if (biprojective.kind != AmbientKind::Biprojective)
        throw ArgumentError("Segre embedding needs a biprojective source");
    Ambient target = make_projective(biprojective.embed_dim);
    return Embedding{
        .id = "segre",
        .source = biprojective,
        .target = target,
        .pullback = {biprojective.polarization},
    };
}

Embedding blowup_inclusion(const Ambient& blowup) {
    if (blowup.kind != AmbientKind::BlowupP2)
        throw ArgumentError("blow-up inclusion needs the blow-up model as source");
    Ambient target = make_biprojective(2, 1);
    return Embedding{
        .id = "blowup_inclusion",
        .source = blowup,
        .target = target,
        .pullback = {blowup.generator("w_x"), blowup.generator("w_y")},
    };
}

Embedding catalog_embedding(const std::string& id, const Ambient& source) {
    if (id == "segre")
        return segre_embedding(source);
    if (id == "blowup_inclusion")
        return blowup_inclusion(source);
    throw ArgumentError("unknown embedding '" + id + "'");
}

} // namespace gencyc
