#include "gencyc/pushforward.hpp"

#include "gencyc/errors.hpp"

namespace gencyc {

namespace {

bool is_point_support(const Space& space, const Support& s) { return s.dim() == 0 && space.has_point(s.id()); }

/// c with x == c * base, or nullopt.
std::optional<Integer> multiple_of(const RingElement& x, const RingElement& base) {
    if (x.is_zero())
        return Integer(0);
    if (base.is_zero())
        return std::nullopt;
    const auto& [m, b] = *base.terms().begin();
    const Integer a = x.coefficient(m);
    if (a % b != 0)
        return std::nullopt;
    const Integer c = a / b;
    if (!(x == base * c))
        return std::nullopt;
    return c;
}

void check_embedding(const Embedding& e) {
    if (e.pullback.size() != e.target.ring->size())
        throw ArgumentError("embedding " + e.id + ": need one pullback per target generator");
    if (!(e.pull_back(e.target.polarization) == e.source.polarization))
        throw ArgumentError("embedding " + e.id + ": target polarization must pull back to the source polarization");
}

Support image_of(const Embedding& e, const Space& source, const Support& s) {
    const std::string id = image_support_id(e, s.id());
    const Ambient& src = source.ambient();
    if (!s.is_full()) {
        std::vector<RingElement> images;
        for (const auto& pb : e.pullback)
            images.push_back(s.restrict(pb));
        return Support::from_images(e.target, id, s.dim(), std::move(images), s.degree(), s.points());
    }
    // The image of Y: its restricted ring is generated by h = omega_L.
    auto ring = make_ring({{"h", s.dim()}});
    auto h = RingElement::generator(ring, "h");
    std::vector<RingElement> images;
    for (std::size_t t = 0; t < e.pullback.size(); ++t) {
        auto c = multiple_of(e.pullback[t], src.polarization);
        if (!c)
            throw ArgumentError("embedding " + e.id + ": pullback of " + e.target.ring->generators()[t].name +
                                " is not a multiple of omega_L; image of " + s.id() + " is not representable");
        images.push_back(h * *c);
    }
    return Support::from_images(e.target, id, s.dim(), std::move(images), src.degree(), source.points());
}

} // namespace

std::string image_support_id(const Embedding& embedding, const std::string& support) {
    return embedding.id + "(" + support + ")";
}

Space image_space(const Embedding& embedding, const Space& source) {
    check_embedding(embedding);
    if (source.ambient().id != embedding.source.id)
        throw StructuralError("embedding " + embedding.id + " starts at " + embedding.source.id + ", not " +
                              source.ambient().id);
    Space target(embedding.target, embedding.target.id);
    for (const auto& p : source.points())
        target.add_point(p);
    for (const auto& [id, s] : source.supports())
        if (!is_point_support(source, s))
            target.add_support(image_of(embedding, source, s));
    return target;
}

GCycleClass pushforward(const Embedding& embedding, const Space& source, const Space& target, const GCycleClass& mu) {
    check_embedding(embedding);
    if (mu.ambient() != source.ambient().id)
        throw StructuralError("class does not live on the embedding source");
    GCycleClass out(target.ambient().id);
    for (const auto& [key, coeff] : mu.parts()) {
        const Support& s = source.support(key.support);
        const std::string image_id = is_point_support(source, s) ? s.id() : image_support_id(embedding, s.id());
        const Support& image = target.support(image_id);
        if (!s.is_full()) {
            out.add(target, image_id, key.dim, coeff);
            continue;
        }
        const int j = s.dim() - key.dim;
        auto c = multiple_of(coeff, source.ambient().polarization.pow(j));
        if (!c)
            throw ArgumentError("coefficient " + coeff.to_string() + " on " + s.id() +
                                " is not a multiple of a power of omega_L; push-forward not representable");
        out.add(target, image_id, key.dim, RingElement::monomial(image.ring(), {j}, *c));
    }
    return out;
}

Pushforward pushforward(const Embedding& embedding, const Space& source, const GCycleClass& mu) {
    Space target = image_space(embedding, source);
    GCycleClass cls = pushforward(embedding, source, target, mu);
    return {std::move(target), std::move(cls)};
}

} // namespace gencyc
