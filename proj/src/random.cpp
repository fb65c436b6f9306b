#include "gencyc/random.hpp"

#include <algorithm>

namespace gencyc {

namespace {

Space projective_space(int n) {
    Space space(make_projective(n));
    space.add_point("o");
    for (int k = 1; k < n; ++k)
        space.add_support(Support::linear(space.ambient(), "L" + std::to_string(k), k, {1}, 1, {"o"}));
    if (n >= 2)
        space.add_support(Support::linear(space.ambient(), "Q", n - 1, {1}, 2, {"o"}));
    return space;
}

Space biprojective_space(int m, int n) {
    Space space(make_biprojective(m, n));
    space.add_point("o");
    space.add_support(Support::linear(space.ambient(), "Fx", n, {0, 1}, 1, {"o"}));
    space.add_support(Support::linear(space.ambient(), "Fy", m, {1, 0}, 1, {"o"}));
    if (m == 1 && n == 1)
        space.add_support(Support::linear(space.ambient(), "D", 1, {1, 1}, 1, {"o"}));
    return space;
}

Space blowup_space() {
    Space space(make_blowup_p2());
    space.add_point("p");
    space.add_point("q");
    space.add_support(Support::linear(space.ambient(), "E", 1, {0, 1}, 1, {"p"}));
    space.add_support(Support::linear(space.ambient(), "Lp", 1, {1, 0}, 1, {"p"}));
    space.add_support(Support::linear(space.ambient(), "L", 1, {1, 1}, 1, {"q"}));
    return space;
}

} // namespace

std::vector<Space> catalog_spaces() {
    std::vector<Space> out;
    for (int n = 1; n <= 5; ++n)
        out.push_back(projective_space(n));
    out.push_back(biprojective_space(1, 1));
    out.push_back(biprojective_space(1, 2));
    out.push_back(biprojective_space(2, 2));
    out.push_back(blowup_space());
    return out;
}

RingElement random_homogeneous(const RingPtr& ring, int degree, Rng& rng, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    RingElement out(ring);
    for (const auto& m : monomials_of_degree(*ring, degree))
        out += RingElement::monomial(ring, m, coeff(rng));
    return out;
}

GCycleClass random_class(const Space& space, Rng& rng, int lo, int hi, int max_components, int bound) {
    GCycleClass mu(space.ambient().id);
    std::vector<const Support*> candidates;
    for (const auto& [id, s] : space.supports())
        if (s.dim() >= lo)
            candidates.push_back(&s);
    if (candidates.empty() || hi < lo)
        return mu;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    std::uniform_int_distribution<int> count(1, max_components);
    for (int i = count(rng); i > 0; --i) {
        const Support& s = *candidates[pick(rng)];
        std::uniform_int_distribution<int> dim(lo, std::min(hi, s.dim()));
        const int ell = dim(rng);
        const RingElement coeff = random_homogeneous(s.ring(), s.dim() - ell, rng, bound);
        GCycleClass piece(space.ambient().id);
        piece.add(space, s.id(), ell, coeff);
        mu += piece;
    }
    return mu;
}

} // namespace gencyc
