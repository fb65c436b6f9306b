#include "gencyc/gcycle.hpp"

#include "gencyc/errors.hpp"

#include <sstream>

namespace gencyc {

std::vector<Component> GCycleClass::components() const {
    std::vector<Component> out;
    out.reserve(parts_.size());
    for (const auto& [key, coeff] : parts_)
        out.push_back({key.support, key.dim, coeff});
    return out;
}

int GCycleClass::top_dim() const { return parts_.empty() ? -1 : parts_.begin()->first.dim; }

bool GCycleClass::pure() const { return parts_.empty() || parts_.begin()->first.dim == parts_.rbegin()->first.dim; }

GCycleClass& GCycleClass::add(const Space& space, const std::string& support, int dim, const RingElement& coeff) {
    if (space.ambient().id != ambient_)
        throw StructuralError("class on " + ambient_ + " cannot take a component from " + space.ambient().id);
    const Support& s = space.support(support);
    if (dim < 0 || dim > s.dim())
        throw ArgumentError("component on " + support + " must have dimension in [0, " + std::to_string(s.dim()) +
                            "], got " + std::to_string(dim));
    if (!(*coeff.ring() == *s.ring()))
        throw StructuralError("coefficient of component on " + support + " lives in the wrong ring");
    if (!coeff.is_homogeneous(s.dim() - dim))
        throw ArgumentError("coefficient " + coeff.to_string() + " on " + support + " must be homogeneous of degree " +
                            std::to_string(s.dim() - dim));
    merge({support, dim}, coeff);
    return *this;
}

GCycleClass& GCycleClass::operator+=(const GCycleClass& other) {
    require_same_ambient(other);
    for (const auto& [key, coeff] : other.parts_)
        merge(key, coeff);
    return *this;
}

GCycleClass& GCycleClass::operator-=(const GCycleClass& other) {
    require_same_ambient(other);
    for (const auto& [key, coeff] : other.parts_)
        merge(key, -coeff);
    return *this;
}

GCycleClass& GCycleClass::operator*=(const Integer& c) {
    if (c == 0) {
        parts_.clear();
        return *this;
    }
    for (auto& [key, coeff] : parts_)
        coeff *= c;
    return *this;
}

std::string GCycleClass::to_string() const {
    if (parts_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : parts_) {
        if (!first)
            out << " + ";
        first = false;
        const std::string c = coeff.to_string();
        if (c != "1")
            out << "(" << c << ")*";
        out << key.support << "@" << key.dim;
    }
    return out.str();
}

void GCycleClass::merge(const Key& key, const RingElement& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = parts_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            parts_.erase(it);
    }
}

void GCycleClass::require_same_ambient(const GCycleClass& other) const {
    if (ambient_ != other.ambient_)
        throw StructuralError("classes live on different ambients: " + ambient_ + " and " + other.ambient_);
}

GCycleClass gc_add(const GCycleClass& a, const GCycleClass& b) { return a + b; }

GCycleClass gc_scale(const Integer& c, const GCycleClass& a) { return c * a; }

GCycleClass fundamental(const Space& space, const std::string& support, const Integer& c) {
    const Support& s = space.support(support);
    GCycleClass mu(space.ambient().id);
    return mu.add(space, support, s.dim(), RingElement::constant(s.ring(), c));
}

GCycleClass point_class(const Space& space, const std::string& point, const Integer& c) {
    return fundamental(space, space.point_support(point).id(), c);
}

GCycleClass unit_class(const Space& space) {
    if (!space.full_support_id())
        throw ArgumentError("ambient " + space.ambient().id + " has no full-space support");
    return fundamental(space, *space.full_support_id());
}

GCycleClass wedge(const Space& space, const RingElement& gamma, const GCycleClass& mu) {
    if (mu.ambient() != space.ambient().id)
        throw StructuralError("class does not live on " + space.ambient().id);
    GCycleClass out(mu.ambient());
    for (const auto& [key, coeff] : mu.parts()) {
        const Support& s = space.support(key.support);
        const RingElement restricted = s.restrict(gamma);
        for (int j = 0; j <= key.dim; ++j) {
            RingElement part = restricted.graded_part(j);
            if (part.is_zero())
                continue;
            part *= coeff;
            if (!part.is_zero())
                out.add(space, key.support, key.dim - j, part);
        }
    }
    return out;
}

GCycleClass dim_part(const GCycleClass& mu, int ell) {
    if (ell < 0)
        throw ArgumentError("dimension must be nonnegative");
    return mu.filter([ell](const GCycleClass::Key& k) { return k.dim == ell; });
}

Integer deg_L(const Space& space, const GCycleClass& mu) {
    Integer total = 0;
    for (const auto& [key, coeff] : mu.parts()) {
        const Support& s = space.support(key.support);
        total += s.integrate(coeff * s.restrict(space.ambient().polarization).pow(key.dim));
    }
    return total;
}

MultMap mult_at(const Space& space, const GCycleClass& mu, const std::string& point) {
    if (!space.has_point(point))
        throw ArgumentError("unknown marked point '" + point + "'");
    MultMap out;
    for (int ell = 0; ell <= mu.top_dim(); ++ell)
        out[ell] = 0;
    for (const auto& [key, coeff] : mu.parts()) {
        const Support& s = space.support(key.support);
        if (key.dim == s.dim() && space.contains(s, point))
            out[key.dim] += coeff.constant_term();
    }
    return out;
}

bool same_multiplicities(const MultMap& a, const MultMap& b) {
    auto at = [](const MultMap& m, int k) {
        auto it = m.find(k);
        return it == m.end() ? Integer(0) : it->second;
    };
    for (const auto& [k, v] : a)
        if (at(b, k) != v)
            return false;
    for (const auto& [k, v] : b)
        if (at(a, k) != v)
            return false;
    return true;
}

Integer total(const MultMap& m) {
    Integer sum = 0;
    for (const auto& [k, v] : m)
        sum += v;
    return sum;
}

bool is_effective(const GCycleClass& mu) {
    for (const auto& [key, coeff] : mu.parts())
        for (const auto& [m, c] : coeff.terms())
            if (c < 0)
                return false;
    return true;
}

FixMov fix_mov(const Space& space, const GCycleClass& mu) {
    auto is_fixed = [&](const GCycleClass::Key& k) { return k.dim == space.support(k.support).dim(); };
    return {mu.filter(is_fixed), mu.filter([&](const GCycleClass::Key& k) { return !is_fixed(k); })};
}

} // namespace gencyc
