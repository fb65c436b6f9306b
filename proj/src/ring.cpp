#include "gencyc/ring.hpp"

#include "gencyc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gencyc {

RingDescriptor::RingDescriptor(std::vector<Generator> generators) : generators_(std::move(generators)) {
    if (generators_.empty())
        throw ArgumentError("ring needs at least one generator");
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.name.empty())
            throw ArgumentError("generator name must be nonempty");
        if (!seen.insert(g.name).second)
            throw ArgumentError("duplicate generator name '" + g.name + "'");
        // order 0 means g == 0; used for the ring Z of a point support.
        if (g.order < 0)
            throw ArgumentError("generator '" + g.name + "' has negative nilpotency order");
        top_degree_ += g.order;
    }
}

std::size_t RingDescriptor::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    throw ArgumentError("unknown generator '" + name + "'");
}

bool RingDescriptor::has(const std::string& name) const {
    return std::any_of(generators_.begin(), generators_.end(), [&](const Generator& g) { return g.name == name; });
}

RingPtr make_ring(std::vector<Generator> generators) {
    return std::make_shared<const RingDescriptor>(std::move(generators));
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GradedOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db)
        return da < db;
    return a > b;
}

RingElement::RingElement(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_)
        throw ArgumentError("null ring descriptor");
}

RingElement RingElement::constant(RingPtr ring, const Integer& c) {
    RingElement r(std::move(ring));
    r.add_term(Monomial(r.ring_->size(), 0), c);
    return r;
}

RingElement RingElement::generator(RingPtr ring, const std::string& name) {
    Monomial m(ring->size(), 0);
    m[ring->index_of(name)] = 1;
    return monomial(std::move(ring), std::move(m));
}

RingElement RingElement::monomial(RingPtr ring, Monomial exponents, const Integer& c) {
    RingElement r(std::move(ring));
    if (exponents.size() != r.ring_->size())
        throw ArgumentError("exponent vector length does not match ring");
    if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; }))
        throw ArgumentError("negative exponent in monomial");
    if (r.in_bounds(exponents))
        r.add_term(exponents, c);
    return r;
}

Integer RingElement::constant_term() const { return coefficient(Monomial(ring_->size(), 0)); }

bool RingElement::is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

int RingElement::max_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, total_degree(m));
    return d;
}

Integer RingElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

RingElement RingElement::graded_part(int d) const {
    RingElement r(ring_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == d)
            r.terms_.emplace(m, c);
    return r;
}

RingElement RingElement::pow(long long e) const {
    if (e < 0)
        return inverse().pow(-e);
    RingElement result = constant(ring_, 1);
    RingElement base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

RingElement RingElement::inverse() const {
    const Integer c0 = constant_term();
    if (c0 != 1 && c0 != -1)
        throw InversionError("element " + to_string() + " is not a unit over Z (constant term must be +1 or -1)");
    // u = c0 (1 + c0 n) with n nilpotent, so u^{-1} = c0 * sum_k (-c0 n)^k.
    RingElement nilpotent = *this - constant(ring_, c0);
    RingElement step = nilpotent * (-c0);
    RingElement sum = constant(ring_, 1);
    RingElement power = constant(ring_, 1);
    for (int k = 1; k <= ring_->top_degree(); ++k) {
        power *= step;
        if (power.is_zero())
            break;
        sum += power;
    }
    return sum * c0;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& other) {
    require_same_ring(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    require_same_ring(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
    require_same_ring(other);
    RingElement product(ring_);
    Monomial m(ring_->size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            if (in_bounds(m))
                product.add_term(m, ca * cb);
        }
    }
    terms_ = std::move(product.terms_);
    return *this;
}

RingElement& RingElement::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

bool RingElement::operator==(const RingElement& other) const {
    return (ring_ == other.ring_ || *ring_ == *other.ring_) && terms_ == other.terms_;
}

std::string RingElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool is_const = total_degree(m) == 0;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (is_const) {
            out << mag;
            continue;
        }
        if (mag != 1)
            out << mag << "*";
        out << monomial_to_string(*ring_, m);
    }
    return out.str();
}

void RingElement::require_same_ring(const RingElement& other) const {
    if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
        throw StructuralError("ring descriptor mismatch");
}

void RingElement::add_term(const Monomial& m, const Integer& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool RingElement::in_bounds(const Monomial& m) const {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > ring_->order(i))
            return false;
    return true;
}

std::string monomial_to_string(const RingDescriptor& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += ring.generators()[i].name;
        if (m[i] > 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

namespace {

void collect_monomials(const RingDescriptor& ring, int degree, std::size_t i, Monomial& current,
                       std::vector<Monomial>& out) {
    if (i == ring.size()) {
        if (degree == 0)
            out.push_back(current);
        return;
    }
    for (int e = 0; e <= std::min(degree, ring.order(i)); ++e) {
        current[i] = e;
        collect_monomials(ring, degree - e, i + 1, current, out);
    }
    current[i] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    Monomial scratch(ring.size(), 0);
    collect_monomials(ring, degree, 0, scratch, out);
    return out;
}

RingElement substitute(const RingElement& x, const RingPtr& target, std::span<const RingElement> images) {
    if (images.size() != x.ring()->size())
        throw ArgumentError("substitution needs one image per generator");
    // Cache powers of each image; exponents are bounded by the nilpotency orders.
    std::vector<std::vector<RingElement>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!(*images[i].ring() == *target))
            throw StructuralError("substitution image lives in the wrong ring");
        powers[i].push_back(RingElement::constant(target, 1));
        for (int e = 1; e <= x.ring()->order(i); ++e)
            powers[i].push_back(powers[i].back() * images[i]);
    }
    RingElement result(target);
    for (const auto& [m, c] : x.terms()) {
        RingElement term = RingElement::constant(target, c);
        for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i)
            if (m[i] > 0)
                term *= powers[i][m[i]];
        result += term;
    }
    return result;
}

} // namespace gencyc
