#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gencyc {

using Integer = boost::multiprecision::cpp_int;

/// One generator g of Z[g_1,...,g_r]/(g_i^{n_i+1}).
struct Generator {
    std::string name;
    int order = 1; // g^(order+1) == 0

    bool operator==(const Generator&) const = default;
};

/// Shape of a graded ring with nilpotent generators. Compared by value.
class RingDescriptor {
public:
    explicit RingDescriptor(std::vector<Generator> generators);

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    int order(std::size_t i) const { return generators_.at(i).order; }

    /// Index of the named generator; throws ArgumentError if absent.
    std::size_t index_of(const std::string& name) const;
    bool has(const std::string& name) const;

    /// Largest total degree carried by a nonzero monomial.
    int top_degree() const noexcept { return top_degree_; }

    bool operator==(const RingDescriptor& other) const { return generators_ == other.generators_; }

private:
    std::vector<Generator> generators_;
    int top_degree_ = 0;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr make_ring(std::vector<Generator> generators);

/// Exponent vector of a monomial.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

/// Graded order: lower total degree first, then lexicographically larger exponents first.
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact element of a nilpotent graded ring. Never stores zero coefficients.
class RingElement {
public:
    using Terms = std::map<Monomial, Integer, GradedOrder>;

    explicit RingElement(RingPtr ring);

    static RingElement constant(RingPtr ring, const Integer& c);
    static RingElement generator(RingPtr ring, const std::string& name);
    static RingElement monomial(RingPtr ring, Monomial exponents, const Integer& c = 1);

    const RingPtr& ring() const noexcept { return ring_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    Integer constant_term() const;
    /// True when every stored monomial has total degree d (zero is homogeneous of every degree).
    bool is_homogeneous(int d) const;
    /// Largest total degree present, or -1 for zero.
    int max_degree() const;
    Integer coefficient(const Monomial& m) const;

    RingElement graded_part(int d) const;
    RingElement pow(long long e) const;
    /// Inverse of a unit with constant term +1 or -1.
    RingElement inverse() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const RingElement& other);
    RingElement& operator*=(const Integer& c);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    friend RingElement operator*(const Integer& c, RingElement a) { return a *= c; }
    friend RingElement operator*(RingElement a, const Integer& c) { return a *= c; }

    bool operator==(const RingElement& other) const;

    /// Human-readable form such as "1 + 2*w_x + 4*w_x*w_y".
    std::string to_string() const;

private:
    void require_same_ring(const RingElement& other) const;
    void add_term(const Monomial& m, const Integer& c);
    bool in_bounds(const Monomial& m) const;

    RingPtr ring_;
    Terms terms_;
};

std::string monomial_to_string(const RingDescriptor& ring, const Monomial& m);
/// Every nonzero monomial of total degree `degree`, in lexicographic order.
std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int degree);

/// Ring homomorphism sending generator i of x's ring to images[i] (all in `target`).
RingElement substitute(const RingElement& x, const RingPtr& target, std::span<const RingElement> images);

} // namespace gencyc
