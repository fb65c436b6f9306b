#pragma once

#include "gencyc/gcycle.hpp"
#include "gencyc/spaces.hpp"

#include <random>
#include <vector>

namespace gencyc {

using Rng = std::mt19937_64;

/// Every catalog ambient with a handful of supports and marked points:
/// P^1..P^5, P^1xP^1, P^1xP^2, P^2xP^2 and the blow-up of P^2.
std::vector<Space> catalog_spaces();

/// Homogeneous element of the given degree with coefficients in [-bound, bound].
RingElement random_homogeneous(const RingPtr& ring, int degree, Rng& rng, int bound = 5);

/// Random class whose components have dimension in [lo, hi].
GCycleClass random_class(const Space& space, Rng& rng, int lo, int hi, int max_components = 4, int bound = 5);

} // namespace gencyc
