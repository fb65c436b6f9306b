#pragma once

#include "gencyc/gcycle.hpp"
#include "gencyc/spaces.hpp"

namespace gencyc {

/// i_* mu together with the target space it lives on.
struct Pushforward {
    Space target;
    GCycleClass cls;
};

/// Build the target space of an embedding: image supports "<id>(S)" for every support of
/// `source`, and the same marked points.
Space image_space(const Embedding& embedding, const Space& source);

/// i_* mu. Components are re-parented to the image supports; deg_L is preserved because the
/// pullback of the target polarization is the source polarization.
GCycleClass pushforward(const Embedding& embedding, const Space& source, const Space& target, const GCycleClass& mu);

/// Convenience form that builds the image space as well.
Pushforward pushforward(const Embedding& embedding, const Space& source, const GCycleClass& mu);

/// Name of the image of support S.
std::string image_support_id(const Embedding& embedding, const std::string& support);

} // namespace gencyc
