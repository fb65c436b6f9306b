#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace gencyc {

/// P^3 with the hyperplanes H2, H3, the surface Z of degree m+1 and the lines A, B.
nlohmann::json kokong_document(int m);
/// P^1 x P^1 with the full space Y, two fibers F1, F2 through the point x.
nlohmann::json segre_document();
/// Blow-up of P^2 at a point with exceptional curve E through the marked point p.
nlohmann::json blowup_document(int embed_dim = 5);
/// P^n with a k-plane V through the point o and V bullet V = V.
nlohmann::json planes_document(int n, int k);

/// Names accepted by builtin_document: kokong, segre, blowup, planes.
std::vector<std::string> builtin_names();
/// Builds a named document; `m` is used by kokong, `n`/`k` by planes.
nlohmann::json builtin_document(const std::string& name, int m = 3, int n = 4, int k = 2);

} // namespace gencyc
