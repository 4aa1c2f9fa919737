#pragma once

// JSON forms of the library objects.
//
// Lie algebra:    {"dim": n, "c": [[i, j, k, value], ...] (i < j),
//                  "inner_product": dense rows (omitted when identity),
//                  "labels": [...] (omitted when empty)}
// Sparse matrix:  {"rows": r, "cols": c, "entries": [[i, j, value], ...]}
// Representation: Lie algebra object plus "matrices": [sparse, ...] and
//                 "space_inner_product" (omitted when identity)
// Clifford module: {"n", "dim", "square", "gammas": [sparse, ...]}
// Space:          Lie algebra object plus "id", "blocks": {"k", "m1", "m2"}
//                 (index lists), "flags" and "extra_kernel_elements".
// Doubles are written in shortest round-trip form, so reading back is exact.

#include "isocoh/clifford.hpp"
#include "isocoh/spaces.hpp"

#include <json.hpp>

namespace isocoh {

using Json = nlohmann::json;

Json sparse_to_json(const Mat& m);
Mat sparse_from_json(const Json& j);

Json to_json(const LieAlgebra& alg);
LieAlgebra lie_algebra_from_json(const Json& j);

Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json to_json(const CliffordModule& module);

Json to_json(const ReductiveSpace& space);
ReductiveSpace space_from_json(const Json& j);

}  // namespace isocoh
