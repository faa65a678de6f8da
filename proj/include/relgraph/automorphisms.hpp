#pragma once

// Exhaustive automorphism search for small relations.
//
// The search assigns images vertex by vertex and prunes on loop, out-degree
// and in-degree signatures and on arcs among already-assigned vertices, so
// sparse instances finish far below n! work. It is still exponential in the
// worst case; callers gate it with a size threshold.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "relgraph/groups.hpp"
#include "relgraph/relation.hpp"

namespace relgraph {

using Permutation = std::vector<Vertex>;

inline constexpr std::size_t kDefaultBruteMaxN = 10;

bool is_automorphism(const Relation& rel, const Permutation& perm);

// Calls `visit` for each automorphism in lexicographic order of the image
// sequence; stop early by returning false. With `pin`, only automorphisms
// sending pin->first to pin->second are visited.
void for_each_automorphism(const Relation& rel, const std::function<bool(const Permutation&)>& visit,
                           std::optional<std::pair<Vertex, Vertex>> pin = std::nullopt);

// All automorphisms; refuses n > max_n.
std::vector<Permutation> automorphisms_brute(const Relation& rel, std::size_t max_n = kDefaultBruteMaxN);

// Orbit of vertex 0 under the full automorphism group.
VertexSet orbit_of_zero(const Relation& rel, std::size_t max_n = kDefaultBruteMaxN);

// True iff the orbit of vertex 0 is all of V; refuses n > max_n.
bool is_point_transitive_brute(const Relation& rel, std::size_t max_n = kDefaultBruteMaxN);

// Certificate from the exhaustive search (BruteForce or NotTransitive), or
// Uncertified when n exceeds max_n.
TransitivityCertificate certify_transitivity(const Relation& rel, std::size_t max_n = kDefaultBruteMaxN);

}  // namespace relgraph
