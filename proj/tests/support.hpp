#pragma once

// Test-only helpers: instance builders and brute-force references that do not
// share code paths with the library routines they check.

#include <cstdint>
#include <random>
#include <vector>

#include "relgraph/groups.hpp"
#include "relgraph/relation.hpp"

namespace relgraph::testing {

inline Relation circulant(std::size_t n, std::vector<Element> generators, bool reflexive) {
  const FiniteGroup z = cyclic(n);
  return cayley_relation(z, GroupSubset(z, generators), reflexive).relation;
}

inline Relation directed_cycle(std::size_t n, bool reflexive = false) { return circulant(n, {1}, reflexive); }

inline Relation random_relation(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution arc(p);
  Relation rel(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (arc(rng)) rel.add_arc(u, v);
    }
  }
  return rel;
}

inline VertexSet random_set(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution in(0.5);
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if (in(rng)) s.insert(v);
  }
  return s;
}

// Adjacency as bitmasks (n <= 64), for references written without VertexSet.
inline std::vector<std::uint64_t> masks(const Relation& rel) {
  std::vector<std::uint64_t> out(rel.size(), 0);
  for (Vertex u = 0; u < rel.size(); ++u) {
    for (Vertex v = 0; v < rel.size(); ++v) {
      if (rel.has_arc(u, v)) out[u] |= std::uint64_t{1} << v;
    }
  }
  return out;
}

inline std::uint64_t mask_image(const std::vector<std::uint64_t>& adj, std::uint64_t set) {
  std::uint64_t out = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if ((set >> v) & 1u) out |= adj[v];
  }
  return out;
}

// Endpoints of walks of length exactly j from v.
inline std::uint64_t mask_walks(const std::vector<std::uint64_t>& adj, Vertex v, std::size_t j) {
  std::uint64_t cur = std::uint64_t{1} << v;
  for (std::size_t i = 0; i < j; ++i) cur = mask_image(adj, cur);
  return cur;
}

// min over v of min{k >= 1 : v reachable from v by a walk of length k}; 0 encodes infinity.
inline std::size_t brute_girth(const Relation& rel) {
  const auto adj = masks(rel);
  std::size_t best = 0;
  for (Vertex v = 0; v < rel.size(); ++v) {
    for (std::size_t k = 1; k <= rel.size(); ++k) {
      if ((mask_walks(adj, v, k) >> v) & 1u) {
        if (best == 0 || k < best) best = k;
        break;
      }
    }
  }
  return best;
}

// (value, every optimal X) for fixed s, t by subset enumeration; value = SIZE_MAX if none.
struct BruteSeparation {
  std::size_t value = SIZE_MAX;
  std::vector<std::uint64_t> optimal;
};

inline BruteSeparation brute_separation(const Relation& rel, Vertex s, Vertex t) {
  const auto adj = masks(rel);
  const std::size_t n = rel.size();
  BruteSeparation out;
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
    if (!((x >> s) & 1u)) continue;
    const std::uint64_t img = mask_image(adj, x);
    if (((x | img) >> t) & 1u) continue;
    const auto b = static_cast<std::size_t>(__builtin_popcountll(img & ~x));
    if (b < out.value) {
      out.value = b;
      out.optimal.clear();
    }
    if (b == out.value) out.optimal.push_back(x);
  }
  return out;
}

inline VertexSet set_of(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if ((mask >> v) & 1u) s.insert(v);
  }
  return s;
}

}  // namespace relgraph::testing
