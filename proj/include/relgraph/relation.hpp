#pragma once

// Finite relations Γ = (V, E) on V = [0, n), loops allowed, no multi-arcs.
//
// Successor sets are dense bit rows stored contiguously, row v holding Γ(v).
// All operations are pure: they take relations by const reference and
// return new values. Iteration is always in ascending vertex order.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relgraph/vertex_set.hpp"

namespace relgraph {

using Arc = std::pair<Vertex, Vertex>;

class Relation {
 public:
  Relation() = default;
  // n vertices, no arcs.
  explicit Relation(std::size_t n);

  static Relation from_edges(std::size_t n, std::span<const Arc> arcs);
  static Relation identity(std::size_t n);
  // E = V x V.
  static Relation complete(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t row_words() const noexcept { return words_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return ((rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u) != 0;
  }
  std::span<const Word> row(Vertex v) const noexcept { return {rows_.data() + v * words_, words_}; }
  // All rows, row-major; what the gather kernel consumes.
  std::span<const Word> rows() const noexcept { return rows_; }
  VertexSet successors(Vertex v) const;

  std::size_t arc_count() const noexcept;
  // Sorted ascending.
  std::vector<Arc> arcs() const;

  // Construction-time mutators. Relations are treated as values once built.
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> rows_;
};

// Length of a shortest directed cycle, or infinite for an acyclic relation.
class Girth {
 public:
  static Girth infinite() noexcept { return Girth(); }
  static Girth finite(std::size_t k) noexcept { return Girth(k); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  std::size_t value() const { return value_.value(); }
  // "4" or "infinite"
  std::string to_string() const;

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  explicit Girth(std::size_t k) : value_(k) {}
  std::optional<std::size_t> value_;
};

struct Restriction {
  Relation relation;
  // original_vertex[i] is the vertex of the parent relation that became vertex i.
  std::vector<Vertex> original_vertex;
};

VertexSet image(const Relation& rel, const VertexSet& set);
Relation reverse(const Relation& rel);
Relation reflexive_closure(const Relation& rel);
Relation remove_loops(const Relation& rel);

// (x, z) in compose(a, b) iff some y has (x, y) in a and (y, z) in b.
Relation compose(const Relation& first, const Relation& second);
// k >= 0: k-fold composition (k = 0 is the identity); k < 0: |k|-fold power of the reverse.
Relation power(const Relation& rel, long long k);

// Γ^j(v), computed as j iterated images of {v}.
VertexSet ball(const Relation& rel, Vertex v, std::size_t j);
// Γ^j(v) \ Γ^{j-1}(v), j >= 1.
VertexSet sphere(const Relation& rel, Vertex v, std::size_t j);

std::size_t degree(const Relation& rel, Vertex v);
// Common out-degree, or nullopt when degrees differ.
std::optional<std::size_t> regular_degree(const Relation& rel);

bool is_reflexive(const Relation& rel);
bool has_loops(const Relation& rel);
// Every ordered pair of distinct vertices is an arc (loops are not required).
bool covers_all_pairs(const Relation& rel);

Girth girth(const Relation& rel);
// Shortest directed cycle through v.
Girth girth_at(const Relation& rel, Vertex v);

Restriction restriction(const Relation& rel, const VertexSet& keep);

// Strong connectivity: every vertex reaches every other.
bool is_connected(const Relation& rel);

}  // namespace relgraph
