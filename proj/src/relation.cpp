#include "relgraph/relation.hpp"

#include <algorithm>

#include "relgraph/errors.hpp"

namespace relgraph {

namespace {

const simd::BitKernels& ops() { return simd::active_kernels(); }

[[noreturn, gnu::cold, gnu::noinline]] void throw_out_of_range(std::size_t n, Vertex v, const char* what) {
  throw InputError(std::string(what) + " " + std::to_string(v) + " out of range for n = " + std::to_string(n));
}

inline void check_vertex_of(const Relation& rel, Vertex v, const char* what) {
  if (v >= rel.size()) [[unlikely]] throw_out_of_range(rel.size(), v, what);
}

}  // namespace

Relation::Relation(std::size_t n) : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0) {}

Relation Relation::from_edges(std::size_t n, std::span<const Arc> arcs) {
  Relation rel(n);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    rel.add_arc(u, v);
  }
  return rel;
}

Relation Relation::identity(std::size_t n) {
  Relation rel(n);
  for (Vertex v = 0; v < n; ++v) rel.add_arc(v, v);
  return rel;
}

Relation Relation::complete(std::size_t n) {
  Relation rel(n);
  const VertexSet all = VertexSet::full(n);
  for (Vertex v = 0; v < n; ++v) std::copy_n(all.words().begin(), rel.words_, rel.rows_.begin() + v * rel.words_);
  return rel;
}

void Relation::check_vertex(Vertex v) const { check_vertex_of(*this, v, "vertex"); }

VertexSet Relation::successors(Vertex v) const {
  check_vertex(v);
  return VertexSet::from_words(n_, row(v));
}

std::size_t Relation::arc_count() const noexcept { return ops().popcount(rows_.data(), rows_.size()); }

std::vector<Arc> Relation::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (Vertex u = 0; u < n_; ++u) {
    VertexSet::from_words(n_, row(u)).for_each([&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

void Relation::add_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u * words_ + (v >> 6)] |= Word{1} << (v & 63);
}

void Relation::remove_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u * words_ + (v >> 6)] &= ~(Word{1} << (v & 63));
}

std::string Girth::to_string() const { return is_infinite() ? "infinite" : std::to_string(*value_); }

VertexSet image(const Relation& rel, const VertexSet& set) {
  if (set.universe() != rel.size()) {
    throw InputError("vertex set universe " + std::to_string(set.universe()) +
                     " does not match relation size " + std::to_string(rel.size()));
  }
  VertexSet out(rel.size());
  ops().gather_or(out.mutable_words().data(), set.words().data(), rel.rows().data(), rel.size(),
                  rel.row_words());
  return out;
}

Relation reverse(const Relation& rel) {
  Relation out(rel.size());
  for (const auto& [u, v] : rel.arcs()) out.add_arc(v, u);
  return out;
}

Relation reflexive_closure(const Relation& rel) {
  Relation out = rel;
  for (Vertex v = 0; v < rel.size(); ++v) out.add_arc(v, v);
  return out;
}

Relation remove_loops(const Relation& rel) {
  Relation out = rel;
  for (Vertex v = 0; v < rel.size(); ++v) out.remove_arc(v, v);
  return out;
}

Relation compose(const Relation& first, const Relation& second) {
  if (first.size() != second.size()) {
    throw InputError("cannot compose relations of sizes " + std::to_string(first.size()) + " and " +
                     std::to_string(second.size()));
  }
  // Row x of the composite is the image of Γ₁(x) under Γ₂.
  const std::size_t n = first.size();
  Relation out(n);
  for (Vertex x = 0; x < n; ++x) {
    const VertexSet reached = image(second, VertexSet::from_words(n, first.row(x)));
    reached.for_each([&](Vertex z) { out.add_arc(x, z); });
  }
  return out;
}

Relation power(const Relation& rel, long long k) {
  const Relation base = k < 0 ? reverse(rel) : rel;
  unsigned long long remaining = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                                       : static_cast<unsigned long long>(k);
  // Square-and-multiply; composition of powers of one relation commutes.
  Relation result = Relation::identity(rel.size());
  Relation square = base;
  while (remaining > 0) {
    if ((remaining & 1u) != 0) result = compose(result, square);
    remaining >>= 1;
    if (remaining > 0) square = compose(square, square);
  }
  return result;
}

VertexSet ball(const Relation& rel, Vertex v, std::size_t j) {
  check_vertex_of(rel, v, "vertex");
  VertexSet current = VertexSet::singleton(rel.size(), v);
  for (std::size_t step = 0; step < j; ++step) {
    VertexSet next = image(rel, current);
    if (next == current) break;  // fixed point: further images are identical
    current = std::move(next);
  }
  return current;
}

VertexSet sphere(const Relation& rel, Vertex v, std::size_t j) {
  if (j == 0) throw InputError("sphere requires j >= 1");
  check_vertex_of(rel, v, "vertex");
  VertexSet previous = ball(rel, v, j - 1);
  VertexSet current = image(rel, previous);
  return current - previous;
}

std::size_t degree(const Relation& rel, Vertex v) {
  check_vertex_of(rel, v, "vertex");
  return ops().popcount(rel.row(v).data(), rel.row_words());
}

std::optional<std::size_t> regular_degree(const Relation& rel) {
  if (rel.size() == 0) return std::nullopt;
  const std::size_t r = degree(rel, 0);
  for (Vertex v = 1; v < rel.size(); ++v) {
    if (degree(rel, v) != r) return std::nullopt;
  }
  return r;
}

bool is_reflexive(const Relation& rel) {
  for (Vertex v = 0; v < rel.size(); ++v) {
    if (!rel.has_arc(v, v)) return false;
  }
  return true;
}

bool has_loops(const Relation& rel) {
  for (Vertex v = 0; v < rel.size(); ++v) {
    if (rel.has_arc(v, v)) return true;
  }
  return false;
}

bool covers_all_pairs(const Relation& rel) {
  const std::size_t n = rel.size();
  for (Vertex v = 0; v < n; ++v) {
    if (degree(rel, v) + (rel.has_arc(v, v) ? 0 : 1) != n) return false;
  }
  return true;
}

namespace {

// Breadth-first layers from v; the first layer meeting Γ⁻(v) closes a cycle.
std::optional<std::size_t> cycle_length_through(const Relation& rel, const VertexSet& predecessors, Vertex v,
                                                std::size_t give_up_at) {
  const std::size_t n = rel.size();
  if (predecessors.empty()) return std::nullopt;
  VertexSet visited = VertexSet::singleton(n, v);
  VertexSet frontier = visited;
  for (std::size_t depth = 0; depth + 1 < give_up_at; ++depth) {
    if (frontier.intersects(predecessors)) return depth + 1;
    VertexSet next = image(rel, frontier);
    next -= visited;
    if (next.empty()) return std::nullopt;
    visited |= next;
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

Girth girth(const Relation& rel) {
  const Relation rev = reverse(rel);
  std::optional<std::size_t> best;
  for (Vertex v = 0; v < rel.size(); ++v) {
    const std::size_t limit = best ? *best : rel.size() + 1;
    if (auto k = cycle_length_through(rel, VertexSet::from_words(rel.size(), rev.row(v)), v, limit); k && (!best || *k < *best)) best = k;
    if (best == 1u) break;
  }
  return best ? Girth::finite(*best) : Girth::infinite();
}

Girth girth_at(const Relation& rel, Vertex v) {
  check_vertex_of(rel, v, "vertex");
  VertexSet predecessors(rel.size());
  for (Vertex u = 0; u < rel.size(); ++u) {
    if (rel.has_arc(u, v)) predecessors.insert(u);
  }
  const auto k = cycle_length_through(rel, predecessors, v, rel.size() + 1);
  return k ? Girth::finite(*k) : Girth::infinite();
}

Restriction restriction(const Relation& rel, const VertexSet& keep) {
  if (keep.universe() != rel.size()) throw InputError("restriction set over the wrong universe");
  if (keep.empty()) throw InputError("restriction to an empty vertex set");
  Restriction out{Relation(keep.size()), keep.members()};
  std::vector<std::size_t> new_index(rel.size(), rel.size());
  for (std::size_t i = 0; i < out.original_vertex.size(); ++i) new_index[out.original_vertex[i]] = i;
  for (std::size_t i = 0; i < out.original_vertex.size(); ++i) {
    const VertexSet kept = VertexSet::from_words(rel.size(), rel.row(out.original_vertex[i])) & keep;
    kept.for_each([&](Vertex w) { out.relation.add_arc(i, new_index[w]); });
  }
  return out;
}

namespace {
bool reaches_everything(const Relation& rel) {
  const VertexSet all = VertexSet::full(rel.size());
  VertexSet seen = VertexSet::singleton(rel.size(), 0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = image(rel, frontier) - seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen == all;
}
}  // namespace

bool is_connected(const Relation& rel) {
  if (rel.size() <= 1) return true;
  return reaches_everything(rel) && reaches_everything(reverse(rel));
}

}  // namespace relgraph
