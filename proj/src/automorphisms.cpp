#include "relgraph/automorphisms.hpp"

#include <tuple>

#include "relgraph/errors.hpp"

namespace relgraph {

namespace {

struct Search {
  const Relation& rel;
  const std::function<bool(const Permutation&)>& visit;
  std::optional<std::pair<Vertex, Vertex>> pin;
  std::size_t n;
  std::vector<std::tuple<bool, std::size_t, std::size_t>> signature;
  Permutation image;
  std::vector<char> used;
  bool stopped = false;

  Search(const Relation& r, const std::function<bool(const Permutation&)>& v,
         std::optional<std::pair<Vertex, Vertex>> p)
      : rel(r), visit(v), pin(p), n(r.size()), signature(r.size()), image(r.size()), used(r.size(), 0) {
    const Relation rev = reverse(rel);
    for (Vertex x = 0; x < n; ++x) signature[x] = {rel.has_arc(x, x), degree(rel, x), degree(rev, x)};
  }

  bool consistent(Vertex x, Vertex fx) const {
    if (signature[x] != signature[fx]) return false;
    for (Vertex y = 0; y < x; ++y) {
      if (rel.has_arc(x, y) != rel.has_arc(fx, image[y])) return false;
      if (rel.has_arc(y, x) != rel.has_arc(image[y], fx)) return false;
    }
    return true;
  }

  void extend(Vertex x) {
    if (stopped) return;
    if (x == n) {
      if (!visit(image)) stopped = true;
      return;
    }
    for (Vertex fx = 0; fx < n && !stopped; ++fx) {
      if (used[fx]) continue;
      if (pin && pin->first == x && pin->second != fx) continue;
      if (!consistent(x, fx)) continue;
      used[fx] = 1;
      image[x] = fx;
      extend(x + 1);
      used[fx] = 0;
    }
  }
};

void guard(const Relation& rel, std::size_t max_n, const char* what) {
  if (rel.size() > max_n) throw ThresholdError(what, rel.size(), max_n);
}

}  // namespace

bool is_automorphism(const Relation& rel, const Permutation& perm) {
  const std::size_t n = rel.size();
  if (perm.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Vertex v : perm) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  // A bijection on a finite arc set that maps arcs to arcs also maps non-arcs to non-arcs.
  for (const auto& [u, v] : rel.arcs()) {
    if (!rel.has_arc(perm[u], perm[v])) return false;
  }
  return true;
}

void for_each_automorphism(const Relation& rel, const std::function<bool(const Permutation&)>& visit,
                           std::optional<std::pair<Vertex, Vertex>> pin) {
  if (rel.size() == 0) {
    visit({});
    return;
  }
  Search search(rel, visit, pin);
  search.extend(0);
}

std::vector<Permutation> automorphisms_brute(const Relation& rel, std::size_t max_n) {
  guard(rel, max_n, "automorphism enumeration");
  std::vector<Permutation> out;
  for_each_automorphism(rel, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

VertexSet orbit_of_zero(const Relation& rel, std::size_t max_n) {
  guard(rel, max_n, "orbit computation");
  VertexSet orbit(rel.size());
  if (rel.size() == 0) return orbit;
  for (Vertex target = 0; target < rel.size(); ++target) {
    bool found = false;
    for_each_automorphism(
        rel,
        [&](const Permutation&) {
          found = true;
          return false;
        },
        std::pair<Vertex, Vertex>{0, target});
    if (found) orbit.insert(target);
  }
  return orbit;
}

bool is_point_transitive_brute(const Relation& rel, std::size_t max_n) {
  return orbit_of_zero(rel, max_n) == VertexSet::full(rel.size());
}

TransitivityCertificate certify_transitivity(const Relation& rel, std::size_t max_n) {
  using Kind = TransitivityCertificate::Kind;
  if (rel.size() > max_n) return {Kind::Uncertified, nullptr};
  return {is_point_transitive_brute(rel, max_n) ? Kind::BruteForce : Kind::NotTransitive, nullptr};
}

}  // namespace relgraph
