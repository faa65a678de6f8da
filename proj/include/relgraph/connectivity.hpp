#pragma once

// Isoperimetric connectivity of a relation.
//
// kappa(Γ) is the least boundary |Γ(X) \ X| over nonempty X with
// X ∪ Γ(X) != V, or n - 1 when no such X exists (every ordered pair of
// distinct vertices is an arc). Sets attaining the minimum are fragments;
// fragments of least cardinality are atoms.
//
// The exact value comes from unit-capacity max-flow on the vertex-split
// digraph for every ordered pair (s, t). The residual side of each flow is
// the inclusion-minimal optimal source set, so the atoms are exactly the
// smallest such sets over the pairs attaining kappa.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relgraph/groups.hpp"
#include "relgraph/relation.hpp"

namespace relgraph {

inline constexpr std::size_t kDefaultOracleMaxN = 14;

struct Fragment {
  VertexSet set;
  VertexSet boundary;  // image(set) \ set
  std::size_t value = 0;

  static Fragment of(const Relation& rel, VertexSet set);
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

// Marker for the relation where every ordered pair of distinct vertices is an arc.
struct Complete {
  friend bool operator==(const Complete&, const Complete&) = default;
};

struct ConnectivityResult {
  std::size_t kappa = 0;
  std::variant<Complete, Fragment> witness;
  std::size_t atom_size = 0;
  // Lexicographic by sorted member list; empty in the Complete case.
  std::vector<Fragment> atoms;

  bool complete() const noexcept { return std::holds_alternative<Complete>(witness); }
};

struct SeparatingSet {
  std::size_t value = 0;
  VertexSet x_min;  // inclusion-minimal optimal X containing s
};
struct Inseparable {};

class AtomsUndefined : public std::logic_error {
 public:
  AtomsUndefined() : std::logic_error("atoms are undefined: every ordered pair of distinct vertices is an arc") {}
};

// Minimum |Γ(X) \ X| over X with s in X and t outside X ∪ Γ(X).
std::variant<SeparatingSet, Inseparable> min_separating_set(const Relation& rel, Vertex s, Vertex t);

struct KappaOptions {
  // Added to the flow value before it is reported. Nonzero only in fault-injection runs.
  long long fault_offset = 0;
};

ConnectivityResult kappa(const Relation& rel, const KappaOptions& options = {});

struct OracleResult {
  std::size_t kappa = 0;
  bool complete = false;
  // Every minimiser, in increasing bitmask order.
  std::vector<Fragment> fragments;
};

// Exhaustive subset enumeration; refuses n > max_n.
OracleResult fragments_oracle(const Relation& rel, std::size_t max_n = kDefaultOracleMaxN);

// Lexicographically least atom containing v, or nullopt. Throws AtomsUndefined.
std::optional<Fragment> atom_containing(const Relation& rel, Vertex v);

bool pairwise_disjoint(const std::vector<Fragment>& atoms);

struct AtomDisjointnessReport {
  std::size_t forward_atom_size = 0;
  std::size_t reverse_atom_size = 0;
  std::size_t forward_atom_count = 0;
  std::size_t reverse_atom_count = 0;
  bool forward_disjoint = false;
  bool reverse_disjoint = false;
  // Disjointness fails on both sides: an implementation bug, never a finding.
  bool bug() const noexcept { return !forward_disjoint && !reverse_disjoint; }
};

AtomDisjointnessReport check_atom_disjointness(const Relation& rel);
// Same, from already computed results for Γ and Γ⁻ (neither complete).
AtomDisjointnessReport atom_disjointness(const ConnectivityResult& forward, const ConnectivityResult& backward);

struct AtomPropertyReport {
  enum class Status { Holds, Violated, NotApplicable };
  Status status = Status::NotApplicable;
  std::string reason;
  std::size_t kappa = 0;
  std::size_t atom_size = 0;
  std::size_t reverse_atom_size = 0;
  // |A| <= kappa for every atom; unset when kappa = 0, where no nonempty set can meet it.
  std::optional<bool> size_bound_holds;
  bool induced_transitive = false;      // Γ restricted to each atom is point-transitive
  std::vector<VertexSet> atoms;
};

// For a point-transitive, non-complete relation with a(Γ) <= a(Γ⁻): every atom
// induces a point-transitive relation, and if the relation is connected every
// atom A has |A| <= kappa. Transitivity of
// the induced relation is decided by exhaustive search (atoms larger than
// brute_max_n are refused with ThresholdError). NotApplicable when the
// certificate is not a proof of transitivity, the relation is complete, or
// a(Γ) > a(Γ⁻).
AtomPropertyReport check_atom_properties(const Relation& rel, const TransitivityCertificate& transitivity,
                                         std::size_t brute_max_n);
// Same, from already computed results for Γ and Γ⁻; transitivity is the caller's responsibility.
AtomPropertyReport atom_properties(const Relation& rel, const ConnectivityResult& forward,
                                   const ConnectivityResult& backward, std::size_t brute_max_n);

}  // namespace relgraph
