#pragma once

// Executable checks of the sphere-growth results for point-transitive
// relations. Each proven inequality is evaluated on a concrete instance and
// recorded as (claim, j or g, lhs, rhs, pass, tight). On an instance whose
// transitivity is certified, a failed check means the code is wrong.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relgraph/groups.hpp"
#include "relgraph/relation.hpp"

#ifndef RELGRAPH_SPHERE_BOUND_SHIFT
#define RELGRAPH_SPHERE_BOUND_SHIFT 0
#endif

namespace relgraph {

namespace claim {
inline constexpr const char* kSphereBound = "sphere_bound";          // |sphere_j(v)| >= r - 1
inline constexpr const char* kBallGrowth = "ball_growth";            // |ball_j(v)| >= 1 + (r - 1) j
inline constexpr const char* kGirthBound = "girth_bound";            // n >= 1 + r (g - 1)
inline constexpr const char* kClosureBall = "closure_ball";          // |Φ^{g-2}(v)| >= 1 + (g - 2) r
inline constexpr const char* kClosureRoom = "closure_room";          // n - r >= |Φ^{g-2}(v)|
inline constexpr const char* kZeroProduct = "zero_product";          // ceil(n / s) >= k
inline constexpr const char* kZeroProductIdentity = "zero_product_identity";
inline constexpr const char* kZeroProductMinimal = "zero_product_minimal";
inline constexpr const char* kPowerAutomorphisms = "power_automorphisms";
inline constexpr const char* kPowerTransitive = "power_transitive";
inline constexpr const char* kAtomSizeBound = "atom_size_bound";     // kappa >= |A|
inline constexpr const char* kAtomInducedTransitive = "atom_induced_transitive";
inline constexpr const char* kAtomDisjoint = "atom_disjoint";
}  // namespace claim

struct CheckRecord {
  std::string_view claim;  // one of the claim:: constants
  long long j_or_g = 0;
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
  bool tight = false;
  Vertex base = 0;

  static CheckRecord inequality(std::string_view claim, long long j_or_g, long long lhs, long long rhs,
                                Vertex base = 0) {
    return {claim, j_or_g, lhs, rhs, lhs >= rhs, lhs == rhs, base};
  }
};

struct InstanceDescriptor {
  std::string family;
  std::string group;              // empty for file instances
  std::vector<Element> subset;    // generator set for Cayley instances
  std::string path;               // file instances
  std::size_t n = 0;
};

struct VerificationReport {
  InstanceDescriptor instance;
  std::optional<std::size_t> r;
  TransitivityCertificate::Kind transitivity = TransitivityCertificate::Kind::Uncertified;
  std::vector<CheckRecord> checks;
  std::map<std::string, std::vector<std::size_t>> witnesses;
  std::vector<std::string> notes;

  bool caveat() const noexcept;
  std::size_t failures() const noexcept;
  // Failures on an instance with certified transitivity.
  std::size_t bugs() const noexcept;
  void append(VerificationReport&& other);
};

struct CheckOptions {
  // Offset to the sphere bound r - 1; -1 and +1 are the fault-injection settings.
  long long sphere_bound_shift = RELGRAPH_SPHERE_BOUND_SHIFT;
  // Check every base vertex instead of vertex 0 alone.
  bool all_vertices = false;
  // Sequence-enumeration budget for the zero-product minimality check.
  std::size_t minimality_budget = 1'000'000;
};

struct HypothesisWindow {
  Vertex v = 0;
  // Largest j with ball_j(v) ∩ Γ⁻(v) = {v}, capped at n.
  std::size_t max_j = 0;
  // The ball stopped growing inside the window, so the hypothesis holds for every j.
  bool stabilized = false;
};

// Requires a reflexive relation.
HypothesisWindow hypothesis_window(const Relation& rel, Vertex v);

VerificationReport check_main_theorem(const Relation& rel, const TransitivityCertificate& transitivity,
                                      const CheckOptions& options = {});
VerificationReport check_ball_growth(const Relation& rel, const TransitivityCertificate& transitivity,
                                     const CheckOptions& options = {});
// Loopless relation. Infinite girth yields a report with an "acyclic" note and no checks.
VerificationReport check_girth_bound(const Relation& rel, const TransitivityCertificate& transitivity,
                                     const CheckOptions& options = {});

struct ZeroProductWitness {
  std::vector<Element> sequence;  // s_1 ... s_k, multiplied left to right
  std::size_t k = 0;
  std::size_t bound = 0;          // ceil(n / |S|)
};

// Shortest nonempty sequence over S whose product is the identity, by BFS in the Cayley relation.
ZeroProductWitness zero_product_witness(const FiniteGroup& group, const GroupSubset& subset);

struct ZeroProductAudit {
  bool multiplies_to_identity = false;
  bool within_bound = false;
  // Unset when |S|^k exceeds the enumeration budget.
  std::optional<bool> minimal;
};

// Re-checks a witness from the group table alone, independent of the BFS.
ZeroProductAudit audit_zero_product(const FiniteGroup& group, const GroupSubset& subset,
                                    const ZeroProductWitness& witness, std::size_t budget = 1'000'000);

VerificationReport check_zero_product(const FiniteGroup& group, const GroupSubset& subset,
                                      const CheckOptions& options = {});

// Every automorphism of rel must be one of power(rel, i), and those automorphisms
// must still move vertex 0 everywhere. Refuses n > max_n.
VerificationReport check_lemma_powers(const Relation& rel, const TransitivityCertificate& transitivity,
                                      std::span<const long long> powers, std::size_t max_n = 10);
VerificationReport check_lemma_powers(const Relation& rel, const TransitivityCertificate& transitivity,
                                      long long power, std::size_t max_n = 10);

// Atom properties of a point-transitive relation: size bound, induced
// transitivity (when a(Γ) <= a(Γ⁻)) and one-sided disjointness.
VerificationReport check_atoms(const Relation& rel, const TransitivityCertificate& transitivity,
                               std::size_t brute_max_n);

}  // namespace relgraph
