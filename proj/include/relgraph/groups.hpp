#pragma once

// Finite groups as validated multiplication tables, and Cayley relations.
//
// The identity is always element 0. Every table passes the full axiom check
// (identity, Latin square, associativity) before a FiniteGroup exists.

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "relgraph/errors.hpp"
#include "relgraph/relation.hpp"

namespace relgraph {

using Element = std::size_t;

class GroupError : public InputError {
 public:
  enum class Kind { NotSquare, EntryOutOfRange, NoIdentityAtZero, NotLatinSquare, NotAssociative };

  GroupError(Kind kind, std::array<Element, 3> witness, const std::string& what)
      : InputError(what), kind_(kind), witness_(witness) {}

  Kind kind() const noexcept { return kind_; }
  // (g, h, k) for NotAssociative; (row, column, -) otherwise.
  const std::array<Element, 3>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::array<Element, 3> witness_;
};

class FiniteGroup {
 public:
  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element g, Element h) const noexcept { return table_[g * n_ + h]; }
  Element inverse(Element g) const noexcept { return inverses_[g]; }
  const std::string& name() const noexcept { return name_; }
  std::vector<std::vector<Element>> rows() const;

  // Validated construction; throws GroupError naming the first violated axiom.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table, std::string name = {});

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::string name_;
};

FiniteGroup group_from_table(const std::vector<std::vector<Element>>& table);

FiniteGroup cyclic(std::size_t n);
// (a, b) is element a * |second| + b.
FiniteGroup direct_product(const FiniteGroup& first, const FiniteGroup& second);
// Order 2m: element i < m is r^i, element m + i is s r^i.
FiniteGroup dihedral(std::size_t m);
// Permutations of [0, m) in lexicographic order; (g h)(x) = g(h(x)). m <= 5.
FiniteGroup symmetric(std::size_t m);

// Z_{d1} x ... x Z_{dk}; factors need not divide each other.
FiniteGroup abelian_from_factors(std::span<const std::size_t> factors);
// One representative per isomorphism class, by invariant factors d1 | d2 | ... | dk.
std::vector<FiniteGroup> abelian_groups_of_order(std::size_t order);

// Groups used by the verification families.
std::vector<FiniteGroup> abelian_catalog(std::size_t max_order);
std::vector<FiniteGroup> dihedral_catalog(std::size_t max_m);   // m = 3..max_m
std::vector<FiniteGroup> symmetric_catalog(std::size_t max_m);  // m = 3..max_m, max_m <= 5
// Abelian groups, dihedral and symmetric groups, all of order <= max_order.
std::vector<FiniteGroup> group_catalog(std::size_t max_order);

class GroupSubset {
 public:
  // Members are sorted and deduplicated; each must be an element of the group.
  GroupSubset(const FiniteGroup& group, std::span<const Element> members);

  std::size_t group_order() const noexcept { return order_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains_identity() const noexcept { return !members_.empty() && members_.front() == 0; }

 private:
  std::size_t order_;
  std::vector<Element> members_;
};

struct TransitivityCertificate {
  enum class Kind {
    // Left translations x -> h x of a group act on a Cayley relation.
    LeftTranslations,
    // Exhaustive automorphism search found vertex 0's orbit to be everything.
    BruteForce,
    // Search found a smaller orbit.
    NotTransitive,
    // Nobody checked (instance above the brute-force threshold).
    Uncertified,
  };

  Kind kind = Kind::Uncertified;
  std::shared_ptr<const FiniteGroup> group;  // set for LeftTranslations

  bool certified() const noexcept { return kind == Kind::LeftTranslations || kind == Kind::BruteForce; }
  std::string describe() const;
};

struct CayleyRelation {
  Relation relation;
  TransitivityCertificate certificate;
};

// Arcs (g, g s) for every g and s in S; loops at every vertex when `reflexive`.
CayleyRelation cayley_relation(std::shared_ptr<const FiniteGroup> group, const GroupSubset& subset,
                               bool reflexive);
CayleyRelation cayley_relation(const FiniteGroup& group, const GroupSubset& subset, bool reflexive);

}  // namespace relgraph
