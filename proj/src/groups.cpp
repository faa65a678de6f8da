#include "relgraph/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace relgraph {

namespace {

std::string triple(Element a, Element b, Element c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table, std::string name) {
  using Kind = GroupError::Kind;
  const std::size_t n = table.size();
  if (n == 0) throw GroupError(Kind::NotSquare, {0, 0, 0}, "empty group table");
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) {
      throw GroupError(Kind::NotSquare, {g, 0, 0},
                       "row " + std::to_string(g) + " has " + std::to_string(table[g].size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] >= n) {
        throw GroupError(Kind::EntryOutOfRange, {g, h, 0},
                         "entry at " + triple(g, h, table[g][h]) + " is not an element");
      }
    }
  }
  for (Element g = 0; g < n; ++g) {
    if (table[0][g] != g || table[g][0] != g) {
      throw GroupError(Kind::NoIdentityAtZero, {g, 0, 0},
                       "element 0 is not a two-sided identity (fails at " + std::to_string(g) + ")");
    }
  }
  std::vector<char> seen(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t h = 0; h < n; ++h) {
      if (seen[table[g][h]]++) {
        throw GroupError(Kind::NotLatinSquare, {g, h, 0},
                         "row " + std::to_string(g) + " repeats " + std::to_string(table[g][h]));
      }
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t g = 0; g < n; ++g) {
      if (seen[table[g][h]]++) {
        throw GroupError(Kind::NotLatinSquare, {g, h, 0},
                         "column " + std::to_string(h) + " repeats " + std::to_string(table[g][h]));
      }
    }
  }
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      for (Element k = 0; k < n; ++k) {
        if (table[table[g][h]][k] != table[g][table[h][k]]) {
          throw GroupError(Kind::NotAssociative, {g, h, k}, "not associative at " + triple(g, h, k));
        }
      }
    }
  }

  FiniteGroup out;
  out.n_ = n;
  out.table_.reserve(n * n);
  for (const auto& row : table) out.table_.insert(out.table_.end(), row.begin(), row.end());
  // A Latin square with identity has exactly one right inverse per row; associativity makes it two-sided.
  out.inverses_.resize(n);
  for (Element g = 0; g < n; ++g) {
    out.inverses_[g] = static_cast<Element>(std::find(table[g].begin(), table[g].end(), 0) - table[g].begin());
  }
  out.name_ = name.empty() ? "G" + std::to_string(n) : std::move(name);
  return out;
}

std::vector<std::vector<Element>> FiniteGroup::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (Element g = 0; g < n_; ++g) out[g].assign(table_.begin() + g * n_, table_.begin() + (g + 1) * n_);
  return out;
}

FiniteGroup group_from_table(const std::vector<std::vector<Element>>& table) {
  return FiniteGroup::from_table(table);
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group of order 0");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) t[g][h] = (g + h) % n;
  }
  return FiniteGroup::from_table(t, "Z" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& first, const FiniteGroup& second) {
  const std::size_t n1 = first.order();
  const std::size_t n2 = second.order();
  const std::size_t n = n1 * n2;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      t[x][y] = first.mul(x / n2, y / n2) * n2 + second.mul(x % n2, y % n2);
    }
  }
  return FiniteGroup::from_table(t, first.name() + "x" + second.name());
}

FiniteGroup dihedral(std::size_t m) {
  if (m == 0) throw InputError("dihedral group needs m >= 1");
  const std::size_t n = 2 * m;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::size_t a = x % m;
      const std::size_t b = y % m;
      const bool x_reflects = x >= m;
      const bool y_reflects = y >= m;
      if (!x_reflects && !y_reflects) {
        t[x][y] = (a + b) % m;
      } else if (!x_reflects) {
        t[x][y] = m + (b + m - a) % m;  // r^a s r^b = s r^(b-a)
      } else if (!y_reflects) {
        t[x][y] = m + (a + b) % m;
      } else {
        t[x][y] = (b + m - a) % m;  // s r^a s r^b = r^(b-a)
      }
    }
  }
  return FiniteGroup::from_table(t, "D" + std::to_string(m));
}

FiniteGroup symmetric(std::size_t m) {
  if (m == 0 || m > 5) throw InputError("symmetric group supported for 1 <= m <= 5, got " + std::to_string(m));
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  const std::size_t n = perms.size();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<std::size_t> product(m);
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      for (std::size_t x = 0; x < m; ++x) product[x] = perms[g][perms[h][x]];
      t[g][h] = index.at(product);
    }
  }
  return FiniteGroup::from_table(t, "S" + std::to_string(m));
}

FiniteGroup abelian_from_factors(std::span<const std::size_t> factors) {
  if (factors.empty()) return cyclic(1);
  FiniteGroup g = cyclic(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic(factors[i]));
  return g;
}

std::vector<FiniteGroup> abelian_groups_of_order(std::size_t order) {
  if (order == 0) throw InputError("group order must be positive");
  if (order == 1) return {cyclic(1)};
  std::vector<std::vector<std::size_t>> decompositions;
  std::vector<std::size_t> current;
  // Chains d1 | d2 | ... with product `order`, each d >= 2.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t last) {
    if (remaining == 1) {
      decompositions.push_back(current);
      return;
    }
    for (std::size_t d = 2; d <= remaining; ++d) {
      if (remaining % d != 0) continue;
      if (last != 0 && d % last != 0) continue;
      // The last factor is a multiple of d, so d^2 must divide what is left unless d is last.
      if (remaining != d && (remaining / d) % d != 0) continue;
      current.push_back(d);
      extend(remaining / d, d);
      current.pop_back();
    }
  };
  extend(order, 0);
  std::sort(decompositions.begin(), decompositions.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  std::vector<FiniteGroup> out;
  for (const auto& factors : decompositions) out.push_back(abelian_from_factors(factors));
  return out;
}

std::vector<FiniteGroup> abelian_catalog(std::size_t max_order) {
  std::vector<FiniteGroup> out;
  for (std::size_t order = 2; order <= max_order; ++order) {
    for (auto& g : abelian_groups_of_order(order)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<FiniteGroup> dihedral_catalog(std::size_t max_m) {
  std::vector<FiniteGroup> out;
  for (std::size_t m = 3; m <= max_m; ++m) out.push_back(dihedral(m));
  return out;
}

std::vector<FiniteGroup> symmetric_catalog(std::size_t max_m) {
  std::vector<FiniteGroup> out;
  for (std::size_t m = 3; m <= max_m; ++m) out.push_back(symmetric(m));
  return out;
}

std::vector<FiniteGroup> group_catalog(std::size_t max_order) {
  std::vector<FiniteGroup> out = abelian_catalog(max_order);
  for (std::size_t m = 3; 2 * m <= max_order; ++m) out.push_back(dihedral(m));
  std::size_t factorial = 6;
  for (std::size_t m = 3; m <= 5 && factorial <= max_order; ++m) {
    out.push_back(symmetric(m));
    factorial *= m + 1;
  }
  return out;
}

GroupSubset::GroupSubset(const FiniteGroup& group, std::span<const Element> members)
    : order_(group.order()), members_(members.begin(), members.end()) {
  for (Element s : members_) {
    if (s >= order_) {
      throw InputError("subset element " + std::to_string(s) + " outside group of order " +
                       std::to_string(order_));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::string TransitivityCertificate::describe() const {
  switch (kind) {
    case Kind::LeftTranslations:
      return "left-translations";
    case Kind::BruteForce:
      return "brute-force";
    case Kind::NotTransitive:
      return "not-transitive";
    case Kind::Uncertified:
      return "uncertified";
  }
  return "uncertified";
}

CayleyRelation cayley_relation(std::shared_ptr<const FiniteGroup> group, const GroupSubset& subset,
                               bool reflexive) {
  if (!group) throw InputError("null group");
  if (subset.group_order() != group->order()) throw InputError("subset belongs to a group of another order");
  const std::size_t n = group->order();
  Relation rel(n);
  for (Element g = 0; g < n; ++g) {
    for (Element s : subset.members()) rel.add_arc(g, group->mul(g, s));
    if (reflexive) rel.add_arc(g, g);
  }
  return {std::move(rel), TransitivityCertificate{TransitivityCertificate::Kind::LeftTranslations, std::move(group)}};
}

CayleyRelation cayley_relation(const FiniteGroup& group, const GroupSubset& subset, bool reflexive) {
  return cayley_relation(std::make_shared<const FiniteGroup>(group), subset, reflexive);
}

}  // namespace relgraph
