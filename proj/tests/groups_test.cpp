#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "relgraph/automorphisms.hpp"
#include "relgraph/errors.hpp"
#include "relgraph/family.hpp"
#include "support.hpp"

using namespace relgraph;
using relgraph::testing::circulant;
using relgraph::testing::directed_cycle;

namespace {

// Independent associativity scan; returns the first failing triple.
std::optional<std::array<Element, 3>> first_non_associative(const std::vector<std::vector<Element>>& t) {
  const std::size_t n = t.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return std::array<Element, 3>{a, b, c};
  return std::nullopt;
}

// Some normalised Latin square of order 5 that is not a group (a loop).
std::vector<std::vector<Element>> non_associative_loop() {
  const std::size_t n = 5;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n, 0));
  for (Element i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::vector<std::vector<Element>> found;
  std::function<bool(std::size_t)> fill = [&](std::size_t cell) -> bool {
    if (cell == (n - 1) * (n - 1)) {
      if (first_non_associative(t)) {
        found = t;
        return true;
      }
      return false;
    }
    const std::size_t r = 1 + cell / (n - 1);
    const std::size_t c = 1 + cell % (n - 1);
    for (Element v = 0; v < n; ++v) {
      bool ok = true;
      for (std::size_t k = 0; k < c && ok; ++k) ok = t[r][k] != v;
      for (std::size_t k = 0; k < r && ok; ++k) ok = t[k][c] != v;
      if (!ok) continue;
      t[r][c] = v;
      if (fill(cell + 1)) return true;
    }
    return false;
  };
  fill(0);
  return found;
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  std::vector<Element> f(a.order());
  std::iota(f.begin(), f.end(), 0);
  do {
    if (f[0] != 0) continue;
    bool hom = true;
    for (Element x = 0; x < a.order() && hom; ++x)
      for (Element y = 0; y < a.order() && hom; ++y) hom = f[a.mul(x, y)] == b.mul(f[x], f[y]);
    if (hom) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

}  // namespace

TEST_CASE("group_from_table") {
  CHECK(group_from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}).order() == 3);

  try {
    (void)group_from_table({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}});
    FAIL("expected NotLatinSquare");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupError::Kind::NotLatinSquare);
  }
  try {
    (void)group_from_table({{1, 0}, {0, 1}});
    FAIL("expected NoIdentityAtZero");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupError::Kind::NoIdentityAtZero);
  }
  CHECK_THROWS_AS((void)group_from_table({{0, 1}, {1}}), GroupError);
  CHECK_THROWS_AS((void)group_from_table({{0, 1}, {1, 2}}), GroupError);

  const auto loop = non_associative_loop();
  REQUIRE_FALSE(loop.empty());
  try {
    (void)group_from_table(loop);
    FAIL("expected NotAssociative");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupError::Kind::NotAssociative);
    const auto [a, b, c] = e.witness();
    CHECK(loop[loop[a][b]][c] != loop[a][loop[b][c]]);
    CHECK(e.witness() == *first_non_associative(loop));
  }
}

TEST_CASE("group families") {
  CHECK(cyclic(1).order() == 1);
  const FiniteGroup klein = direct_product(cyclic(2), cyclic(2));
  CHECK(klein.order() == 4);
  for (Element g = 1; g < 4; ++g) CHECK(klein.mul(g, g) == 0);

  CHECK(isomorphic(dihedral(3), symmetric(3)));
  CHECK_FALSE(isomorphic(cyclic(6), symmetric(3)));
  CHECK(symmetric(4).order() == 24);
  CHECK_THROWS_AS((void)symmetric(6), InputError);
  CHECK_THROWS_AS((void)cyclic(0), InputError);
  CHECK_THROWS_AS((void)dihedral(0), InputError);

  for (const FiniteGroup& g : group_catalog(16)) {
    CAPTURE(g.name());
    CHECK_NOTHROW((void)group_from_table(g.rows()));
    for (Element x = 0; x < g.order(); ++x) {
      CHECK(g.mul(x, g.inverse(x)) == 0);
      CHECK(g.mul(g.inverse(x), x) == 0);
    }
  }
}

TEST_CASE("abelian groups by invariant factors") {
  // Number of abelian groups of order n for n = 1..16.
  const std::size_t expected[] = {1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5};
  for (std::size_t n = 1; n <= 16; ++n) CHECK(abelian_groups_of_order(n).size() == expected[n - 1]);
  for (const auto& g : abelian_groups_of_order(16)) {
    for (Element x = 0; x < 16; ++x)
      for (Element y = 0; y < 16; ++y) CHECK(g.mul(x, y) == g.mul(y, x));
  }
}

TEST_CASE("cayley_relation") {
  const FiniteGroup z5 = cyclic(5);
  CHECK(cayley_relation(z5, GroupSubset(z5, std::vector<Element>{1}), false).relation == directed_cycle(5));
  const auto two = cayley_relation(z5, GroupSubset(z5, std::vector<Element>{1, 2}), false);
  CHECK(regular_degree(two.relation) == 2u);
  CHECK(two.certificate.kind == TransitivityCertificate::Kind::LeftTranslations);
  CHECK(two.certificate.certified());

  const FiniteGroup klein = direct_product(cyclic(2), cyclic(2));
  const auto k = cayley_relation(klein, GroupSubset(klein, std::vector<Element>{1, 2}), false);
  CHECK(k.relation.size() == 4);
  CHECK(girth(k.relation) == Girth::finite(2));
  CHECK(relgraph::testing::brute_girth(k.relation) == 2);

  CHECK(is_reflexive(cayley_relation(z5, GroupSubset(z5, std::vector<Element>{2}), true).relation));
  CHECK_THROWS_AS(GroupSubset(z5, std::vector<Element>{5}), InputError);
}

TEST_CASE("Cayley regularity, left translations and transitivity certificates") {
  for (const FiniteGroup& g : group_catalog(10)) {
    const auto group = std::make_shared<const FiniteGroup>(g);
    for_each_generator_set(g.order(), [&](const std::vector<Element>& gens) {
      const CayleyRelation cay = cayley_relation(group, GroupSubset(g, gens), false);
      CHECK(regular_degree(cay.relation) == gens.size());
      for (Element h = 0; h < g.order(); ++h) {
        Permutation left(g.order());
        for (Element x = 0; x < g.order(); ++x) left[x] = g.mul(h, x);
        CHECK(is_automorphism(cay.relation, left));
      }
      CHECK(is_point_transitive_brute(cay.relation));
      CHECK(girth_at(cay.relation, 0) == girth(cay.relation));
    });
  }
}

TEST_CASE("automorphisms_brute") {
  const auto rotations = automorphisms_brute(directed_cycle(4));
  CHECK(rotations.size() == 4);
  CHECK(is_point_transitive_brute(directed_cycle(4)));

  const std::vector<Arc> path{{0, 1}, {1, 2}};
  const Relation p = Relation::from_edges(3, path);
  CHECK(automorphisms_brute(p) == std::vector<Permutation>{{0, 1, 2}});
  CHECK_FALSE(is_point_transitive_brute(p));
  CHECK(certify_transitivity(p).kind == TransitivityCertificate::Kind::NotTransitive);

  CHECK(is_point_transitive_brute(circulant(6, {1, 2}, false)));
  CHECK(automorphisms_brute(Relation::complete(5)).size() == 120);
  CHECK_THROWS_AS((void)automorphisms_brute(directed_cycle(11)), ThresholdError);
  CHECK(certify_transitivity(directed_cycle(11)).kind == TransitivityCertificate::Kind::Uncertified);
}

TEST_CASE("automorphism search agrees with permutation enumeration") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Relation rel = relgraph::testing::random_relation(n, 0.4, rng);
    std::vector<Permutation> expected;
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (Vertex u = 0; u < n && ok; ++u)
        for (Vertex v = 0; v < n && ok; ++v) ok = rel.has_arc(u, v) == rel.has_arc(p[u], p[v]);
      if (ok) expected.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(automorphisms_brute(rel) == expected);
  }
}
