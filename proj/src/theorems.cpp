#include "relgraph/theorems.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "relgraph/automorphisms.hpp"
#include "relgraph/connectivity.hpp"
#include "relgraph/errors.hpp"

namespace relgraph {

bool VerificationReport::caveat() const noexcept {
  return transitivity != TransitivityCertificate::Kind::LeftTranslations &&
         transitivity != TransitivityCertificate::Kind::BruteForce;
}

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
}

std::size_t VerificationReport::bugs() const noexcept { return caveat() ? 0 : failures(); }

void VerificationReport::append(VerificationReport&& other) {
  if (!r) r = other.r;
  for (auto& c : other.checks) checks.push_back(std::move(c));
  for (auto& [key, value] : other.witnesses) witnesses[key] = std::move(value);
  for (auto& note : other.notes) notes.push_back(std::move(note));
}

namespace {

VertexSet predecessors(const Relation& rel, Vertex v) {
  VertexSet out(rel.size());
  for (Vertex u = 0; u < rel.size(); ++u) {
    if (rel.has_arc(u, v)) out.insert(u);
  }
  return out;
}

std::vector<Vertex> base_vertices(const Relation& rel, const CheckOptions& options) {
  if (!options.all_vertices) return {0};
  std::vector<Vertex> out(rel.size());
  for (Vertex v = 0; v < rel.size(); ++v) out[v] = v;
  return out;
}

VerificationReport empty_report(const Relation& rel, const TransitivityCertificate& transitivity) {
  VerificationReport report;
  report.instance.n = rel.size();
  report.transitivity = transitivity.kind;
  if (rel.size() > 0) {
    report.r = regular_degree(rel);
  }
  return report;
}

void require_reflexive(const Relation& rel) {
  if (!is_reflexive(rel)) throw InputError("sphere checks need a reflexive relation");
  if (rel.size() == 0) throw InputError("empty relation");
}

// Walks the hypothesis window at v, handing (j, ball_{j-1}, ball_j) to `visit` for j = 1..max_j.
template <typename Visit>
HypothesisWindow walk_window(const Relation& rel, Vertex v, Visit&& visit) {
  HypothesisWindow window{v, 0, false};
  const VertexSet pred = predecessors(rel, v);
  const VertexSet just_v = VertexSet::singleton(rel.size(), v);
  VertexSet previous = just_v;
  for (std::size_t j = 1; j <= rel.size(); ++j) {
    VertexSet current = image(rel, previous);
    if ((current & pred) != just_v) break;
    window.max_j = j;
    visit(j, previous, current);
    if (current == previous) {
      window.stabilized = true;
      for (std::size_t rest = j + 1; rest <= rel.size(); ++rest) visit(rest, previous, current);
      window.max_j = rel.size();
      break;
    }
    previous = std::move(current);
  }
  return window;
}

}  // namespace

HypothesisWindow hypothesis_window(const Relation& rel, Vertex v) {
  require_reflexive(rel);
  if (v >= rel.size()) throw InputError("vertex out of range");
  return walk_window(rel, v, [](std::size_t, const VertexSet&, const VertexSet&) {});
}

VerificationReport check_main_theorem(const Relation& rel, const TransitivityCertificate& transitivity,
                                      const CheckOptions& options) {
  require_reflexive(rel);
  VerificationReport report = empty_report(rel, transitivity);
  for (Vertex v : base_vertices(rel, options)) {
    const auto r = static_cast<long long>(degree(rel, v));
    const long long bound = r - 1 + options.sphere_bound_shift;
    walk_window(rel, v, [&](std::size_t j, const VertexSet& previous, const VertexSet& current) {
      const auto new_vertices = static_cast<long long>((current - previous).size());
      report.checks.push_back(
          CheckRecord::inequality(claim::kSphereBound, static_cast<long long>(j), new_vertices, bound, v));
    });
  }
  return report;
}

VerificationReport check_ball_growth(const Relation& rel, const TransitivityCertificate& transitivity,
                                     const CheckOptions& options) {
  require_reflexive(rel);
  VerificationReport report = empty_report(rel, transitivity);
  for (Vertex v : base_vertices(rel, options)) {
    const auto r = static_cast<long long>(degree(rel, v));
    report.checks.push_back(CheckRecord::inequality(claim::kBallGrowth, 0, 1, 1, v));
    walk_window(rel, v, [&](std::size_t j, const VertexSet&, const VertexSet& current) {
      const auto jj = static_cast<long long>(j);
      report.checks.push_back(CheckRecord::inequality(claim::kBallGrowth, jj,
                                                      static_cast<long long>(current.size()), 1 + (r - 1) * jj, v));
    });
  }
  return report;
}

VerificationReport check_girth_bound(const Relation& rel, const TransitivityCertificate& transitivity,
                                     const CheckOptions& options) {
  if (rel.size() == 0) throw InputError("empty relation");
  if (has_loops(rel)) throw InputError("girth bound needs a loopless relation");
  const auto r = regular_degree(rel);
  if (!r) throw InputError("girth bound needs a regular relation");
  VerificationReport report = empty_report(rel, transitivity);

  // All vertices look alike under a certified transitive group.
  Girth g = Girth::infinite();
  if (transitivity.certified() && !options.all_vertices) {
    g = girth_at(rel, 0);
  } else {
    g = girth(rel);
  }
  if (g.is_infinite()) {
    report.notes.push_back("acyclic: girth is infinite, bound skipped");
    return report;
  }
  const auto n = static_cast<long long>(rel.size());
  const auto rr = static_cast<long long>(*r);
  const auto gg = static_cast<long long>(g.value());
  report.checks.push_back(CheckRecord::inequality(claim::kGirthBound, gg, n, 1 + rr * (gg - 1)));

  // With loops added, the ball of radius g - 2 still avoids every in-neighbour of v.
  const Relation closed = reflexive_closure(rel);
  for (Vertex v : base_vertices(rel, options)) {
    const auto reach = static_cast<long long>(ball(closed, v, g.value() - 2).size());
    report.checks.push_back(CheckRecord::inequality(claim::kClosureBall, gg, reach, 1 + (gg - 2) * rr, v));
    report.checks.push_back(CheckRecord::inequality(claim::kClosureRoom, gg, n - rr, reach, v));
  }
  return report;
}

ZeroProductWitness zero_product_witness(const FiniteGroup& group, const GroupSubset& subset) {
  if (subset.group_order() != group.order()) throw InputError("subset belongs to a group of another order");
  if (subset.empty()) throw InputError("zero-product witness needs a nonempty subset");
  if (subset.contains_identity()) throw InputError("subset must not contain the identity");

  const std::size_t n = group.order();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(n, unseen);
  std::vector<Element> parent(n, 0);
  std::vector<Element> via(n, 0);
  std::deque<Element> queue{group.identity()};
  depth[group.identity()] = 0;
  while (!queue.empty()) {
    const Element g = queue.front();
    queue.pop_front();
    for (Element s : subset.members()) {
      const Element h = group.mul(g, s);
      if (h == group.identity()) {
        ZeroProductWitness w;
        w.sequence.push_back(s);
        for (Element at = g; at != group.identity(); at = parent[at]) w.sequence.push_back(via[at]);
        std::reverse(w.sequence.begin(), w.sequence.end());
        w.k = w.sequence.size();
        w.bound = (n + subset.size() - 1) / subset.size();
        return w;
      }
      if (depth[h] != unseen) continue;
      depth[h] = depth[g] + 1;
      parent[h] = g;
      via[h] = s;
      queue.push_back(h);
    }
  }
  throw std::logic_error("identity unreachable in a finite group: BFS is broken");
}

namespace {

bool some_shorter_product_is_identity(const FiniteGroup& group, const std::vector<Element>& generators,
                                      Element prefix, std::size_t length, std::size_t max_length) {
  if (length > 0 && prefix == group.identity()) return true;
  if (length == max_length) return false;
  for (Element s : generators) {
    if (some_shorter_product_is_identity(group, generators, group.mul(prefix, s), length + 1, max_length)) return true;
  }
  return false;
}

}  // namespace

ZeroProductAudit audit_zero_product(const FiniteGroup& group, const GroupSubset& subset,
                                    const ZeroProductWitness& witness, std::size_t budget) {
  ZeroProductAudit audit;
  Element product = group.identity();
  bool members_ok = !witness.sequence.empty() && witness.sequence.size() == witness.k;
  for (Element s : witness.sequence) {
    members_ok = members_ok && std::binary_search(subset.members().begin(), subset.members().end(), s);
    product = group.mul(product, s);
  }
  audit.multiplies_to_identity = members_ok && product == group.identity();
  audit.within_bound = witness.k <= (group.order() + subset.size() - 1) / subset.size();

  // |S|^k sequences, checked with overflow-safe accumulation.
  std::size_t sequences = 1;
  bool affordable = true;
  for (std::size_t i = 0; i < witness.k && affordable; ++i) {
    if (sequences > budget / std::max<std::size_t>(subset.size(), 1)) affordable = false;
    sequences *= subset.size();
  }
  if (affordable && sequences <= budget && witness.k > 0) {
    audit.minimal = !some_shorter_product_is_identity(group, subset.members(), group.identity(), 0, witness.k - 1);
  }
  return audit;
}

VerificationReport check_zero_product(const FiniteGroup& group, const GroupSubset& subset,
                                      const CheckOptions& options) {
  VerificationReport report;
  report.instance.n = group.order();
  report.r = subset.size();
  report.transitivity = TransitivityCertificate::Kind::LeftTranslations;
  const ZeroProductWitness w = zero_product_witness(group, subset);
  const ZeroProductAudit audit = audit_zero_product(group, subset, w, options.minimality_budget);
  const auto k = static_cast<long long>(w.k);
  report.checks.push_back(CheckRecord::inequality(claim::kZeroProduct, k, static_cast<long long>(w.bound), k));
  report.checks.push_back(CheckRecord::inequality(claim::kZeroProductIdentity, k, audit.multiplies_to_identity ? 1 : 0, 1));
  if (audit.minimal) {
    report.checks.push_back(CheckRecord::inequality(claim::kZeroProductMinimal, k, *audit.minimal ? 1 : 0, 1));
  } else {
    report.notes.push_back("minimality not enumerated: |S|^k above budget");
  }
  report.witnesses["zero_product"] = w.sequence;
  return report;
}

VerificationReport check_lemma_powers(const Relation& rel, const TransitivityCertificate& transitivity,
                                      std::span<const long long> powers, std::size_t max_n) {
  if (rel.size() > max_n) throw ThresholdError("power automorphism check", rel.size(), max_n);
  VerificationReport report = empty_report(rel, transitivity);
  std::vector<Relation> raised;
  for (long long i : powers) raised.push_back(power(rel, i));
  std::vector<long long> preserved(powers.size(), 0);
  std::vector<VertexSet> orbit(powers.size(), VertexSet(rel.size()));
  long long total = 0;
  for_each_automorphism(rel, [&](const Permutation& perm) {
    ++total;
    for (std::size_t p = 0; p < raised.size(); ++p) {
      if (is_automorphism(raised[p], perm)) {
        ++preserved[p];
        if (!perm.empty()) orbit[p].insert(perm[0]);
      }
    }
    return true;
  });
  for (std::size_t p = 0; p < powers.size(); ++p) {
    report.checks.push_back(CheckRecord::inequality(claim::kPowerAutomorphisms, powers[p], preserved[p], total));
    report.checks.push_back(CheckRecord::inequality(claim::kPowerTransitive, powers[p],
                                                    static_cast<long long>(orbit[p].size()),
                                                    static_cast<long long>(rel.size())));
  }
  return report;
}

VerificationReport check_lemma_powers(const Relation& rel, const TransitivityCertificate& transitivity,
                                      long long power_index, std::size_t max_n) {
  const long long one[] = {power_index};
  return check_lemma_powers(rel, transitivity, one, max_n);
}

VerificationReport check_atoms(const Relation& rel, const TransitivityCertificate& transitivity,
                               std::size_t brute_max_n) {
  VerificationReport report = empty_report(rel, transitivity);
  if (rel.size() < 2) {
    report.notes.push_back("atoms need at least two vertices");
    return report;
  }
  const ConnectivityResult forward = kappa(rel);
  if (forward.complete()) {
    report.notes.push_back("complete relation: atoms undefined");
    return report;
  }
  const ConnectivityResult backward = kappa(reverse(rel));
  const AtomDisjointnessReport disjoint = atom_disjointness(forward, backward);
  report.checks.push_back(CheckRecord::inequality(claim::kAtomDisjoint, static_cast<long long>(forward.kappa),
                                                  disjoint.bug() ? 0 : 1, 1));
  report.witnesses["atom"] = forward.atoms.front().set.members();

  const AtomPropertyReport props = atom_properties(rel, forward, backward, brute_max_n);
  if (props.status == AtomPropertyReport::Status::NotApplicable) {
    report.notes.push_back("atom properties not applicable: " + props.reason);
    return report;
  }
  if (props.size_bound_holds) {
    report.checks.push_back(CheckRecord::inequality(claim::kAtomSizeBound, static_cast<long long>(forward.kappa),
                                                    static_cast<long long>(forward.kappa),
                                                    static_cast<long long>(forward.atom_size)));
  } else {
    report.notes.push_back("atom size bound skipped: disconnected (kappa = 0)");
  }
  report.checks.push_back(CheckRecord::inequality(claim::kAtomInducedTransitive, static_cast<long long>(forward.kappa),
                                                  props.induced_transitive ? 1 : 0, 1));
  return report;
}

}  // namespace relgraph
