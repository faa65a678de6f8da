#include "relgraph/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "relgraph/automorphisms.hpp"
#include "relgraph/errors.hpp"

namespace relgraph {

Fragment Fragment::of(const Relation& rel, VertexSet set) {
  VertexSet boundary = image(rel, set) - set;
  const std::size_t value = boundary.size();
  return Fragment{std::move(set), std::move(boundary), value};
}

namespace {

// Vertex-split network: v_in = 2v, v_out = 2v + 1. v_in -> v_out has capacity 1,
// u_out -> v_in has unbounded capacity for every arc u -> v with u != v.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Relation& rel) : n_(rel.size()), adjacency_(2 * rel.size()) {
    for (Vertex v = 0; v < n_; ++v) add_edge(in(v), out(v), 1);
    const std::int32_t unbounded = static_cast<std::int32_t>(n_ + 1);
    for (const auto& [u, v] : rel.arcs()) {
      if (u != v) add_edge(out(u), in(v), unbounded);
    }
    parent_edge_.resize(2 * n_);
    queue_.reserve(2 * n_);
  }

  // Max flow from s_out to t_in, stopping once it exceeds `limit`.
  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit) {
    std::copy(capacity_.begin(), capacity_.end(), residual_.begin());
    const std::size_t source = out(s);
    const std::size_t sink = in(t);
    std::size_t flow = 0;
    while (flow <= limit && augment(source, sink)) ++flow;
    return flow;
  }

  // Originals whose out-copy is reachable from s_out in the residual network.
  VertexSet residual_side(Vertex s) {
    VertexSet side(n_);
    reachable(out(s), std::numeric_limits<std::size_t>::max());
    for (Vertex v = 0; v < n_; ++v) {
      if (seen_[out(v)]) side.insert(v);
    }
    return side;
  }

 private:
  static std::size_t in(Vertex v) { return 2 * v; }
  static std::size_t out(Vertex v) { return 2 * v + 1; }

  void add_edge(std::size_t from, std::size_t to, std::int32_t cap) {
    adjacency_[from].push_back(head_.size());
    head_.push_back(to);
    capacity_.push_back(cap);
    adjacency_[to].push_back(head_.size());
    head_.push_back(from);
    capacity_.push_back(0);
    residual_.resize(capacity_.size());
  }

  // BFS over residual edges; records parents. Returns whether `sink` was reached.
  bool reachable(std::size_t source, std::size_t sink) {
    seen_.assign(2 * n_, 0);
    queue_.clear();
    queue_.push_back(source);
    seen_[source] = 1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::size_t node = queue_[head];
      for (std::size_t e : adjacency_[node]) {
        const std::size_t next = head_[e];
        if (residual_[e] <= 0 || seen_[next]) continue;
        seen_[next] = 1;
        parent_edge_[next] = e;
        if (next == sink) return true;
        queue_.push_back(next);
      }
    }
    return false;
  }

  // Every augmenting path crosses a unit split edge, so each carries one unit.
  bool augment(std::size_t source, std::size_t sink) {
    if (!reachable(source, sink)) return false;
    for (std::size_t node = sink; node != source;) {
      const std::size_t e = parent_edge_[node];
      residual_[e] -= 1;
      residual_[e ^ 1] += 1;
      node = head_[e ^ 1];
    }
    return true;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> head_;
  std::vector<std::int32_t> capacity_;
  std::vector<std::int32_t> residual_;
  std::vector<std::size_t> parent_edge_;
  std::vector<char> seen_;
  std::vector<std::size_t> queue_;
};

void require_pair(const Relation& rel, Vertex s, Vertex t) {
  if (s >= rel.size() || t >= rel.size()) throw InputError("vertex out of range");
  if (s == t) throw InputError("min_separating_set needs distinct s and t");
}

void sort_lex(std::vector<Fragment>& fragments) {
  std::sort(fragments.begin(), fragments.end(),
            [](const Fragment& a, const Fragment& b) { return lex_less(a.set, b.set); });
}

}  // namespace

std::variant<SeparatingSet, Inseparable> min_separating_set(const Relation& rel, Vertex s, Vertex t) {
  require_pair(rel, s, t);
  if (rel.has_arc(s, t)) return Inseparable{};
  SplitNetwork network(rel);
  const std::size_t value = network.max_flow(s, t, std::numeric_limits<std::size_t>::max() - 1);
  return SeparatingSet{value, network.residual_side(s)};
}

ConnectivityResult kappa(const Relation& rel, const KappaOptions& options) {
  const std::size_t n = rel.size();
  if (n < 2) throw InputError("connectivity needs at least 2 vertices");
  ConnectivityResult result;
  if (covers_all_pairs(rel)) {
    result.kappa = static_cast<std::size_t>(static_cast<long long>(n - 1) + options.fault_offset);
    result.witness = Complete{};
    return result;
  }

  SplitNetwork network(rel);
  std::size_t best = n;  // any boundary is at most n - 1
  std::vector<VertexSet> candidates;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t || rel.has_arc(s, t)) continue;
      const std::size_t value = network.max_flow(s, t, best);
      if (value > best) continue;
      VertexSet side = network.residual_side(s);
      if (value < best) {
        best = value;
        candidates.clear();
      }
      candidates.push_back(std::move(side));
    }
  }

  std::size_t smallest = n;
  for (const auto& c : candidates) smallest = std::min(smallest, c.size());
  for (auto& c : candidates) {
    if (c.size() != smallest) continue;
    if (std::none_of(result.atoms.begin(), result.atoms.end(), [&](const Fragment& f) { return f.set == c; })) {
      result.atoms.push_back(Fragment::of(rel, std::move(c)));
    }
  }
  sort_lex(result.atoms);
  result.kappa = static_cast<std::size_t>(static_cast<long long>(best) + options.fault_offset);
  result.atom_size = smallest;
  result.witness = result.atoms.front();
  return result;
}

OracleResult fragments_oracle(const Relation& rel, std::size_t max_n) {
  const std::size_t n = rel.size();
  if (n > max_n || n > 30) throw ThresholdError("fragment oracle", n, std::min<std::size_t>(max_n, 30));
  if (n == 0) throw InputError("fragment oracle needs at least one vertex");
  std::vector<std::uint64_t> row(n);
  for (Vertex v = 0; v < n; ++v) row[v] = rel.row(v)[0];
  const std::uint64_t everything = (std::uint64_t{1} << n) - 1;

  OracleResult out;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint64_t> minimisers;
  for (std::uint64_t x = 1; x <= everything; ++x) {
    std::uint64_t img = 0;
    for (std::uint64_t bits = x; bits != 0; bits &= bits - 1) img |= row[std::countr_zero(bits)];
    if ((x | img) == everything) continue;
    const auto boundary = static_cast<std::size_t>(std::popcount(img & ~x));
    if (boundary < best) {
      best = boundary;
      minimisers.clear();
    }
    if (boundary == best) minimisers.push_back(x);
  }
  if (minimisers.empty()) {
    out.complete = true;
    out.kappa = n - 1;
    return out;
  }
  out.kappa = best;
  for (std::uint64_t x : minimisers) {
    const Word w = x;
    out.fragments.push_back(Fragment::of(rel, VertexSet::from_words(n, std::span<const Word>(&w, 1))));
  }
  return out;
}

std::optional<Fragment> atom_containing(const Relation& rel, Vertex v) {
  if (v >= rel.size()) throw InputError("vertex out of range");
  const ConnectivityResult result = kappa(rel);
  if (result.complete()) throw AtomsUndefined();
  for (const auto& atom : result.atoms) {
    if (atom.set.contains(v)) return atom;
  }
  return std::nullopt;
}

bool pairwise_disjoint(const std::vector<Fragment>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i].set.intersects(atoms[j].set)) return false;
    }
  }
  return true;
}

AtomDisjointnessReport atom_disjointness(const ConnectivityResult& forward, const ConnectivityResult& backward) {
  if (forward.complete() || backward.complete()) throw AtomsUndefined();
  AtomDisjointnessReport report;
  report.forward_atom_size = forward.atom_size;
  report.reverse_atom_size = backward.atom_size;
  report.forward_atom_count = forward.atoms.size();
  report.reverse_atom_count = backward.atoms.size();
  report.forward_disjoint = pairwise_disjoint(forward.atoms);
  report.reverse_disjoint = pairwise_disjoint(backward.atoms);
  return report;
}

AtomDisjointnessReport check_atom_disjointness(const Relation& rel) {
  const ConnectivityResult forward = kappa(rel);
  if (forward.complete()) throw AtomsUndefined();
  return atom_disjointness(forward, kappa(reverse(rel)));
}

AtomPropertyReport atom_properties(const Relation& rel, const ConnectivityResult& forward,
                                   const ConnectivityResult& backward, std::size_t brute_max_n) {
  using Status = AtomPropertyReport::Status;
  AtomPropertyReport report;
  if (forward.complete()) {
    report.reason = "complete relation";
    return report;
  }
  report.kappa = forward.kappa;
  report.atom_size = forward.atom_size;
  report.reverse_atom_size = backward.atom_size;
  if (forward.atom_size > backward.atom_size) {
    report.reason = "a(reverse) < a(relation)";
    return report;
  }
  if (forward.kappa >= 1) report.size_bound_holds = true;
  report.induced_transitive = true;
  for (const auto& atom : forward.atoms) {
    report.atoms.push_back(atom.set);
    if (report.size_bound_holds && atom.set.size() > forward.kappa) report.size_bound_holds = false;
    if (!is_point_transitive_brute(restriction(rel, atom.set).relation, brute_max_n)) {
      report.induced_transitive = false;
    }
  }
  report.status =
      report.size_bound_holds.value_or(true) && report.induced_transitive ? Status::Holds : Status::Violated;
  return report;
}

AtomPropertyReport check_atom_properties(const Relation& rel, const TransitivityCertificate& transitivity,
                                         std::size_t brute_max_n) {
  if (!transitivity.certified()) {
    AtomPropertyReport report;
    report.reason = "transitivity not certified (" + transitivity.describe() + ")";
    return report;
  }
  const ConnectivityResult forward = kappa(rel);
  if (forward.complete()) return atom_properties(rel, forward, forward, brute_max_n);
  return atom_properties(rel, forward, kappa(reverse(rel)), brute_max_n);
}

}  // namespace relgraph
