#include "relgraph/vertex_set.hpp"

#include <algorithm>

#include "relgraph/errors.hpp"

namespace relgraph {

namespace {
const simd::BitKernels& ops() { return simd::active_kernels(); }
}  // namespace

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (const std::size_t tail = universe & 63; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
  return s;
}

VertexSet VertexSet::singleton(std::size_t universe, Vertex v) {
  VertexSet s(universe);
  s.insert(v);
  return s;
}

VertexSet VertexSet::from_words(std::size_t universe, std::span<const Word> words) {
  VertexSet s(universe);
  const std::size_t count = std::min(words.size(), s.words_.size());
  std::copy_n(words.begin(), count, s.words_.begin());
  if (const std::size_t tail = universe & 63; tail != 0 && !s.words_.empty()) {
    s.words_.back() &= (Word{1} << tail) - 1;
  }
  return s;
}

std::size_t VertexSet::size() const noexcept { return ops().popcount(words_.data(), words_.size()); }

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " outside universe of size " +
                     std::to_string(universe_));
  }
  words_[v >> 6] |= Word{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(Word{1} << (v & 63));
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw InputError("vertex set universe mismatch: " + std::to_string(universe_) + " vs " +
                     std::to_string(other.universe_));
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  ops().or_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  ops().and_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  ops().andnot_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  return ops().is_subset(words_.data(), other.words_.data(), words_.size());
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  return ops().intersects(words_.data(), other.words_.data(), words_.size());
}

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  });
  out += '}';
  return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace relgraph
