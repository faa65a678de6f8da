#include <bit>

#include "relgraph/simd/bitops.hpp"

namespace relgraph::simd {
namespace {

void or_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

std::size_t popcount(const Word* src, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
  return total;
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

void gather_or(Word* dst, const Word* mask, const Word* rows, std::size_t rows_count,
               std::size_t words) {
  const std::size_t mask_words = (rows_count + 63) / 64;
  for (std::size_t w = 0; w < mask_words; ++w) {
    Word bits = mask[w];
    while (bits != 0) {
      const std::size_t row = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      or_into(dst, rows + row * words, words);
    }
  }
}

}  // namespace

namespace detail {
const BitKernels kScalar{Isa::Scalar, "scalar",   &or_into,   &and_into, &andnot_into,
                         &popcount,   &intersects, &is_subset, &gather_or};
}  // namespace detail

}  // namespace relgraph::simd
