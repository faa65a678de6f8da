// Compiled with -mavx2; only reached through the dispatcher after a CPU check.
#include <immintrin.h>

#include <bit>

#include "relgraph/simd/bitops.hpp"

namespace relgraph::simd {
namespace {

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void or_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  // _mm256_andnot_si256(a, b) computes ~a & b.
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
  for (; i < words; ++i) dst[i] &= ~src[i];
}

// Nibble lookup popcount (Mula): per-byte counts summed with SAD into 64-bit lanes.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

std::size_t popcount(const Word* src, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(load(src + i)), _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
  return total;
}

bool intersects(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

bool is_subset(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  // testc(b, a) is 1 iff (~b & a) == 0.
  for (; i + 4 <= words; i += 4) {
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < words; ++i) {
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
const BitKernels kAvx2{Isa::Avx2, "avx2",      &or_into,   &and_into, &andnot_into,
                       &popcount, &intersects, &is_subset, &gather_or};
}  // namespace detail

}  // namespace relgraph::simd
