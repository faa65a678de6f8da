#pragma once

// Word-level kernels behind VertexSet and Relation rows.
//
// Every kernel exists as a portable scalar reference and, on x86-64, as an
// AVX2 variant. The active table is chosen once at first use from the CPU
// feature bits; RELGRAPH_SIMD=scalar in the environment forces the reference
// path. Both variants must agree bit-for-bit (see tests/simd_test.cpp).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace relgraph::simd {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2 };

struct BitKernels {
  Isa isa;
  std::string_view name;
  // dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= src
  void (*and_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= ~src
  void (*andnot_into)(Word* dst, const Word* src, std::size_t words);
  std::size_t (*popcount)(const Word* src, std::size_t words);
  // (a & b) != 0
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  // (a & ~b) == 0
  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
  // dst |= rows[i] for every set bit i of mask (mask covers `rows.size() / words` rows)
  void (*gather_or)(Word* dst, const Word* mask, const Word* rows, std::size_t rows_count,
                    std::size_t words);
};

const BitKernels& scalar_kernels() noexcept;

// nullptr when the binary was built without the variant or the CPU lacks it.
const BitKernels* avx2_kernels() noexcept;

// The table every library operation uses.
const BitKernels& active_kernels() noexcept;

// Variants usable on this machine, reference first.
std::vector<const BitKernels*> available_kernels();

namespace detail {
// Defined in the per-ISA translation units.
extern const BitKernels kScalar;
#if defined(RELGRAPH_HAVE_AVX2)
extern const BitKernels kAvx2;
#endif
}  // namespace detail

}  // namespace relgraph::simd
