#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace wordcensus::kernels {

void census_scalar(const uint32_t* table, const uint32_t* inv, uint32_t order, uint32_t identity,
                   const uint8_t* kinds, const uint32_t* operands, size_t num_steps,
                   uint32_t x_begin, uint32_t x_end, uint64_t* counts);

// Eight values of the inner variable per iteration. Indices stay below
// order² ≤ 20160², well inside the signed 32-bit range the gather needs.
void census_avx2(const uint32_t* table, const uint32_t* inv, uint32_t order, uint32_t identity,
                 const uint8_t* kinds, const uint32_t* operands, size_t num_steps,
                 uint32_t x_begin, uint32_t x_end, uint64_t* counts) {
  const int* tab = reinterpret_cast<const int*>(table);
  const __m256i vorder = _mm256_set1_epi32(static_cast<int>(order));
  const __m256i lanes = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  alignas(32) int finals[8];
  uint32_t x = x_begin;
  for (; x + 8 <= x_end; x += 8) {
    const __m256i vx = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(x)), lanes);
    const __m256i vxinv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inv + x));
    __m256i acc = _mm256_set1_epi32(static_cast<int>(identity));
    for (size_t s = 0; s < num_steps; ++s) {
      __m256i operand;
      switch (kinds[s]) {
        case 0: operand = _mm256_set1_epi32(static_cast<int>(operands[s])); break;
        case 1: operand = vx; break;
        default: operand = vxinv; break;
      }
      __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(acc, vorder), operand);
      acc = _mm256_i32gather_epi32(tab, idx, 4);
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(finals), acc);
    for (int lane = 0; lane < 8; ++lane) ++counts[static_cast<uint32_t>(finals[lane])];
  }
  if (x < x_end)
    census_scalar(table, inv, order, identity, kinds, operands, num_steps, x, x_end, counts);
}

}  // namespace wordcensus::kernels

#endif
