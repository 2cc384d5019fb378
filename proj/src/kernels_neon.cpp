#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>
#include <cstdint>

namespace wordcensus::kernels {

void census_scalar(const uint32_t* table, const uint32_t* inv, uint32_t order, uint32_t identity,
                   const uint8_t* kinds, const uint32_t* operands, size_t num_steps,
                   uint32_t x_begin, uint32_t x_end, uint64_t* counts);

// Four values of the inner variable per iteration; table lookups go through
// a per-lane gather since NEON has none.
void census_neon(const uint32_t* table, const uint32_t* inv, uint32_t order, uint32_t identity,
                 const uint8_t* kinds, const uint32_t* operands, size_t num_steps,
                 uint32_t x_begin, uint32_t x_end, uint64_t* counts) {
  const uint32x4_t vorder = vdupq_n_u32(order);
  const uint32x4_t lanes = {0, 1, 2, 3};
  uint32_t idx_arr[4];
  uint32_t gathered[4];
  uint32_t finals[4];
  uint32_t x = x_begin;
  for (; x + 4 <= x_end; x += 4) {
    const uint32x4_t vx = vaddq_u32(vdupq_n_u32(x), lanes);
    const uint32x4_t vxinv = vld1q_u32(inv + x);
    uint32x4_t acc = vdupq_n_u32(identity);
    for (size_t s = 0; s < num_steps; ++s) {
      uint32x4_t operand;
      switch (kinds[s]) {
        case 0: operand = vdupq_n_u32(operands[s]); break;
        case 1: operand = vx; break;
        default: operand = vxinv; break;
      }
      uint32x4_t idx = vmlaq_u32(operand, acc, vorder);
      vst1q_u32(idx_arr, idx);
      for (int lane = 0; lane < 4; ++lane) gathered[lane] = table[idx_arr[lane]];
      acc = vld1q_u32(gathered);
    }
    vst1q_u32(finals, acc);
    for (int lane = 0; lane < 4; ++lane) ++counts[finals[lane]];
  }
  if (x < x_end)
    census_scalar(table, inv, order, identity, kinds, operands, num_steps, x, x_end, counts);
}

}  // namespace wordcensus::kernels

#endif
