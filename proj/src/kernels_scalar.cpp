#include <cstddef>
#include <cstdint>

namespace wordcensus::kernels {

void census_scalar(const uint32_t* table, const uint32_t* inv, uint32_t order, uint32_t identity,
                   const uint8_t* kinds, const uint32_t* operands, size_t num_steps,
                   uint32_t x_begin, uint32_t x_end, uint64_t* counts) {
  for (uint32_t x = x_begin; x < x_end; ++x) {
    uint32_t acc = identity;
    uint32_t xinv = inv[x];
    for (size_t s = 0; s < num_steps; ++s) {
      uint32_t operand;
      switch (kinds[s]) {
        case 0: operand = operands[s]; break;
        case 1: operand = x; break;
        default: operand = xinv; break;
      }
      acc = table[size_t(acc) * order + operand];
    }
    ++counts[acc];
  }
}

}  // namespace wordcensus::kernels
