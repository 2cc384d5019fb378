#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wordcensus {

// Step program for evaluating a word over all values of one distinguished
// "inner" variable x, with every other variable already fixed. Constant
// steps multiply by a precomputed element; Inner/InnerInverse multiply by
// x or x^-1.
enum class StepKind : uint8_t { Constant = 0, Inner = 1, InnerInverse = 2 };

// For each x in [x_begin, x_end): start from the identity, apply the steps
// through the multiplication table, and increment counts[final value].
// table and inv are the flat group tables; operands[i] is the element for a
// Constant step and ignored otherwise.
using CensusKernelFn = void (*)(const uint32_t* table, const uint32_t* inv, uint32_t order,
                                uint32_t identity, const uint8_t* kinds, const uint32_t* operands,
                                size_t num_steps, uint32_t x_begin, uint32_t x_end,
                                uint64_t* counts);

enum class KernelKind { Auto, Scalar, Avx2, Neon };

struct KernelInfo {
  const char* name;
  CensusKernelFn fn;
};

// Picks the implementation at runtime; explicit requests for an instruction
// set the machine lacks are an error, never a silent fallback.
KernelInfo resolve_kernel(KernelKind kind);

KernelKind parse_kernel_name(const std::string& name);

std::vector<std::string> available_kernel_names();

}  // namespace wordcensus
