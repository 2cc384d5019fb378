#pragma once

#include <cstdint>
#include <vector>

#include "wordcensus/exact.hpp"

namespace wordcensus {

struct Residue {
  uint64_t value = 0;
  uint64_t modulus = 0;
};

// Reconstructs the unique integer in [0, prod moduli) matching every residue.
// The product of the moduli must strictly exceed `bound`, the caller's a
// priori bound on the true value, so that the lift is forced.
BigInt crt_lift(const std::vector<Residue>& residues, const BigInt& bound);

}  // namespace wordcensus
