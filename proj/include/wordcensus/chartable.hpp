#pragma once

#include <cstdint>
#include <vector>

#include "wordcensus/group.hpp"

namespace wordcensus {

// Least common multiple of the element orders.
uint32_t group_exponent(const Group& g);

// Class-algebra structure constants for class i: entry (j,k) counts pairs
// x in class i, y in class j with x*y equal to the representative of class k.
std::vector<std::vector<uint32_t>> class_matrix(const Group& g, const ConjugacyData& cd,
                                                uint32_t i);

// Smallest prime p ≡ 1 (mod exponent) with p > 2*order and p > after.
// Such a prime makes F_p a splitting field for the group algebra, so the
// whole character table lives in F_p.
uint64_t find_table_prime(uint32_t order, uint32_t exponent, uint64_t after = 0);

struct CharacterTable {
  uint32_t group_order = 0;
  uint32_t exponent = 0;
  uint64_t modulus = 0;
  // One row per irreducible, sorted by (dim, value row); values[r][j] is the
  // least residue of the character of row r at class j.
  std::vector<uint32_t> dims;
  std::vector<std::vector<uint64_t>> values;
};

// Dixon's modular method at a caller-chosen suitable prime.
CharacterTable dixon_table_mod(const Group& g, const ConjugacyData& cd, uint64_t prime,
                               uint64_t seed);

// Same, at the smallest suitable prime.
CharacterTable dixon_table(const Group& g, uint64_t seed = 0);

// Lazily materializes tables of one group at successive suitable primes, so
// callers can CRT-combine as many moduli as a count bound demands.
class CharTableSource {
 public:
  explicit CharTableSource(const Group& g, uint64_t seed = 0);

  const Group& group() const { return *group_; }
  const ConjugacyData& classes() const { return classes_; }
  uint32_t exponent() const { return exponent_; }

  const CharacterTable& table(size_t i);

 private:
  const Group* group_;
  ConjugacyData classes_;
  uint32_t exponent_;
  uint64_t seed_;
  std::vector<CharacterTable> tables_;
};

}  // namespace wordcensus
