#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wordcensus/census.hpp"
#include "wordcensus/exact.hpp"
#include "wordcensus/group.hpp"
#include "wordcensus/permutation.hpp"

namespace wordcensus {

// c(G)/|G|: conjugacy class count over order.
BigRat commuting_probability(const Group& g);

// 1/2 + 2^-(2k+1); k must be at least 1.
BigRat llr_bound(int64_t k);

struct BoundReport {
  std::string kind;                    // "five_eighths" or "llr"
  BigRat c_over_G;                     // commuting probability
  BigRat probability;                  // the probability the bound constrains
  std::optional<BigRat> bound_value;   // absent when not applicable
  bool satisfied = false;
  bool applicable = false;             // nonabelian (5/8) resp. genus ≥ 1 (llr)
  int64_t genus_k = 0;
  BigRat one_dim_fraction;             // dim-1 irrep count / class count
  uint32_t commutator_order = 0;
  std::string sigma;                   // cycle form, llr reports only
};

BoundReport check_five_eighths(const Group& g);

// Satisfaction probability of the rearrangement word of σ against the genus
// bound; the character-formula count is cross-checked by brute force
// whenever |G|^n fits the budget.
BoundReport check_llr(const Permutation& sigma, CharTableSource& tables,
                      const CensusOptions& opts = {});
BoundReport check_llr(const Permutation& sigma, const Group& g, const CensusOptions& opts = {});

}  // namespace wordcensus
