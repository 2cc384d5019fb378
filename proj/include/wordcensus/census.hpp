#pragma once

#include <cstdint>
#include <vector>

#include "wordcensus/chartable.hpp"
#include "wordcensus/exact.hpp"
#include "wordcensus/group.hpp"
#include "wordcensus/kernels.hpp"
#include "wordcensus/word.hpp"

namespace wordcensus {

struct CensusOptions {
  uint64_t budget = 100'000'000;  // maximum number of word evaluations
  uint32_t threads = 0;           // 0 = hardware concurrency
  KernelKind kernel = KernelKind::Auto;
  uint64_t seed = 0;              // character-table splitting seed
};

// Exact value distribution of a word over all assignments: counts[x] is the
// number of assignments evaluating to x, gamma the count at the identity.
struct WordCensus {
  Word word;
  uint32_t group_order = 0;
  BigInt total_tuples;
  std::vector<BigInt> counts;
  BigInt gamma;
  BigRat probability;
};

WordCensus census_bruteforce(const Word& w, const Group& g, const CensusOptions& opts = {});

// Character-sum census for orientable surface words, exact via per-prime
// tables and CRT lifting. Works for any genus, including 0.
WordCensus census_character(const Word& w, CharTableSource& tables);

// True when the two words induce the same distribution: counts agree after
// dividing by the respective totals.
bool measures_equal(const WordCensus& a, const WordCensus& b);

}  // namespace wordcensus
