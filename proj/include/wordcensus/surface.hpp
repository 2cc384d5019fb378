#pragma once

#include <cstdint>

#include "wordcensus/permutation.hpp"
#include "wordcensus/word.hpp"

namespace wordcensus {

struct SurfaceCheck {
  bool is_surface = false;   // every variable occurs exactly twice
  bool orientable = false;   // each such pair has opposite signs
};

SurfaceCheck is_surface_word(const Word& w);

struct SurfaceReport {
  bool is_surface = false;
  bool orientable = false;
  uint32_t vertices = 0;
  uint32_t edges = 0;
  uint32_t faces = 0;
  int32_t euler_characteristic = 0;
  uint32_t genus = 0;
};

// Cell structure of the one-face identification polygon of an orientable
// surface word: V from corner tracing, E = length/2, F = 1.
SurfaceReport genus(const Word& w);

// a_1 ... a_n a_{σ(n)}^-1 ... a_{σ(1)}^-1, left unreduced.
Word rearrangement_word(const Permutation& sigma);

// Minimal number of moves turning 1..n into σ(1)..σ(n), where one move swaps
// two disjoint blocks of consecutive positions. Breadth-first oracle,
// degree ≤ 8 only.
uint32_t block_transposition_distance(const Permutation& sigma, uint32_t cap);

// Same distances for every permutation of degree n at once, indexed by the
// rank of the one-line image sequence in lexicographic order.
std::vector<uint32_t> block_distance_table(uint32_t n, uint32_t cap);

}  // namespace wordcensus
