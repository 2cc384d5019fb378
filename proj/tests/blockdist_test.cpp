#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "wordcensus/error.hpp"
#include "wordcensus/surface.hpp"

using namespace wordcensus;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidParameter;
}

std::vector<Permutation> all_of_degree(uint32_t n) {
  std::vector<uint32_t> m(n);
  std::iota(m.begin(), m.end(), 0u);
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

}  // namespace

TEST_CASE("identity needs no moves") {
  for (uint32_t n = 1; n <= 6; ++n)
    CHECK(block_transposition_distance(Permutation::identity(n), 16) == 0);
}

TEST_CASE("single interchanges") {
  CHECK(block_transposition_distance(parse_permutation("2 1"), 16) == 1);
  CHECK(block_transposition_distance(parse_permutation("1 3 2"), 16) == 1);
  CHECK(block_transposition_distance(parse_permutation("3 2 1"), 16) == 1);
  CHECK(block_transposition_distance(parse_permutation("4 5 1 2 3"), 16) == 1);
  CHECK(block_transposition_distance(parse_permutation("2 3 4 5 1"), 16) == 1);
}

TEST_CASE("full reversal of four elements") {
  Permutation rev = parse_permutation("4 3 2 1");
  CHECK(block_transposition_distance(rev, 16) == 2);
  CHECK(block_transposition_distance(rev, 2) == 2);
  CHECK(code_of([&] { block_transposition_distance(rev, 1); }) == Errc::DepthCapExceeded);
}

TEST_CASE("degree limits") {
  CHECK(code_of([] {
          block_transposition_distance(Permutation::identity(9), 16);
        }) == Errc::InvalidParameter);
  CHECK(code_of([] { block_distance_table(0, 16); }) == Errc::InvalidParameter);
  CHECK(block_transposition_distance(Permutation::identity(8), 16) == 0);
}

TEST_CASE("distance table covers the whole symmetric group") {
  auto table = block_distance_table(4, 16);
  REQUIRE(table.size() == 24);
  uint32_t max_d = 0, at_zero = 0;
  for (uint32_t d : table) {
    CHECK(d != UINT32_MAX);
    max_d = std::max(max_d, d);
    at_zero += d == 0;
  }
  CHECK(max_d == 2);
  CHECK(at_zero == 1);
  CHECK(table[0] == 0);
}

TEST_CASE("table agrees with single queries") {
  auto table = block_distance_table(4, 16);
  auto perms = all_of_degree(4);
  REQUIRE(perms.size() == table.size());
  // Lexicographic enumeration matches rank order.
  for (uint32_t r = 0; r < perms.size(); ++r)
    CHECK(block_transposition_distance(perms[r], 16) == table[r]);
}

TEST_CASE("distance is symmetric under inversion") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    uint32_t n = 2 + uint32_t(rng() % 4);
    std::vector<uint32_t> m(n);
    std::iota(m.begin(), m.end(), 0u);
    std::shuffle(m.begin(), m.end(), rng);
    Permutation sigma(m);
    CHECK(block_transposition_distance(sigma, 16) ==
          block_transposition_distance(sigma.inverse(), 16));
  }
}

TEST_CASE("distance equals rearrangement genus up to degree four") {
  for (uint32_t n = 1; n <= 4; ++n) {
    auto table = block_distance_table(n, 16);
    auto perms = all_of_degree(n);
    for (uint32_t r = 0; r < perms.size(); ++r) {
      CAPTURE(n);
      CAPTURE(perms[r].one_line_string());
      CHECK(genus(rearrangement_word(perms[r])).genus == table[r]);
    }
  }
}
