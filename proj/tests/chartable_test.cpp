#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "wordcensus/chartable.hpp"
#include "wordcensus/error.hpp"
#include "wordcensus/group.hpp"
#include "wordcensus/modarith.hpp"

using namespace wordcensus;

namespace {

// Counts factorizations rep_k = x*y with x in class i, y in class j, by direct
// enumeration over pairs.
std::vector<std::vector<uint32_t>> class_matrix_by_pairs(const Group& g, const ConjugacyData& cd,
                                                         uint32_t i) {
  const uint32_t c = cd.num_classes();
  std::vector<std::vector<uint32_t>> m(c, std::vector<uint32_t>(c, 0));
  for (uint32_t k = 0; k < c; ++k) {
    const uint32_t rep = cd.classes[k][0];
    for (uint32_t x : cd.classes[i])
      for (uint32_t y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == rep) ++m[cd.class_of[y]][k];
  }
  return m;
}

}  // namespace

TEST_CASE("group exponent") {
  CHECK(group_exponent(parse_group_spec("S3")) == 6);
  CHECK(group_exponent(parse_group_spec("Q8")) == 4);
  CHECK(group_exponent(parse_group_spec("C1")) == 1);
  CHECK(group_exponent(parse_group_spec("C12")) == 12);
  CHECK(group_exponent(parse_group_spec("S4")) == 12);
  CHECK(group_exponent(parse_group_spec("C2*C6")) == 6);
}

TEST_CASE("prime selection") {
  CHECK(find_table_prime(6, 6) == 13);
  CHECK(find_table_prime(8, 4) == 17);
  CHECK(find_table_prime(4, 4) == 13);
  CHECK(find_table_prime(24, 12) == 61);
  CHECK(find_table_prime(1, 1) == 3);
  CHECK(find_table_prime(24, 12, 61) == 73);
  CHECK(find_table_prime(24, 12, 73) == 97);
  CHECK(find_table_prime(6, 6, 13) == 19);
  CHECK(find_table_prime(8, 4, 17) == 29);
}

TEST_CASE("identity class matrix is the identity") {
  for (const char* name : {"S3", "Q8", "S4"}) {
    CAPTURE(name);
    Group g = parse_group_spec(name);
    ConjugacyData cd = conjugacy(g);
    auto m = class_matrix(g, cd, 0);
    for (uint32_t j = 0; j < cd.num_classes(); ++j)
      for (uint32_t k = 0; k < cd.num_classes(); ++k)
        CHECK(m[j][k] == (j == k ? 1 : 0));
  }
}

TEST_CASE("class matrices match pair enumeration") {
  for (const char* name : {"S4", "D5", "Q8"}) {
    CAPTURE(name);
    Group g = parse_group_spec(name);
    ConjugacyData cd = conjugacy(g);
    for (uint32_t i = 0; i < cd.num_classes(); ++i) {
      CAPTURE(i);
      CHECK(class_matrix(g, cd, i) == class_matrix_by_pairs(g, cd, i));
    }
  }
}

TEST_CASE("cyclic group class matrices are shifts") {
  Group c4 = parse_group_spec("C4");
  ConjugacyData cd = conjugacy(c4);
  REQUIRE(cd.num_classes() == 4);
  for (uint32_t i = 0; i < 4; ++i) {
    auto m = class_matrix(c4, cd, i);
    for (uint32_t j = 0; j < 4; ++j)
      for (uint32_t k = 0; k < 4; ++k) CHECK(m[j][k] == ((i + j) % 4 == k ? 1 : 0));
  }
}

TEST_CASE("table of the symmetric group on three letters") {
  // Rows in canonical order: trivial, sign, the 2-dimensional character.
  // Classes: identity, transpositions, 3-cycles. Entries are mod 13.
  CharacterTable t = dixon_table(parse_group_spec("S3"));
  CHECK(t.group_order == 6);
  CHECK(t.exponent == 6);
  CHECK(t.modulus == 13);
  CHECK(t.dims == std::vector<uint32_t>{1, 1, 2});
  CHECK(t.values == std::vector<std::vector<uint64_t>>{{1, 1, 1}, {1, 12, 1}, {2, 0, 12}});
}

TEST_CASE("table of the quaternion group") {
  CharacterTable t = dixon_table(parse_group_spec("Q8"));
  CHECK(t.modulus == 17);
  CHECK(t.dims == std::vector<uint32_t>{1, 1, 1, 1, 2});
  // Classes: 1, -1, {i,-i}, {j,-j}, {k,-k}. The three nontrivial linear
  // characters kill one of i, j, k each; the 2-dimensional one sends -1 to -2.
  CHECK(t.values == std::vector<std::vector<uint64_t>>{{1, 1, 1, 1, 1},
                                                       {1, 1, 1, 16, 16},
                                                       {1, 1, 16, 1, 16},
                                                       {1, 1, 16, 16, 1},
                                                       {2, 15, 0, 0, 0}});
}

TEST_CASE("trivial group") {
  CharacterTable t = dixon_table(parse_group_spec("C1"));
  CHECK(t.modulus == 3);
  CHECK(t.dims == std::vector<uint32_t>{1});
  CHECK(t.values == std::vector<std::vector<uint64_t>>{{1}});
}

TEST_CASE("seed independence") {
  Group s4 = parse_group_spec("S4");
  CharacterTable a = dixon_table(s4, 0);
  CharacterTable b = dixon_table(s4, 987654321);
  CHECK(a.dims == b.dims);
  CHECK(a.values == b.values);
  CHECK(a.dims == std::vector<uint32_t>{1, 1, 2, 3, 3});
}

TEST_CASE("abelian tables are multiplicative in the class index") {
  // For C4 the class of index i is the singleton {g^i}, so each row must be a
  // homomorphism into the roots of unity mod p.
  CharacterTable t = dixon_table(parse_group_spec("C4"));
  CHECK(t.modulus == 13);
  CHECK(t.dims == std::vector<uint32_t>{1, 1, 1, 1});
  for (const auto& row : t.values) {
    for (uint64_t v : row) CHECK(powmod(v, 4, t.modulus) == 1);
    for (uint32_t i = 0; i < 4; ++i)
      for (uint32_t j = 0; j < 4; ++j)
        CHECK(mulmod(row[i], row[j], t.modulus) == row[(i + j) % 4]);
  }
}

TEST_CASE("klein four group rows are the four square roots of one") {
  CharacterTable t = dixon_table(parse_group_spec("C2*C2"));
  CHECK(t.modulus == 11);
  CHECK(t.dims == std::vector<uint32_t>{1, 1, 1, 1});
  for (const auto& row : t.values)
    for (uint64_t v : row) CHECK((v == 1 || v == 10));
  // All four rows distinct.
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = a + 1; b < 4; ++b) CHECK(t.values[a] != t.values[b]);
}

TEST_CASE("row orthogonality mod p") {
  for (const char* name : {"S4", "D6", "A4"}) {
    CAPTURE(name);
    Group g = parse_group_spec(name);
    ConjugacyData cd = conjugacy(g);
    CharacterTable t = dixon_table(g, 5);
    const uint64_t p = t.modulus;
    const uint32_t c = cd.num_classes();
    REQUIRE(t.values.size() == c);
    for (uint32_t r = 0; r < c; ++r)
      for (uint32_t s = 0; s < c; ++s) {
        uint64_t acc = 0;
        for (uint32_t j = 0; j < c; ++j) {
          uint64_t term = mulmod(t.values[r][j], t.values[s][cd.inverse_class[j]], p);
          acc = (acc + mulmod(cd.class_sizes[j], term, p)) % p;
        }
        CHECK(acc == (r == s ? g.order() % p : 0));
      }
  }
}

TEST_CASE("sum of squared dimensions") {
  for (const char* name : {"S3", "S4", "A4", "D7", "C2*C8", "Q8"}) {
    CAPTURE(name);
    Group g = parse_group_spec(name);
    CharacterTable t = dixon_table(g);
    uint64_t sum = 0;
    for (uint32_t d : t.dims) sum += uint64_t(d) * d;
    CHECK(sum == g.order());
    CHECK(t.values.size() == conjugacy(g).num_classes());
  }
}

TEST_CASE("successive tables use increasing primes") {
  Group s3 = parse_group_spec("S3");
  CharTableSource src(s3);
  CHECK(src.table(0).modulus == 13);
  CHECK(src.table(1).modulus == 19);
  CHECK(src.table(2).modulus == 31);
  CHECK(src.table(0).dims == src.table(1).dims);
  // Values reduce the same characters, so the sign row mod 19 flips 12 to 18.
  CHECK(src.table(1).values ==
        std::vector<std::vector<uint64_t>>{{1, 1, 1}, {1, 18, 1}, {2, 0, 18}});
  CHECK(src.exponent() == 6);
  CHECK(src.classes().num_classes() == 3);
}
