#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wordcensus/catalog.hpp"
#include "wordcensus/census.hpp"
#include "wordcensus/chartable.hpp"
#include "wordcensus/error.hpp"
#include "wordcensus/group.hpp"
#include "wordcensus/json_io.hpp"
#include "wordcensus/word.hpp"

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

std::vector<uint32_t> sorted_class_sizes(const Group& g) {
  auto sizes = conjugacy(g).class_sizes;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("table construction validates structure") {
  Group c2 = Group::from_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.identity() == 0);
  CHECK(c2.inv(1) == 1);

  CHECK(code_of([] { Group::from_table({{0, 7}, {1, 0}}); }) == Errc::NotClosed);
  CHECK(code_of([] { Group::from_table({{0, 0}, {1, 0}}); }) == Errc::NoInverse);
  // Left identity 0 but no two-sided one.
  CHECK(code_of([] { Group::from_table({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}); }) == Errc::NoIdentity);
  CHECK(code_of([] { Group::from_table({{0, 1}, {1, 0}}, {"a", "a"}); }) == Errc::InvalidParameter);
  CHECK(code_of([] { Group::from_table({{0, 1}}); }) == Errc::InvalidParameter);
}

TEST_CASE("associativity check catches a loop that is not a group") {
  // Chein double of S3: a Moufang loop with two-sided inverses, so only the
  // associativity pass can reject it.
  Group s3 = preset_group(Preset::Symmetric, 3);
  const uint32_t n = s3.order();
  auto at = [&](uint32_t g, uint32_t t) { return t * n + g; };
  std::vector<std::vector<uint32_t>> table(2 * n, std::vector<uint32_t>(2 * n));
  for (uint32_t g = 0; g < n; ++g)
    for (uint32_t h = 0; h < n; ++h) {
      table[at(g, 0)][at(h, 0)] = at(s3.mul(g, h), 0);
      table[at(g, 0)][at(h, 1)] = at(s3.mul(h, g), 1);
      table[at(g, 1)][at(h, 0)] = at(s3.mul(g, s3.inv(h)), 1);
      table[at(g, 1)][at(h, 1)] = at(s3.mul(s3.inv(h), g), 0);
    }
  CHECK(code_of([&] { Group::from_table(table); }) == Errc::NotAssociative);

  GroupOptions lax;
  lax.assoc_check_cap = 4;  // below the loop's order: the check is skipped
  CHECK_NOTHROW(Group::from_table(table, {}, lax));
}

TEST_CASE("closure from generators") {
  Group s3 = Group::from_generators(
      3, {parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());

  Group trivial = Group::from_generators(2, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.label(0) == "()");

  Group s4 = Group::from_generators(
      4, {parse_permutation("(1 2)", 4), parse_permutation("(1 2 3 4)", 4)});
  CHECK(s4.order() == 24);

  GroupOptions tight;
  tight.order_cap = 2;
  CHECK(code_of([&] {
          Group::from_generators(3, {parse_permutation("(1 2 3)", 3)}, tight);
        }) == Errc::OrderCapExceeded);

  CHECK(code_of([] { Group::from_generators(3, {parse_permutation("(1 2)", 2)}); }) ==
        Errc::InvalidParameter);
}

TEST_CASE("cyclic preset") {
  Group c4 = preset_group(Preset::Cyclic, 4);
  CHECK(c4.order() == 4);
  CHECK(c4.is_abelian());
  CHECK(c4.label(0) == "e");
  CHECK(c4.label(1) == "g");
  CHECK(c4.label(3) == "g^3");
  CHECK(c4.element_order(1) == 4);
  CHECK(c4.element_order(2) == 2);
  CHECK(code_of([] { preset_group(Preset::Cyclic, 0); }) == Errc::InvalidParameter);
}

TEST_CASE("symmetric and alternating presets") {
  Group s3 = preset_group(Preset::Symmetric, 3);
  CHECK(s3.order() == 6);
  CHECK(sorted_class_sizes(s3) == std::vector<uint32_t>{1, 2, 3});

  Group s4 = preset_group(Preset::Symmetric, 4);
  CHECK(s4.order() == 24);
  CHECK(sorted_class_sizes(s4) == std::vector<uint32_t>{1, 3, 6, 6, 8});

  Group a4 = preset_group(Preset::Alternating, 4);
  CHECK(a4.order() == 12);
  CHECK(sorted_class_sizes(a4) == std::vector<uint32_t>{1, 3, 4, 4});

  CHECK(preset_group(Preset::Alternating, 3).order() == 3);
  CHECK(code_of([] { preset_group(Preset::Alternating, 2); }) == Errc::InvalidParameter);
  CHECK(code_of([] { preset_group(Preset::Symmetric, 8); }) == Errc::OrderCapExceeded);
}

TEST_CASE("dihedral preset") {
  Group d4 = preset_group(Preset::Dihedral, 4);
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.is_abelian());
  CHECK(sorted_class_sizes(d4) == std::vector<uint32_t>{1, 1, 2, 2, 2});

  Group d3 = preset_group(Preset::Dihedral, 3);
  CHECK(d3.order() == 6);
  CHECK(sorted_class_sizes(d3) == std::vector<uint32_t>{1, 2, 3});

  CHECK(code_of([] { preset_group(Preset::Dihedral, 2); }) == Errc::InvalidParameter);
}

TEST_CASE("quaternion preset multiplies like the unit quaternions") {
  Group q8 = preset_group(Preset::Quaternion8);
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  // Indices: 1, -1, i, -i, j, -j, k, -k.
  CHECK(q8.label(2) == "i");
  CHECK(q8.mul(2, 4) == 6);   // i*j = k
  CHECK(q8.mul(4, 2) == 7);   // j*i = -k
  CHECK(q8.mul(2, 2) == 1);   // i*i = -1
  CHECK(q8.element_order(2) == 4);
  CHECK(q8.element_order(1) == 2);
  CHECK(sorted_class_sizes(q8) == std::vector<uint32_t>{1, 1, 2, 2, 2});
}

TEST_CASE("direct products") {
  Group v4 = direct_product(preset_group(Preset::Cyclic, 2), preset_group(Preset::Cyclic, 2));
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  for (uint32_t x = 0; x < 4; ++x) CHECK(v4.mul(x, x) == v4.identity());
  CHECK(v4.label(0) == "(e,e)");
  CHECK(v4.label(3) == "(g,g)");
}

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("C12").order() == 12);
  CHECK(parse_group_spec("S4").order() == 24);
  CHECK(parse_group_spec("A3").order() == 3);
  CHECK(parse_group_spec("D6").order() == 12);
  CHECK(parse_group_spec("Q8").order() == 8);
  Group g = parse_group_spec("C2*C2*C3");
  CHECK(g.order() == 12);
  CHECK(g.is_abelian());
  CHECK(parse_group_spec(" C2 * C3 ").order() == 6);

  CHECK(code_of([] { parse_group_spec("B5"); }) == Errc::UnknownPreset);
  CHECK(code_of([] { parse_group_spec("Q16"); }) == Errc::UnknownPreset);
  CHECK(code_of([] { parse_group_spec("C"); }) == Errc::UnknownPreset);
  CHECK(code_of([] { parse_group_spec(""); }) == Errc::UnknownPreset);
  CHECK(code_of([] { parse_group_spec("D2"); }) == Errc::InvalidParameter);
}

TEST_CASE("conjugacy data is coherent") {
  for (const char* name : {"S4", "Q8", "D5", "C12"}) {
    CAPTURE(name);
    Group g = parse_group_spec(name);
    ConjugacyData cd = conjugacy(g);
    CHECK(cd.classes[0] == std::vector<uint32_t>{g.identity()});
    uint32_t covered = 0;
    for (uint32_t j = 0; j < cd.num_classes(); ++j) {
      CHECK(cd.class_sizes[j] == cd.classes[j].size());
      covered += cd.class_sizes[j];
      for (uint32_t x : cd.classes[j]) CHECK(cd.class_of[x] == j);
      // Inverting maps the class onto the claimed inverse class, and doing it
      // twice comes back.
      for (uint32_t x : cd.classes[j]) CHECK(cd.class_of[g.inv(x)] == cd.inverse_class[j]);
      CHECK(cd.inverse_class[cd.inverse_class[j]] == j);
    }
    CHECK(covered == g.order());
    // Conjugation never leaves a class.
    for (uint32_t x = 0; x < g.order(); ++x)
      for (uint32_t y = 0; y < g.order(); ++y)
        CHECK(cd.class_of[g.mul(g.mul(y, x), g.inv(y))] == cd.class_of[x]);
  }
}

TEST_CASE("orbit-stabilizer holds per class and classes have uniform order") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const Group& g = e.group;
    ConjugacyData cd = conjugacy(g);
    for (uint32_t j = 0; j < cd.num_classes(); ++j) {
      uint32_t lead_order = g.element_order(cd.classes[j][0]);
      for (uint32_t x : cd.classes[j]) {
        uint32_t centralizer = 0;
        for (uint32_t y = 0; y < g.order(); ++y)
          if (g.mul(x, y) == g.mul(y, x)) ++centralizer;
        CHECK(cd.class_sizes[j] * centralizer == g.order());
        CHECK(g.element_order(x) == lead_order);
      }
    }
  }
}

TEST_CASE("generator closure of S3 matches the preset by invariants") {
  Group built = Group::from_generators(
      3, {parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)});
  Group stock = preset_group(Preset::Symmetric, 3);

  CHECK(sorted_class_sizes(built) == sorted_class_sizes(stock));

  auto dims_of = [](const Group& g) {
    auto dims = dixon_table(g).dims;
    std::sort(dims.begin(), dims.end());
    return dims;
  };
  CHECK(dims_of(built) == dims_of(stock));

  // Same commutator-value distribution up to relabeling.
  Word comm = parse_word("[g1,g2]");
  auto counts_of = [&](const Group& g) {
    auto counts = census_bruteforce(comm, g).counts;
    std::sort(counts.begin(), counts.end());
    return counts;
  };
  CHECK(counts_of(built) == counts_of(stock));
}

TEST_CASE("commutator subgroup orders") {
  CHECK(commutator_subgroup_order(parse_group_spec("S3")) == 3);
  CHECK(commutator_subgroup_order(parse_group_spec("Q8")) == 2);
  CHECK(commutator_subgroup_order(parse_group_spec("A4")) == 4);
  CHECK(commutator_subgroup_order(parse_group_spec("S4")) == 12);
  CHECK(commutator_subgroup_order(parse_group_spec("D4")) == 2);
  CHECK(commutator_subgroup_order(parse_group_spec("C16")) == 1);
  CHECK(abelianization_order(parse_group_spec("S3")) == 2);
  CHECK(abelianization_order(parse_group_spec("Q8")) == 4);
}

TEST_CASE("json round trip") {
  Group q8 = preset_group(Preset::Quaternion8);
  Group back = group_from_json(group_to_json(q8));
  CHECK(back.order() == q8.order());
  CHECK(back.labels() == q8.labels());
  for (uint32_t a = 0; a < 8; ++a)
    for (uint32_t b = 0; b < 8; ++b) CHECK(back.mul(a, b) == q8.mul(a, b));

  ordered_json bad = {{"order", 3}, {"table", {{0, 1}, {1, 0}}}};
  CHECK(code_of([&] { group_from_json(bad); }) == Errc::ParseError);
}
