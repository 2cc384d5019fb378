#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "wordcensus/crt.hpp"
#include "wordcensus/error.hpp"

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

// Reference lift by scanning: the least x >= 0 matching every congruence.
BigInt scan_lift(const std::vector<Residue>& rs, uint64_t limit) {
  for (uint64_t x = 0; x < limit; ++x) {
    bool ok = true;
    for (const auto& r : rs) ok = ok && x % r.modulus == r.value;
    if (ok) return BigInt(x);
  }
  FAIL("scan found no solution");
  return BigInt(-1);
}

}  // namespace

TEST_CASE("small lifts") {
  CHECK(crt_lift({{2, 5}, {2, 7}}, 30) == 2);
  CHECK(crt_lift({{4, 5}, {0, 7}}, 34) == 14);
  CHECK(crt_lift({{0, 3}, {0, 5}, {0, 7}}, 100) == 0);
  CHECK(crt_lift({{1, 2}, {2, 3}, {3, 5}, {5, 7}}, 200) == 173);
}

TEST_CASE("combined modulus must exceed the bound") {
  CHECK(code_of([] { crt_lift({{1, 3}}, 10); }) == Errc::InsufficientModuli);
  CHECK(code_of([] { crt_lift({{2, 5}, {2, 7}}, 35); }) == Errc::InsufficientModuli);
  // 35 > 34 is enough.
  CHECK(crt_lift({{4, 5}, {0, 7}}, 34) == 14);
}

TEST_CASE("overlapping moduli") {
  // x = 1 mod 4 forces odd; x = 2 mod 6 forces even.
  CHECK(code_of([] { crt_lift({{1, 4}, {2, 6}}, 10); }) == Errc::Inconsistent);
  // Consistent non-coprime pair, lcm 12.
  CHECK(crt_lift({{1, 4}, {3, 6}}, 11) == 9);
  CHECK(code_of([] { crt_lift({{1, 4}, {3, 6}}, 12); }) == Errc::InsufficientModuli);
}

TEST_CASE("input validation") {
  CHECK(code_of([] { crt_lift({}, 1); }) == Errc::InvalidParameter);
  CHECK(code_of([] { crt_lift({{5, 5}}, 1); }) == Errc::InvalidParameter);
  CHECK(code_of([] { crt_lift({{0, 1}}, 1); }) == Errc::InvalidParameter);
  CHECK(code_of([] { crt_lift({{0, 0}}, 1); }) == Errc::InvalidParameter);
}

TEST_CASE("random round trips against a scanning oracle") {
  std::mt19937_64 rng(20240817);
  const uint64_t moduli[] = {3, 5, 7, 11, 13};
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t m = 1;
    for (uint64_t p : moduli) m *= p;
    uint64_t v = rng() % m;
    std::vector<Residue> rs;
    for (uint64_t p : moduli) rs.push_back({v % p, p});
    CHECK(crt_lift(rs, BigInt(m) - 1) == v);
    CHECK(crt_lift(rs, BigInt(m) - 1) == scan_lift(rs, m));
  }
}

TEST_CASE("random overlapping moduli agree with the scan") {
  std::mt19937_64 rng(7);
  const uint64_t moduli[] = {4, 6, 9, 10};
  const uint64_t lcm_all = 180;
  for (int trial = 0; trial < 200; ++trial) {
    uint64_t v = rng() % lcm_all;
    std::vector<Residue> rs;
    for (uint64_t p : moduli) rs.push_back({v % p, p});
    CHECK(crt_lift(rs, lcm_all - 1) == v);
  }
}
