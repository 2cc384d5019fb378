#include "wordcensus/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wordcensus/bounds.hpp"
#include "wordcensus/catalog.hpp"
#include "wordcensus/census.hpp"
#include "wordcensus/chartable.hpp"
#include "wordcensus/error.hpp"
#include "wordcensus/modarith.hpp"
#include "wordcensus/surface.hpp"

namespace wordcensus {

namespace {

const Group& catalog_group(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e.group;
  throw Error(Errc::UnknownPreset, "no catalog entry '" + name + "'");
}

std::vector<Permutation> all_perms(uint32_t n) {
  std::vector<uint32_t> m(n);
  std::iota(m.begin(), m.end(), 0u);
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

// Commuting probability must equal `want` both by class counting and by the
// |G|² commutator-word enumeration.
std::string expect_commuting(const std::string& name, const Group& g, const BigRat& want) {
  BigRat by_classes = commuting_probability(g);
  if (by_classes != want)
    return name + ": class count gives " + fraction_string(by_classes) + ", expected " +
           fraction_string(want);
  WordCensus c = census_bruteforce(parse_word("[g1,g2]"), g);
  if (c.probability != want)
    return name + ": pair enumeration gives " + fraction_string(c.probability) + ", expected " +
           fraction_string(want);
  return "";
}

std::string criterion_tight_bounds() {
  for (const char* name : {"Q8", "D4"}) {
    std::string err = expect_commuting(name, catalog_group(name), BigRat(5, 8));
    if (!err.empty()) return err;
  }
  std::string err = expect_commuting("S3", catalog_group("S3"), BigRat(1, 2));
  if (!err.empty()) return err;
  for (const auto& e : catalog()) {
    if (!e.group.is_abelian()) continue;
    err = expect_commuting(e.name, e.group, BigRat(1, 1));
    if (!err.empty()) return err;
  }
  return "";
}

std::string criterion_oracle_equivalence() {
  std::vector<Word> words = {parse_word("[g1,g2]"), parse_word("[g1,g2][g3,g4]")};
  for (const auto& sigma : all_perms(4)) words.push_back(rearrangement_word(sigma));
  for (const auto& e : catalog()) {
    CharTableSource tables(e.group);
    for (const auto& w : words) {
      WordCensus brute = census_bruteforce(w, e.group);
      WordCensus character = census_character(w, tables);
      if (brute.counts != character.counts)
        return e.name + ", word " + w.to_string() + ": censuses differ";
    }
  }
  return "";
}

std::string criterion_genus2_spot() {
  const Group& s3 = catalog_group("S3");
  WordCensus c = census_bruteforce(parse_word("[g1,g2][g3,g4]"), s3);
  if (c.gamma != 486) return "gamma " + c.gamma.str() + ", expected 486";
  if (c.total_tuples != 1296) return "total " + c.total_tuples.str() + ", expected 1296";
  if (c.probability != BigRat(3, 8))
    return "probability " + fraction_string(c.probability) + ", expected 3/8";
  if (llr_bound(2) != BigRat(17, 32))
    return "k=2 bound " + fraction_string(llr_bound(2)) + ", expected 17/32";
  if (!(c.probability <= llr_bound(2))) return "3/8 not within the k=2 bound";
  return "";
}

std::string criterion_block_distance() {
  for (uint32_t n = 1; n <= 6; ++n) {
    std::vector<uint32_t> dist = block_distance_table(n, 16);
    std::vector<uint32_t> m(n);
    std::iota(m.begin(), m.end(), 0u);
    size_t rank = 0;
    do {
      Permutation sigma(m);
      uint32_t by_genus = genus(rearrangement_word(sigma)).genus;
      uint32_t by_bfs = dist[rank];
      if (by_bfs == UINT32_MAX) return "BFS cap hit at degree " + std::to_string(n);
      if (by_genus != by_bfs)
        return "degree " + std::to_string(n) + ", sigma " + sigma.cycle_string() + ": genus " +
               std::to_string(by_genus) + " vs distance " + std::to_string(by_bfs);
      ++rank;
    } while (std::next_permutation(m.begin(), m.end()));
  }
  return "";
}

std::string criterion_homeomorphism_invariance() {
  Word octagon = parse_word("g1 g2 g3 g1^-1 g4 g3^-1 g2^-1 g4^-1");
  Word commutator = parse_word("[g1,g2]");
  for (const auto& e : catalog()) {
    if (e.group.order() > 12) continue;
    WordCensus a = census_bruteforce(octagon, e.group);
    WordCensus b = census_bruteforce(commutator, e.group);
    if (!measures_equal(a, b)) return e.name + ": octagon and commutator measures differ";
  }
  return "";
}

std::string criterion_chartable_invariants() {
  for (const auto& e : catalog()) {
    const Group& g = e.group;
    ConjugacyData cd = conjugacy(g);
    CharacterTable t = dixon_table(g, 0);
    const uint64_t p = t.modulus;
    const uint32_t c = cd.num_classes();
    auto fail = [&](const std::string& what) { return e.name + ": " + what; };

    if (t.dims.size() != c) return fail("row count != class count");
    uint64_t dim_sq = 0;
    uint32_t one_dim = 0, trivial_rows = 0;
    for (size_t r = 0; r < t.dims.size(); ++r) {
      dim_sq += uint64_t(t.dims[r]) * t.dims[r];
      if (g.order() % t.dims[r] != 0) return fail("dim does not divide order");
      one_dim += t.dims[r] == 1;
      trivial_rows += std::all_of(t.values[r].begin(), t.values[r].end(),
                                  [](uint64_t v) { return v == 1; });
    }
    if (dim_sq != g.order()) return fail("sum of squared dims != order");
    if (one_dim != abelianization_order(g)) return fail("dim-1 row count != abelianization order");
    if (trivial_rows != 1) return fail("trivial character count != 1");

    for (size_t r1 = 0; r1 < c; ++r1)
      for (size_t r2 = 0; r2 < c; ++r2) {
        uint64_t sum = 0;
        for (uint32_t j = 0; j < c; ++j) {
          uint64_t term = mulmod(t.values[r1][j], t.values[r2][cd.inverse_class[j]], p);
          sum = (sum + mulmod(cd.class_sizes[j] % p, term, p)) % p;
        }
        if (sum != (r1 == r2 ? g.order() % p : 0)) return fail("row orthogonality");
      }
    for (uint32_t j1 = 0; j1 < c; ++j1)
      for (uint32_t j2 = 0; j2 < c; ++j2) {
        uint64_t sum = 0;
        for (size_t r = 0; r < c; ++r)
          sum = (sum + mulmod(t.values[r][j1], t.values[r][cd.inverse_class[j2]], p)) % p;
        uint64_t want = j1 == j2 ? (g.order() / cd.class_sizes[j1]) % p : 0;
        if (sum != want) return fail("column orthogonality");
      }
  }
  return "";
}

std::string criterion_llr_sweep() {
  std::vector<Permutation> sigmas = all_perms(5);
  for (const auto& e : catalog()) {
    if (e.group.is_abelian() || e.group.order() > 12) continue;
    CharTableSource tables(e.group);
    for (const auto& sigma : sigmas) {
      BoundReport r = check_llr(sigma, tables);
      if (!r.satisfied)
        return e.name + ", sigma " + sigma.cycle_string() + ": probability " +
               fraction_string(r.probability) + " beats the k=" + std::to_string(r.genus_k) +
               " bound";
    }
  }
  return "";
}

}  // namespace

SuiteResult run_acceptance_suite(std::ostream& out, std::ostream& diag) {
  struct Spec {
    int id;
    const char* name;
    double limit_seconds;  // 0 = no cap
    std::function<std::string()> body;
  };
  const Spec specs[] = {
      {1, "tight-bound-reproduction", 1.0, criterion_tight_bounds},
      {2, "oracle-equivalence", 300.0, criterion_oracle_equivalence},
      {3, "genus-2-spot-value", 0.0, criterion_genus2_spot},
      {4, "genus-block-distance", 120.0, criterion_block_distance},
      {5, "homeomorphism-invariance", 0.0, criterion_homeomorphism_invariance},
      {6, "character-table-invariants", 0.0, criterion_chartable_invariants},
      {7, "llr-sweep", 0.0, criterion_llr_sweep},
  };

  SuiteResult result;
  result.all_passed = true;
  for (const auto& spec : specs) {
    CriterionResult r;
    r.id = spec.id;
    r.name = spec.name;
    auto start = std::chrono::steady_clock::now();
    try {
      r.detail = spec.body();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = spec.limit_seconds <= 0.0 || r.seconds < spec.limit_seconds;
    if (!in_time && r.detail.empty()) {
      std::ostringstream os;
      os << "runtime " << r.seconds << " s exceeds the " << spec.limit_seconds << " s cap";
      r.detail = os.str();
    }
    r.passed = r.detail.empty();
    result.all_passed = result.all_passed && r.passed;
    out << "criterion " << r.id << " (" << r.name << "): " << (r.passed ? "PASS" : "FAIL") << "\n";
    diag << "  criterion " << r.id << ": " << r.seconds << " s"
         << (r.detail.empty() ? "" : "; " + r.detail) << "\n";
    result.criteria.push_back(std::move(r));
  }
  out << (result.all_passed ? "all criteria passed" : "FAILURES PRESENT") << "\n";
  return result;
}

}  // namespace wordcensus
