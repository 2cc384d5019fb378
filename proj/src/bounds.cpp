#include "wordcensus/bounds.hpp"

#include "wordcensus/error.hpp"
#include "wordcensus/surface.hpp"

namespace wordcensus {

BigRat commuting_probability(const Group& g) {
  return BigRat(conjugacy(g).num_classes(), g.order());
}

BigRat llr_bound(int64_t k) {
  if (k < 1) throw Error(Errc::InvalidGenus, "bound defined for genus k ≥ 1, got " + std::to_string(k));
  BigInt den = BigInt(1) << (2 * k + 1);
  return BigRat(1, 2) + BigRat(1, den);
}

namespace {

void fill_group_stats(const Group& g, BoundReport& r) {
  uint32_t classes = conjugacy(g).num_classes();
  r.c_over_G = BigRat(classes, g.order());
  r.commutator_order = commutator_subgroup_order(g);
  r.one_dim_fraction = BigRat(g.order() / r.commutator_order, classes);
}

}  // namespace

BoundReport check_five_eighths(const Group& g) {
  BoundReport r;
  r.kind = "five_eighths";
  fill_group_stats(g, r);
  r.probability = r.c_over_G;
  r.bound_value = BigRat(5, 8);
  r.genus_k = 1;
  r.applicable = !g.is_abelian();
  r.satisfied = r.applicable ? r.probability <= *r.bound_value : r.probability == 1;
  return r;
}

BoundReport check_llr(const Permutation& sigma, CharTableSource& tables,
                      const CensusOptions& opts) {
  const Group& g = tables.group();
  Word w = rearrangement_word(sigma);
  SurfaceReport surf = genus(w);

  WordCensus by_character = census_character(w, tables);
  if (ipow(g.order(), w.num_vars()) <= opts.budget) {
    WordCensus by_brute = census_bruteforce(w, g, opts);
    if (by_character.counts != by_brute.counts)
      throw Error(Errc::OracleMismatch,
                  "character and brute-force censuses disagree for " + w.to_string());
  }

  BoundReport r;
  r.kind = "llr";
  fill_group_stats(g, r);
  r.sigma = sigma.cycle_string();
  r.genus_k = surf.genus;
  r.probability = by_character.probability;
  if (surf.genus == 0) {
    r.applicable = false;
    if (r.probability != 1)
      throw Error(Errc::Inconsistent, "sphere word with probability below 1");
    r.satisfied = true;
  } else {
    r.applicable = true;
    r.bound_value = llr_bound(surf.genus);
    r.satisfied = r.probability <= *r.bound_value;
  }
  return r;
}

BoundReport check_llr(const Permutation& sigma, const Group& g, const CensusOptions& opts) {
  CharTableSource tables(g, opts.seed);
  return check_llr(sigma, tables, opts);
}

}  // namespace wordcensus
