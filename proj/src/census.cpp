#include "wordcensus/census.hpp"

#include <algorithm>
#include <thread>

#include "wordcensus/crt.hpp"
#include "wordcensus/error.hpp"
#include "wordcensus/modarith.hpp"
#include "wordcensus/surface.hpp"

namespace wordcensus {

namespace {

struct Program {
  std::vector<uint8_t> kinds;
  std::vector<uint32_t> operands;
};

// Folds every letter of a variable other than `inner` into running constants;
// identity constants are dropped.
void build_program(const Word& w, const Group& g, const std::vector<uint32_t>& assignment,
                   uint32_t inner, Program& out) {
  out.kinds.clear();
  out.operands.clear();
  uint32_t pending = g.identity();
  auto flush = [&] {
    if (pending != g.identity()) {
      out.kinds.push_back(static_cast<uint8_t>(StepKind::Constant));
      out.operands.push_back(pending);
      pending = g.identity();
    }
  };
  for (const auto& l : w.letters()) {
    if (l.var == inner) {
      flush();
      out.kinds.push_back(static_cast<uint8_t>(l.sign > 0 ? StepKind::Inner : StepKind::InnerInverse));
      out.operands.push_back(0);
    } else {
      uint32_t v = assignment[l.var];
      pending = g.mul(pending, l.sign > 0 ? v : g.inv(v));
    }
  }
  flush();
}

// Runs the kernel over every assignment with the first variable restricted
// to [v0_begin, v0_end); middle variables cycle odometer-style and the last
// variable is the kernel's inner loop.
void census_range(const Word& w, const Group& g, CensusKernelFn kernel, uint32_t v0_begin,
                  uint32_t v0_end, uint64_t* counts) {
  const uint32_t n = w.num_vars();
  const uint32_t inner = n - 1;
  const uint32_t order = g.order();
  std::vector<uint32_t> assignment(n, 0);
  Program prog;
  if (n == 1) {
    build_program(w, g, assignment, inner, prog);
    kernel(g.table_data(), g.inverse_data(), order, g.identity(), prog.kinds.data(),
           prog.operands.data(), prog.kinds.size(), v0_begin, v0_end, counts);
    return;
  }
  for (uint32_t v0 = v0_begin; v0 < v0_end; ++v0) {
    assignment[0] = v0;
    std::fill(assignment.begin() + 1, assignment.end(), 0u);
    while (true) {
      build_program(w, g, assignment, inner, prog);
      kernel(g.table_data(), g.inverse_data(), order, g.identity(), prog.kinds.data(),
             prog.operands.data(), prog.kinds.size(), 0, order, counts);
      uint32_t pos = n - 2;
      while (pos >= 1 && ++assignment[pos] == order) {
        assignment[pos] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

WordCensus finalize(const Word& w, const Group& g, std::vector<BigInt> counts, BigInt total) {
  WordCensus c;
  c.word = w;
  c.group_order = g.order();
  c.total_tuples = total;
  c.counts = std::move(counts);
  c.gamma = c.counts[g.identity()];
  c.probability = BigRat(c.gamma, c.total_tuples);
  BigInt sum = 0;
  for (const auto& v : c.counts) sum += v;
  if (sum != c.total_tuples)
    throw Error(Errc::Inconsistent,
                "census counts sum to " + sum.str() + ", expected " + c.total_tuples.str());
  return c;
}

}  // namespace

WordCensus census_bruteforce(const Word& w, const Group& g, const CensusOptions& opts) {
  const uint32_t n = w.num_vars();
  const uint32_t order = g.order();
  const BigInt total = ipow(order, n);
  if (total > opts.budget)
    throw Error(Errc::BudgetExceeded,
                "required " + total.str() + " evaluations, allowed " + std::to_string(opts.budget));

  std::vector<BigInt> counts(order, 0);
  if (n == 0) {
    counts[g.identity()] = 1;
    return finalize(w, g, std::move(counts), total);
  }

  const CensusKernelFn kernel = resolve_kernel(opts.kernel).fn;
  uint32_t threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  const uint32_t split_space = order;  // first variable when n ≥ 2, inner range when n == 1
  threads = std::min(threads, split_space);

  std::vector<std::vector<uint64_t>> partial(threads, std::vector<uint64_t>(order, 0));
  auto run_chunk = [&](uint32_t t) {
    uint32_t lo = static_cast<uint32_t>(uint64_t(split_space) * t / threads);
    uint32_t hi = static_cast<uint32_t>(uint64_t(split_space) * (t + 1) / threads);
    census_range(w, g, kernel, lo, hi, partial[t].data());
  };
  if (threads == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (uint32_t t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
    for (auto& th : pool) th.join();
  }

  for (uint32_t t = 0; t < threads; ++t)
    for (uint32_t x = 0; x < order; ++x) counts[x] += partial[t][x];
  return finalize(w, g, std::move(counts), total);
}

WordCensus census_character(const Word& w, CharTableSource& tables) {
  const SurfaceReport surf = genus(w);  // throws unless orientable surface
  const Group& g = tables.group();
  const ConjugacyData& cd = tables.classes();
  const uint32_t order = g.order();
  const uint32_t c = cd.num_classes();
  const uint32_t n = w.num_vars();
  const int64_t chi_exp = 1 - 2 * int64_t(surf.genus);  // power of dim ρ
  const BigInt bound = ipow(order, n);

  // counts(t) = |G|^(n-1) · Σ_ρ χ_ρ(t) · (dim ρ)^(1-2g), computed mod each
  // prime and CRT-lifted. At genus 0 this collapses to the point mass at the
  // identity by column orthogonality.
  std::vector<std::vector<Residue>> residues(c);
  BigInt modulus_product = 1;
  for (size_t t = 0; modulus_product <= bound; ++t) {
    const CharacterTable& table = tables.table(t);
    const uint64_t p = table.modulus;
    const uint64_t scale = powmod_signed(order, int64_t(n) - 1, p);
    for (uint32_t j = 0; j < c; ++j) {
      uint64_t sum = 0;
      for (size_t r = 0; r < table.dims.size(); ++r) {
        uint64_t term = mulmod(table.values[r][j], powmod_signed(table.dims[r], chi_exp, p), p);
        sum = (sum + term) % p;
      }
      residues[j].push_back({mulmod(scale, sum, p), p});
    }
    modulus_product *= p;
  }

  std::vector<BigInt> class_counts(c);
  for (uint32_t j = 0; j < c; ++j) {
    class_counts[j] = crt_lift(residues[j], bound);
    if (class_counts[j] > bound)
      throw Error(Errc::Inconsistent, "lifted count exceeds the tuple total");
  }
  BigInt weighted = 0;
  for (uint32_t j = 0; j < c; ++j) weighted += class_counts[j] * cd.class_sizes[j];
  if (weighted != bound)
    throw Error(Errc::Inconsistent,
                "class counts sum to " + weighted.str() + ", expected " + bound.str());

  std::vector<BigInt> counts(order);
  for (uint32_t x = 0; x < order; ++x) counts[x] = class_counts[cd.class_of[x]];
  WordCensus out;
  out.word = w;
  out.group_order = order;
  out.total_tuples = bound;
  out.counts = std::move(counts);
  out.gamma = out.counts[g.identity()];
  out.probability = BigRat(out.gamma, out.total_tuples);
  return out;
}

bool measures_equal(const WordCensus& a, const WordCensus& b) {
  if (a.group_order != b.group_order)
    throw Error(Errc::GroupMismatch, "censuses over groups of order " +
                                         std::to_string(a.group_order) + " and " +
                                         std::to_string(b.group_order));
  for (uint32_t x = 0; x < a.group_order; ++x)
    if (a.counts[x] * b.total_tuples != b.counts[x] * a.total_tuples) return false;
  return true;
}

}  // namespace wordcensus
