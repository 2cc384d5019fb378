#include "wordcensus/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "wordcensus/error.hpp"

namespace wordcensus {

namespace {

std::string idx(uint32_t i) { return std::to_string(i); }

}  // namespace

void Group::finish(const GroupOptions& opts, bool validate_structure) {
  const uint32_t n = order_;
  if (labels_.empty()) {
    labels_.reserve(n);
    for (uint32_t i = 0; i < n; ++i) labels_.push_back(idx(i));
  }
  if (labels_.size() != n)
    throw Error(Errc::InvalidParameter, "label count " + idx(uint32_t(labels_.size())) +
                                            " does not match order " + idx(n));
  {
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end())
      throw Error(Errc::InvalidParameter, "duplicate element label '" + *dup + "'");
  }

  if (validate_structure) {
    // Latin-square property: rows and columns are permutations of 0..n-1.
    std::vector<bool> seen(n);
    for (uint32_t r = 0; r < n; ++r) {
      std::fill(seen.begin(), seen.end(), false);
      for (uint32_t c = 0; c < n; ++c) {
        uint32_t v = table_[size_t(r) * n + c];
        if (v >= n)
          throw Error(Errc::NotClosed, "entry (" + idx(r) + "," + idx(c) + ") = " + idx(v) +
                                           " out of range");
        if (seen[v])
          throw Error(Errc::NoInverse, "row " + idx(r) + " is not a permutation (value " +
                                           idx(v) + " repeats)");
        seen[v] = true;
      }
    }
    for (uint32_t c = 0; c < n; ++c) {
      std::fill(seen.begin(), seen.end(), false);
      for (uint32_t r = 0; r < n; ++r) {
        uint32_t v = table_[size_t(r) * n + c];
        if (seen[v])
          throw Error(Errc::NoInverse, "column " + idx(c) + " is not a permutation (value " +
                                           idx(v) + " repeats)");
        seen[v] = true;
      }
    }
  }

  // Locate the two-sided identity.
  bool found = false;
  for (uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (uint32_t x = 0; x < n && ok; ++x)
      ok = table_[size_t(e) * n + x] == x && table_[size_t(x) * n + e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(Errc::NoIdentity, "no two-sided identity element");

  inverse_.assign(n, 0);
  for (uint32_t x = 0; x < n; ++x) {
    bool ok = false;
    for (uint32_t y = 0; y < n; ++y) {
      if (table_[size_t(x) * n + y] == identity_ && table_[size_t(y) * n + x] == identity_) {
        inverse_[x] = y;
        ok = true;
        break;
      }
    }
    if (!ok) throw Error(Errc::NoInverse, "element " + idx(x) + " has no two-sided inverse");
  }

  if (validate_structure && n <= opts.assoc_check_cap) {
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b) {
        uint32_t ab = table_[size_t(a) * n + b];
        for (uint32_t c = 0; c < n; ++c) {
          if (table_[size_t(ab) * n + c] != table_[size_t(a) * n + table_[size_t(b) * n + c]])
            throw Error(Errc::NotAssociative,
                        "(a,b,c) = (" + idx(a) + "," + idx(b) + "," + idx(c) + ")");
        }
      }
  }
}

Group Group::from_table(const std::vector<std::vector<uint32_t>>& table,
                        std::vector<std::string> labels, const GroupOptions& opts) {
  if (table.empty()) throw Error(Errc::InvalidParameter, "empty table");
  const uint32_t n = static_cast<uint32_t>(table.size());
  if (n > opts.order_cap)
    throw Error(Errc::OrderCapExceeded, "order " + idx(n) + " exceeds cap " + idx(opts.order_cap));
  Group g;
  g.order_ = n;
  g.table_.reserve(size_t(n) * n);
  for (uint32_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      throw Error(Errc::InvalidParameter, "row " + idx(r) + " has length " +
                                              idx(uint32_t(table[r].size())) + ", expected " + idx(n));
    g.table_.insert(g.table_.end(), table[r].begin(), table[r].end());
  }
  g.labels_ = std::move(labels);
  g.finish(opts, true);
  return g;
}

namespace {

// Builds the composition table for a closed list of permutations.
// Multiplication convention throughout: (a*b)(x) = b(a(x)), i.e. apply a
// first. The table entry is what the letters of a word multiply through.
Group group_from_permutations(const std::vector<Permutation>& elems, const GroupOptions& opts) {
  std::map<std::vector<uint32_t>, uint32_t> index;
  for (uint32_t i = 0; i < elems.size(); ++i) index[elems[i].mapping()] = i;
  const uint32_t n = static_cast<uint32_t>(elems.size());
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      auto it = index.find(elems[a].then(elems[b]).mapping());
      if (it == index.end())
        throw Error(Errc::NotClosed, "product of " + idx(a) + " and " + idx(b) + " escapes the set");
      table[a][b] = it->second;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(p.cycle_string());
  return Group::from_table(table, std::move(labels), opts);
}

bool even_permutation(const Permutation& p) {
  std::vector<bool> done(p.degree(), false);
  uint32_t transpositions = 0;
  for (uint32_t i = 0; i < p.degree(); ++i) {
    if (done[i]) continue;
    uint32_t len = 0, j = i;
    while (!done[j]) {
      done[j] = true;
      j = p(j);
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::vector<Permutation> all_permutations(uint32_t degree) {
  std::vector<uint32_t> m(degree);
  std::iota(m.begin(), m.end(), 0u);
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

Group cyclic_group(uint32_t n, const GroupOptions& opts) {
  if (n == 0) throw Error(Errc::InvalidParameter, "cyclic group needs n >= 1");
  if (n > opts.order_cap)
    throw Error(Errc::OrderCapExceeded, "order " + idx(n) + " exceeds cap " + idx(opts.order_cap));
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (uint32_t k = 0; k < n; ++k)
    labels.push_back(k == 0 ? "e" : (k == 1 ? "g" : "g^" + idx(k)));
  return Group::from_table(table, std::move(labels), opts);
}

Group quaternion8(const GroupOptions& opts) {
  // Index order 1, -1, i, -i, j, -j, k, -k.
  const std::vector<std::vector<uint32_t>> table = {
      {0, 1, 2, 3, 4, 5, 6, 7},
      {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 1, 0, 6, 7, 5, 4},
      {3, 2, 0, 1, 7, 6, 4, 5},
      {4, 5, 7, 6, 1, 0, 2, 3},
      {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0},
      {7, 6, 5, 4, 2, 3, 0, 1},
  };
  return Group::from_table(table, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, opts);
}

Group dihedral_group(uint32_t n, const GroupOptions& opts) {
  // Symmetries of the regular n-gon acting on vertices 1..n; faithful only
  // for n >= 3, which is all this preset accepts.
  if (n < 3) throw Error(Errc::InvalidParameter, "dihedral preset needs n >= 3");
  if (2 * n > opts.order_cap)
    throw Error(Errc::OrderCapExceeded, "order " + idx(2 * n) + " exceeds cap " + idx(opts.order_cap));
  std::vector<Permutation> elems;
  elems.reserve(2 * n);
  for (uint32_t t = 0; t < n; ++t) {
    std::vector<uint32_t> rot(n);
    for (uint32_t i = 0; i < n; ++i) rot[i] = (i + t) % n;
    elems.emplace_back(std::move(rot));
  }
  for (uint32_t t = 0; t < n; ++t) {
    std::vector<uint32_t> ref(n);
    for (uint32_t i = 0; i < n; ++i) ref[i] = (t + n - i) % n;
    elems.emplace_back(std::move(ref));
  }
  return group_from_permutations(elems, opts);
}

}  // namespace

Group Group::from_generators(uint32_t degree, const std::vector<Permutation>& gens,
                             const GroupOptions& opts) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error(Errc::InvalidParameter, "generator degree " + idx(g.degree()) +
                                              " does not match " + idx(degree));
  std::map<std::vector<uint32_t>, uint32_t> index;
  std::vector<Permutation> elems;
  std::queue<uint32_t> todo;
  auto add = [&](const Permutation& p) -> bool {
    auto [it, fresh] = index.try_emplace(p.mapping(), uint32_t(elems.size()));
    if (!fresh) return false;
    if (elems.size() >= opts.order_cap) {
      throw Error(Errc::OrderCapExceeded,
                  "closure exceeds cap " + idx(opts.order_cap) + " elements");
    }
    elems.push_back(p);
    todo.push(it->second);
    return true;
  };
  add(Permutation::identity(degree));
  while (!todo.empty()) {
    uint32_t x = todo.front();
    todo.pop();
    for (const auto& gen : gens) add(elems[x].then(gen));
  }
  return group_from_permutations(elems, opts);
}

Group preset_group(Preset kind, uint32_t n, const GroupOptions& opts) {
  switch (kind) {
    case Preset::Cyclic:
      return cyclic_group(n, opts);
    case Preset::Symmetric: {
      if (n == 0) throw Error(Errc::InvalidParameter, "symmetric group needs n >= 1");
      uint64_t order = 1;
      for (uint32_t k = 2; k <= n; ++k) order *= k;
      if (order > opts.order_cap)
        throw Error(Errc::OrderCapExceeded, "order " + std::to_string(order) + " exceeds cap " +
                                                idx(opts.order_cap));
      return group_from_permutations(all_permutations(n), opts);
    }
    case Preset::Alternating: {
      if (n < 3) throw Error(Errc::InvalidParameter, "alternating preset needs n >= 3");
      uint64_t order = 1;
      for (uint32_t k = 2; k <= n; ++k) order *= k;
      order /= 2;
      if (order > opts.order_cap)
        throw Error(Errc::OrderCapExceeded, "order " + std::to_string(order) + " exceeds cap " +
                                                idx(opts.order_cap));
      std::vector<Permutation> evens;
      for (auto& p : all_permutations(n))
        if (even_permutation(p)) evens.push_back(std::move(p));
      return group_from_permutations(evens, opts);
    }
    case Preset::Dihedral:
      return dihedral_group(n, opts);
    case Preset::Quaternion8:
      return quaternion8(opts);
  }
  throw Error(Errc::UnknownPreset, "unhandled preset kind");
}

Group direct_product(const Group& a, const Group& b, const GroupOptions& opts) {
  uint64_t order = uint64_t(a.order()) * b.order();
  if (order > opts.order_cap)
    throw Error(Errc::OrderCapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + idx(opts.order_cap));
  const uint32_t n = static_cast<uint32_t>(order);
  const uint32_t nb = b.order();
  std::vector<std::vector<uint32_t>> table(n, std::vector<uint32_t>(n));
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y)
      table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (uint32_t x = 0; x < n; ++x)
    labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
  return Group::from_table(table, std::move(labels), opts);
}

Group parse_group_spec(const std::string& spec, const GroupOptions& opts) {
  std::vector<std::string> factors;
  std::string cur;
  for (char c : spec) {
    if (c == '*') {
      factors.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  factors.push_back(cur);

  auto parse_one = [&](const std::string& name) -> Group {
    if (name.empty()) throw Error(Errc::UnknownPreset, "empty group name in '" + spec + "'");
    if (name == "Q8") return preset_group(Preset::Quaternion8, 0, opts);
    char head = name[0];
    const std::string digits = name.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      throw Error(Errc::UnknownPreset, "unknown group '" + name + "'");
    uint32_t n = static_cast<uint32_t>(std::stoul(digits));
    switch (head) {
      case 'C':
        return preset_group(Preset::Cyclic, n, opts);
      case 'S':
        return preset_group(Preset::Symmetric, n, opts);
      case 'A':
        return preset_group(Preset::Alternating, n, opts);
      case 'D':
        return preset_group(Preset::Dihedral, n, opts);
      default:
        throw Error(Errc::UnknownPreset, "unknown group '" + name + "'");
    }
  };

  Group g = parse_one(factors[0]);
  for (size_t i = 1; i < factors.size(); ++i) g = direct_product(g, parse_one(factors[i]), opts);
  return g;
}

bool Group::is_abelian() const {
  for (uint32_t a = 0; a < order_; ++a)
    for (uint32_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

uint32_t Group::element_order(uint32_t a) const {
  uint32_t x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

ConjugacyData conjugacy(const Group& g) {
  const uint32_t n = g.order();
  ConjugacyData cd;
  cd.class_of.assign(n, UINT32_MAX);

  auto close_class = [&](uint32_t seed) {
    uint32_t id = cd.num_classes();
    std::vector<uint32_t> members;
    for (uint32_t x = 0; x < n; ++x) {
      uint32_t y = g.mul(g.mul(x, seed), g.inv(x));
      if (cd.class_of[y] == UINT32_MAX) {
        cd.class_of[y] = id;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    cd.class_sizes.push_back(static_cast<uint32_t>(members.size()));
    cd.classes.push_back(std::move(members));
  };

  close_class(g.identity());
  for (uint32_t x = 0; x < n; ++x)
    if (cd.class_of[x] == UINT32_MAX) close_class(x);

  cd.inverse_class.reserve(cd.num_classes());
  for (const auto& cls : cd.classes) cd.inverse_class.push_back(cd.class_of[g.inv(cls[0])]);
  return cd;
}

uint32_t commutator_subgroup_order(const Group& g) {
  const uint32_t n = g.order();
  std::vector<bool> in(n, false);
  std::vector<uint32_t> members;
  std::queue<uint32_t> todo;
  auto add = [&](uint32_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      todo.push(x);
    }
  };
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      add(g.mul(g.mul(g.mul(a, b), g.inv(a)), g.inv(b)));
  // Multiplicative closure; inverses come for free in a finite group.
  while (!todo.empty()) {
    uint32_t x = todo.front();
    todo.pop();
    for (size_t i = 0; i < members.size(); ++i) {
      add(g.mul(x, members[i]));
      add(g.mul(members[i], x));
    }
  }
  return static_cast<uint32_t>(members.size());
}

uint32_t abelianization_order(const Group& g) {
  return g.order() / commutator_subgroup_order(g);
}

}  // namespace wordcensus
