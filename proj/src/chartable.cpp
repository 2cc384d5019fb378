#include "wordcensus/chartable.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "wordcensus/error.hpp"
#include "wordcensus/modarith.hpp"

namespace wordcensus {

namespace {

using Mat = std::vector<std::vector<uint64_t>>;
using Vec = std::vector<uint64_t>;

bool miller_rabin(uint64_t n, uint64_t a) {
  if (a % n == 0) return true;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!miller_rabin(n, a)) return false;
  return true;
}

// Writes the coordinates of each column of V in the basis given by the
// columns of B, which must have full column rank and span the columns of V.
// Returns A with V = B*A.
Mat solve_coords(const Mat& basis_cols, const Mat& target_cols, uint64_t p) {
  const size_t c = basis_cols[0].size();
  const size_t d = basis_cols.size();
  const size_t m = target_cols.size();
  Mat aug(c, Vec(d + m));
  for (size_t r = 0; r < c; ++r) {
    for (size_t j = 0; j < d; ++j) aug[r][j] = basis_cols[j][r];
    for (size_t k = 0; k < m; ++k) aug[r][d + k] = target_cols[k][r];
  }
  std::vector<size_t> pivot_row(d);
  size_t rank = 0;
  for (size_t col = 0; col < d; ++col) {
    size_t sel = c;
    for (size_t r = rank; r < c; ++r)
      if (aug[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == c) throw Error(Errc::SplitFailure, "basis columns are dependent");
    std::swap(aug[sel], aug[rank]);
    uint64_t inv = invmod(aug[rank][col], p);
    for (size_t j = col; j < d + m; ++j) aug[rank][j] = mulmod(aug[rank][j], inv, p);
    for (size_t r = 0; r < c; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      uint64_t f = aug[r][col];
      for (size_t j = col; j < d + m; ++j)
        aug[r][j] = submod(aug[r][j], mulmod(f, aug[rank][j], p), p);
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (size_t r = rank; r < c; ++r)
    for (size_t k = 0; k < m; ++k)
      if (aug[r][d + k] != 0)
        throw Error(Errc::SplitFailure, "target column escapes the subspace");
  Mat coords(d, Vec(m));
  for (size_t j = 0; j < d; ++j)
    for (size_t k = 0; k < m; ++k) coords[j][k] = aug[pivot_row[j]][d + k];
  return coords;
}

// Characteristic polynomial (monic, coefficient i multiplies λ^i) by the
// Faddeev–LeVerrier recurrence; interior divisions are by k < p.
Vec charpoly(const Mat& a, uint64_t p) {
  const size_t d = a.size();
  Vec coeff(d + 1, 0);
  coeff[d] = 1;
  if (d == 0) return coeff;
  Mat mk = a;
  auto trace = [&](const Mat& m) {
    uint64_t t = 0;
    for (size_t i = 0; i < m.size(); ++i) t = (t + m[i][i]) % p;
    return t;
  };
  coeff[d - 1] = submod(0, trace(mk), p);
  for (size_t k = 2; k <= d; ++k) {
    Mat shifted = mk;
    for (size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + coeff[d - k + 1]) % p;
    Mat next(d, Vec(d, 0));
    for (size_t i = 0; i < d; ++i)
      for (size_t l = 0; l < d; ++l) {
        if (a[i][l] == 0) continue;
        uint64_t f = a[i][l];
        for (size_t j = 0; j < d; ++j)
          next[i][j] = (next[i][j] + mulmod(f, shifted[l][j], p)) % p;
      }
    mk = std::move(next);
    coeff[d - k] = mulmod(submod(0, trace(mk), p), invmod(k % p, p), p);
  }
  return coeff;
}

std::vector<uint64_t> poly_roots(const Vec& coeff, uint64_t p) {
  const size_t d = coeff.size() - 1;
  std::vector<uint64_t> roots;
  for (uint64_t x = 0; x < p && roots.size() < d; ++x) {
    uint64_t v = 0;
    for (size_t i = coeff.size(); i-- > 0;) v = (mulmod(v, x, p) + coeff[i]) % p;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

// Basis of {v : m v = 0} over F_p.
Mat nullspace(Mat m, uint64_t p) {
  const size_t d = m.size();
  std::vector<ptrdiff_t> pivot_row_of_col(d, -1);
  size_t rank = 0;
  for (size_t col = 0; col < d && rank < d; ++col) {
    size_t sel = d;
    for (size_t r = rank; r < d; ++r)
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == d) continue;
    std::swap(m[sel], m[rank]);
    uint64_t inv = invmod(m[rank][col], p);
    for (size_t j = col; j < d; ++j) m[rank][j] = mulmod(m[rank][j], inv, p);
    for (size_t r = 0; r < d; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      uint64_t f = m[r][col];
      for (size_t j = col; j < d; ++j) m[r][j] = submod(m[r][j], mulmod(f, m[rank][j], p), p);
    }
    pivot_row_of_col[col] = static_cast<ptrdiff_t>(rank);
    ++rank;
  }
  Mat basis;
  for (size_t f = 0; f < d; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    Vec v(d, 0);
    v[f] = 1;
    for (size_t col = 0; col < d; ++col)
      if (pivot_row_of_col[col] >= 0)
        v[col] = submod(0, m[size_t(pivot_row_of_col[col])][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat matvec_columns(const Mat& m, const Mat& cols, uint64_t p) {
  const size_t d = m.size();
  Mat out;
  out.reserve(cols.size());
  for (const auto& v : cols) {
    Vec r(d, 0);
    for (size_t i = 0; i < d; ++i) {
      uint64_t acc = 0;
      for (size_t j = 0; j < d; ++j)
        if (m[i][j] && v[j]) acc = (acc + mulmod(m[i][j], v[j], p)) % p;
      r[i] = acc;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

uint32_t group_exponent(const Group& g) {
  uint32_t e = 1;
  for (uint32_t x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

std::vector<std::vector<uint32_t>> class_matrix(const Group& g, const ConjugacyData& cd,
                                                uint32_t i) {
  const uint32_t c = cd.num_classes();
  if (i >= c) throw Error(Errc::InvalidParameter, "class index " + std::to_string(i));
  std::vector<std::vector<uint32_t>> m(c, std::vector<uint32_t>(c, 0));
  for (uint32_t k = 0; k < c; ++k) {
    uint32_t z = cd.classes[k][0];
    for (uint32_t x : cd.classes[i]) ++m[cd.class_of[g.mul(g.inv(x), z)]][k];
  }
  return m;
}

uint64_t find_table_prime(uint32_t order, uint32_t exponent, uint64_t after) {
  uint64_t lo = std::max<uint64_t>(2 * uint64_t(order), after);
  // First candidate ≡ 1 mod exponent strictly above lo.
  uint64_t p = lo / exponent * exponent + 1;
  if (p <= lo) p += exponent;
  for (; p < (1ull << 40); p += exponent)
    if (is_prime(p)) return p;
  throw Error(Errc::NoSuitablePrime, "no prime ≡ 1 mod " + std::to_string(exponent) +
                                         " found below 2^40");
}

CharacterTable dixon_table_mod(const Group& g, const ConjugacyData& cd, uint64_t prime,
                               uint64_t seed) {
  const uint32_t c = cd.num_classes();
  const uint64_t p = prime;
  const uint32_t order = g.order();

  std::vector<Mat> cls_mats;
  cls_mats.reserve(c);
  for (uint32_t i = 0; i < c; ++i) {
    auto raw = class_matrix(g, cd, i);
    Mat m(c, Vec(c));
    for (uint32_t j = 0; j < c; ++j)
      for (uint32_t k = 0; k < c; ++k) m[j][k] = raw[j][k] % p;
    cls_mats.push_back(std::move(m));
  }

  // Common eigenvectors of the class matrices, found by splitting subspaces
  // with random linear combinations until every piece is one-dimensional.
  std::vector<Mat> spaces;
  {
    Mat full;
    for (uint32_t j = 0; j < c; ++j) {
      Vec e(c, 0);
      e[j] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  std::mt19937_64 rng(seed);
  const int max_attempts = 64;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    bool done = std::all_of(spaces.begin(), spaces.end(),
                            [](const Mat& s) { return s.size() == 1; });
    if (done) break;
    Mat combo(c, Vec(c, 0));
    for (uint32_t i = 1; i < c; ++i) {
      uint64_t t = rng() % p;
      if (t == 0) continue;
      for (uint32_t j = 0; j < c; ++j)
        for (uint32_t k = 0; k < c; ++k)
          combo[j][k] = (combo[j][k] + mulmod(t, cls_mats[i][j][k], p)) % p;
    }
    std::vector<Mat> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      Mat images = matvec_columns(combo, space, p);
      Mat restricted = solve_coords(space, images, p);
      auto roots = poly_roots(charpoly(restricted, p), p);
      if (roots.size() <= 1) {
        next.push_back(std::move(space));
        continue;
      }
      size_t recovered = 0;
      std::vector<Mat> pieces;
      for (uint64_t lambda : roots) {
        Mat shifted = restricted;
        for (size_t i = 0; i < shifted.size(); ++i)
          shifted[i][i] = submod(shifted[i][i], lambda, p);
        Mat kernel = nullspace(shifted, p);
        recovered += kernel.size();
        Mat piece;
        for (const auto& coords : kernel) {
          Vec v(c, 0);
          for (size_t j = 0; j < space.size(); ++j) {
            if (coords[j] == 0) continue;
            for (uint32_t r = 0; r < c; ++r)
              v[r] = (v[r] + mulmod(coords[j], space[j][r], p)) % p;
          }
          piece.push_back(std::move(v));
        }
        pieces.push_back(std::move(piece));
      }
      if (recovered != space.size()) {
        // Defective restriction: keep the subspace and retry with a fresh combo.
        next.push_back(std::move(space));
        continue;
      }
      for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.size() != 1)
      throw Error(Errc::SplitFailure, "subspaces not fully split after " +
                                          std::to_string(max_attempts) +
                                          " attempts (seed " + std::to_string(seed) + ")");

  CharacterTable t;
  t.group_order = order;
  t.modulus = p;
  struct Row {
    uint32_t dim;
    Vec values;
  };
  std::vector<Row> rows;
  rows.reserve(c);
  for (const auto& s : spaces) {
    Vec w = s[0];
    if (w[0] == 0) throw Error(Errc::SplitFailure, "eigenvector vanishes at the identity class");
    uint64_t scale = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, scale, p);
    // Orthogonality pins the dimension: d² ≡ |G| / Σ_j w_j w_{j*} / |C_j|.
    uint64_t s_sum = 0;
    for (uint32_t j = 0; j < c; ++j) {
      uint64_t term = mulmod(w[j], w[cd.inverse_class[j]], p);
      s_sum = (s_sum + mulmod(term, invmod(cd.class_sizes[j] % p, p), p)) % p;
    }
    if (s_sum == 0) throw Error(Errc::SplitFailure, "orthogonality sum vanished");
    uint64_t d2 = mulmod(order % p, invmod(s_sum, p), p);
    uint32_t dim = 0;
    for (uint64_t d = 1; d * d <= order; ++d)
      if (d * d % p == d2) {
        dim = static_cast<uint32_t>(d);
        break;
      }
    if (dim == 0) throw Error(Errc::SplitFailure, "no dimension matches the orthogonality sum");
    Row row;
    row.dim = dim;
    row.values.resize(c);
    for (uint32_t j = 0; j < c; ++j)
      row.values[j] = mulmod(dim % p, mulmod(w[j], invmod(cd.class_sizes[j] % p, p), p), p);
    rows.push_back(std::move(row));
  }

  uint64_t dim_sq = 0;
  for (const auto& r : rows) dim_sq += uint64_t(r.dim) * r.dim;
  if (dim_sq != order)
    throw Error(Errc::SplitFailure, "squared dimensions sum to " + std::to_string(dim_sq) +
                                        ", expected " + std::to_string(order));

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.values < b.values;
  });
  for (auto& r : rows) {
    t.dims.push_back(r.dim);
    t.values.push_back(std::move(r.values));
  }
  return t;
}

CharacterTable dixon_table(const Group& g, uint64_t seed) {
  ConjugacyData cd = conjugacy(g);
  uint32_t e = group_exponent(g);
  CharacterTable t = dixon_table_mod(g, cd, find_table_prime(g.order(), e, 0), seed);
  t.exponent = e;
  return t;
}

CharTableSource::CharTableSource(const Group& g, uint64_t seed)
    : group_(&g), classes_(conjugacy(g)), exponent_(group_exponent(g)), seed_(seed) {}

const CharacterTable& CharTableSource::table(size_t i) {
  while (tables_.size() <= i) {
    uint64_t after = tables_.empty() ? 0 : tables_.back().modulus;
    uint64_t p = find_table_prime(group_->order(), exponent_, after);
    CharacterTable t = dixon_table_mod(*group_, classes_, p, seed_);
    t.exponent = exponent_;
    tables_.push_back(std::move(t));
  }
  return tables_[i];
}

}  // namespace wordcensus
