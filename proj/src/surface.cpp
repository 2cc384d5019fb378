#include "wordcensus/surface.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

#include "wordcensus/error.hpp"

namespace wordcensus {

SurfaceCheck is_surface_word(const Word& w) {
  std::vector<uint32_t> count(w.num_vars(), 0);
  std::vector<int> sign_sum(w.num_vars(), 0);
  for (const auto& l : w.letters()) {
    ++count[l.var];
    sign_sum[l.var] += l.sign;
  }
  SurfaceCheck c;
  c.is_surface = std::all_of(count.begin(), count.end(), [](uint32_t k) { return k == 2; });
  c.orientable = c.is_surface &&
                 std::all_of(sign_sum.begin(), sign_sum.end(), [](int s) { return s == 0; });
  return c;
}

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(uint32_t a, uint32_t b) { parent[find(a)] = find(b); }
  uint32_t roots() {
    uint32_t n = 0;
    for (uint32_t i = 0; i < parent.size(); ++i) n += find(i) == i;
    return n;
  }
};

}  // namespace

SurfaceReport genus(const Word& w) {
  SurfaceCheck c = is_surface_word(w);
  SurfaceReport r;
  r.is_surface = c.is_surface;
  r.orientable = c.orientable;
  if (!c.is_surface) throw Error(Errc::NotASurfaceWord, "some variable does not occur exactly twice");
  if (!c.orientable) throw Error(Errc::NotOrientable, "some variable repeats with equal signs");

  const uint32_t len = static_cast<uint32_t>(w.length());
  if (len == 0) {
    r.vertices = 1;
    r.edges = 0;
    r.faces = 1;
    r.euler_characteristic = 2;
    r.genus = 0;
    return r;
  }

  // Polygon corner t sits between side t-1 and side t; side t runs from
  // corner t to corner t+1. Gluing the side carrying x to the side carrying
  // x^-1 head-to-tail identifies the corners crosswise.
  std::vector<uint32_t> pos_plus(w.num_vars()), pos_minus(w.num_vars());
  for (uint32_t t = 0; t < len; ++t) {
    const Letter& l = w.letters()[t];
    (l.sign > 0 ? pos_plus : pos_minus)[l.var] = t;
  }
  UnionFind uf(len);
  for (uint32_t v = 0; v < w.num_vars(); ++v) {
    uint32_t a = pos_plus[v], b = pos_minus[v];
    uf.unite(a, (b + 1) % len);
    uf.unite((a + 1) % len, b);
  }
  r.vertices = uf.roots();
  r.edges = len / 2;
  r.faces = 1;
  r.euler_characteristic = int32_t(r.vertices) - int32_t(r.edges) + 1;
  int32_t two_minus_chi = 2 - r.euler_characteristic;
  if (two_minus_chi < 0 || two_minus_chi % 2 != 0)
    throw Error(Errc::Inconsistent,
                "corner trace gave characteristic " + std::to_string(r.euler_characteristic));
  r.genus = static_cast<uint32_t>(two_minus_chi / 2);
  return r;
}

Word rearrangement_word(const Permutation& sigma) {
  const uint32_t n = sigma.degree();
  std::vector<Letter> letters;
  letters.reserve(2 * n);
  for (uint32_t i = 0; i < n; ++i) letters.push_back({i, +1});
  for (uint32_t t = 0; t < n; ++t) letters.push_back({sigma(n - 1 - t), -1});
  return Word(std::move(letters));
}

namespace {

constexpr std::array<uint32_t, 9> kFactorial = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

uint32_t lehmer_rank(const std::vector<uint8_t>& seq) {
  const uint32_t n = static_cast<uint32_t>(seq.size());
  uint32_t rank = 0;
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t smaller_after = 0;
    for (uint32_t j = i + 1; j < n; ++j) smaller_after += seq[j] < seq[i];
    rank += smaller_after * kFactorial[n - 1 - i];
  }
  return rank;
}

// Breadth-first distances over block-interchange moves, from the identity
// arrangement. Stops early once `target` is reached (pass the total state
// count to explore everything within the cap).
std::vector<uint32_t> block_bfs(uint32_t n, uint32_t cap, uint32_t target) {
  const uint32_t total = kFactorial[n];
  std::vector<uint32_t> dist(total, UINT32_MAX);
  std::vector<uint8_t> ident(n);
  std::iota(ident.begin(), ident.end(), uint8_t(0));
  uint32_t start = lehmer_rank(ident);
  dist[start] = 0;
  if (start == target) return dist;
  std::queue<std::vector<uint8_t>> frontier;
  frontier.push(std::move(ident));
  std::vector<uint8_t> child(n);
  while (!frontier.empty()) {
    std::vector<uint8_t> s = std::move(frontier.front());
    frontier.pop();
    uint32_t d = dist[lehmer_rank(s)];
    if (d >= cap) continue;
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = i; j < n; ++j)
        for (uint32_t k = j + 1; k < n; ++k)
          for (uint32_t l = k; l < n; ++l) {
            uint32_t w = 0;
            for (uint32_t t = 0; t < i; ++t) child[w++] = s[t];
            for (uint32_t t = k; t <= l; ++t) child[w++] = s[t];
            for (uint32_t t = j + 1; t < k; ++t) child[w++] = s[t];
            for (uint32_t t = i; t <= j; ++t) child[w++] = s[t];
            for (uint32_t t = l + 1; t < n; ++t) child[w++] = s[t];
            uint32_t r = lehmer_rank(child);
            if (dist[r] != UINT32_MAX) continue;
            dist[r] = d + 1;
            if (r == target) return dist;
            frontier.push(child);
          }
  }
  return dist;
}

}  // namespace

uint32_t block_transposition_distance(const Permutation& sigma, uint32_t cap) {
  const uint32_t n = sigma.degree();
  if (n == 0 || n > 8)
    throw Error(Errc::InvalidParameter, "degree " + std::to_string(n) + " outside oracle range 1..8");
  std::vector<uint8_t> target_seq(n);
  for (uint32_t i = 0; i < n; ++i) target_seq[i] = static_cast<uint8_t>(sigma(i));
  uint32_t target = lehmer_rank(target_seq);
  auto dist = block_bfs(n, cap, target);
  if (dist[target] == UINT32_MAX)
    throw Error(Errc::DepthCapExceeded, "not reached within " + std::to_string(cap) + " moves");
  return dist[target];
}

std::vector<uint32_t> block_distance_table(uint32_t n, uint32_t cap) {
  if (n == 0 || n > 8)
    throw Error(Errc::InvalidParameter, "degree " + std::to_string(n) + " outside oracle range 1..8");
  return block_bfs(n, cap, kFactorial[n]);
}

}  // namespace wordcensus
