#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wordcensus {

// Permutation of {0..n-1}. All I/O is 1-indexed (cycle notation and one-line
// image lists), the internal mapping is 0-indexed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<uint32_t> mapping);

  static Permutation identity(uint32_t degree);

  uint32_t degree() const { return static_cast<uint32_t>(map_.size()); }
  uint32_t operator()(uint32_t i) const { return map_[i]; }
  const std::vector<uint32_t>& mapping() const { return map_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Apply *this first, then next.
  Permutation then(const Permutation& next) const;

  // Cycle notation on 1-indexed points; "()" for the identity.
  std::string cycle_string() const;
  // Space-separated images of 1..n.
  std::string one_line_string() const;

  bool operator==(const Permutation& o) const { return map_ == o.map_; }

 private:
  std::vector<uint32_t> map_;
};

// Accepts either cycle notation "(1 2 3)(4 5)" or a one-line image list
// "3 1 2" (both 1-indexed). degree 0 means infer: the token count for
// one-line input, the largest point mentioned for cycles.
Permutation parse_permutation(const std::string& text, uint32_t degree = 0);

}  // namespace wordcensus
