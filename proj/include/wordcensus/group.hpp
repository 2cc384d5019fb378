#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordcensus/permutation.hpp"

namespace wordcensus {

struct GroupOptions {
  // Associativity is verified exhaustively (O(n^3)) only up to this order;
  // larger tables are trusted as constructed.
  uint32_t assoc_check_cap = 256;
  // Hard cap on the order of any constructed group (closure enumeration,
  // presets, products). Dense tables get quadratically expensive past this.
  uint32_t order_cap = 20160;
};

// A finite group as a dense multiplication table. Immutable after
// construction; safe to share across threads for reads.
class Group {
 public:
  uint32_t order() const { return order_; }
  uint32_t identity() const { return identity_; }

  uint32_t mul(uint32_t a, uint32_t b) const { return table_[size_t(a) * order_ + b]; }
  uint32_t inv(uint32_t a) const { return inverse_[a]; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(uint32_t a) const { return labels_[a]; }

  // Flat row-major table and inverse array, for the census kernels.
  const uint32_t* table_data() const { return table_.data(); }
  const uint32_t* inverse_data() const { return inverse_.data(); }

  bool is_abelian() const;
  uint32_t element_order(uint32_t a) const;

  // Validates closure, the Latin-square property, identity, inverses, and
  // (up to the cap) associativity. Throws Error naming the offending indices.
  static Group from_table(const std::vector<std::vector<uint32_t>>& table,
                          std::vector<std::string> labels = {},
                          const GroupOptions& opts = {});

  // Breadth-first closure of the generated permutation group; elements are
  // labeled by cycle notation. Throws OrderCapExceeded past opts.order_cap.
  static Group from_generators(uint32_t degree, const std::vector<Permutation>& gens,
                               const GroupOptions& opts = {});

 private:
  Group() = default;
  void finish(const GroupOptions& opts, bool validate_structure);

  uint32_t order_ = 0;
  uint32_t identity_ = 0;
  std::vector<uint32_t> table_;    // row-major, table_[a*order+b] = a*b
  std::vector<uint32_t> inverse_;  // two-sided inverses
  std::vector<std::string> labels_;
};

enum class Preset { Cyclic, Symmetric, Alternating, Dihedral, Quaternion8 };

// preset(cyclic,n) = C_n; preset(dihedral,n) has order 2n (n >= 3, built from
// the n-gon vertex permutations); quaternion8 is the literal 8x8 table.
Group preset_group(Preset kind, uint32_t n = 0, const GroupOptions& opts = {});

Group direct_product(const Group& a, const Group& b, const GroupOptions& opts = {});

// Parses "C12", "S4", "A5", "D6", "Q8" and '*'-separated direct products
// such as "C2*C2*C3". Throws UnknownPreset / InvalidParameter.
Group parse_group_spec(const std::string& spec, const GroupOptions& opts = {});

// Conjugacy classes in a fixed deterministic order: the identity's class
// first, then by smallest member index.
struct ConjugacyData {
  std::vector<uint32_t> class_of;             // element -> class index
  std::vector<std::vector<uint32_t>> classes; // members, ascending
  std::vector<uint32_t> class_sizes;
  std::vector<uint32_t> inverse_class;        // class of the inverses

  uint32_t num_classes() const { return static_cast<uint32_t>(classes.size()); }
};

ConjugacyData conjugacy(const Group& g);

// Order of [G,G], the multiplicative closure of all ghg^-1h^-1.
uint32_t commutator_subgroup_order(const Group& g);
// |G| / |[G,G]|; an integer by Lagrange.
uint32_t abelianization_order(const Group& g);

}  // namespace wordcensus
