#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordcensus/group.hpp"

namespace wordcensus {

struct Letter {
  uint32_t var = 0;
  int sign = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

// A word in free-group letters, stored as written; no implicit reduction.
class Word {
 public:
  Word() = default;

  // Renumbers variables densely in order of first appearance.
  explicit Word(std::vector<Letter> letters);

  // Keeps the given ids and arity; used where variable identities must
  // survive, e.g. relating a word to its free reduction.
  static Word with_arity(std::vector<Letter> letters, uint32_t num_vars);

  const std::vector<Letter>& letters() const { return letters_; }
  uint32_t num_vars() const { return num_vars_; }
  size_t length() const { return letters_.size(); }
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
  uint32_t num_vars_ = 0;
};

// Grammar: whitespace-separated `g<i>` / `g<i>^-1` tokens (1-indexed) and
// bracket sugar `[gA,gB]` for the commutator gA gB gA^-1 gB^-1. Sets
// *renumber_warning when the variable numbers were not already dense.
Word parse_word(const std::string& text, bool* renumber_warning = nullptr);

// Cancels adjacent inverse pairs; keeps variable ids and arity, so any
// assignment valid for `w` is valid for the result.
Word free_reduce(const Word& w);

uint32_t evaluate(const Word& w, const Group& g, const std::vector<uint32_t>& assignment);

}  // namespace wordcensus
