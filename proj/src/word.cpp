#include "wordcensus/word.hpp"

#include <algorithm>
#include <map>

#include "wordcensus/error.hpp"

namespace wordcensus {

Word::Word(std::vector<Letter> letters) {
  std::map<uint32_t, uint32_t> renumber;
  for (auto& l : letters) {
    auto [it, fresh] = renumber.try_emplace(l.var, uint32_t(renumber.size()));
    (void)fresh;
    l.var = it->second;
  }
  letters_ = std::move(letters);
  num_vars_ = static_cast<uint32_t>(renumber.size());
}

Word Word::with_arity(std::vector<Letter> letters, uint32_t num_vars) {
  for (const auto& l : letters)
    if (l.var >= num_vars)
      throw Error(Errc::InvalidParameter,
                  "letter variable " + std::to_string(l.var) + " out of arity " +
                      std::to_string(num_vars));
  Word w;
  w.letters_ = std::move(letters);
  w.num_vars_ = num_vars;
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'g' + std::to_string(l.var + 1);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at position " + std::to_string(pos));
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  uint32_t read_var() {
    if (done() || peek() != 'g') fail("expected generator");
    ++pos;
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable number");
    uint64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("variable number too large");
      ++pos;
    }
    if (v == 0) fail("variable numbers start at 1");
    return static_cast<uint32_t>(v);
  }
};

}  // namespace

Word parse_word(const std::string& text, bool* renumber_warning) {
  Cursor c{text};
  std::vector<Letter> letters;  // var holds the 1-indexed source number here
  while (true) {
    c.skip_ws();
    if (c.done()) break;
    if (c.peek() == '[') {
      ++c.pos;
      c.skip_ws();
      uint32_t a = c.read_var();
      c.skip_ws();
      if (c.done() || c.peek() != ',') c.fail("expected ',' in bracket");
      ++c.pos;
      c.skip_ws();
      uint32_t b = c.read_var();
      c.skip_ws();
      if (c.done() || c.peek() != ']') c.fail("expected ']'");
      ++c.pos;
      letters.push_back({a, +1});
      letters.push_back({b, +1});
      letters.push_back({a, -1});
      letters.push_back({b, -1});
    } else {
      uint32_t v = c.read_var();
      int sign = 1;
      if (!c.done() && c.peek() == '^') {
        ++c.pos;
        if (c.text.compare(c.pos, 2, "-1") == 0) {
          c.pos += 2;
          sign = -1;
        } else {
          c.fail("expected -1 after '^'");
        }
      }
      letters.push_back({v, sign});
    }
  }

  if (renumber_warning) {
    uint32_t max_var = 0;
    std::vector<uint32_t> seen;
    for (const auto& l : letters) {
      max_var = std::max(max_var, l.var);
      seen.push_back(l.var);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    *renumber_warning = !letters.empty() && max_var != seen.size();
  }
  return Word(std::move(letters));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (!out.empty() && out.back().var == l.var && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word::with_arity(std::move(out), w.num_vars());
}

uint32_t evaluate(const Word& w, const Group& g, const std::vector<uint32_t>& assignment) {
  if (assignment.size() != w.num_vars())
    throw Error(Errc::ArityMismatch, "assignment length " + std::to_string(assignment.size()) +
                                         ", word arity " + std::to_string(w.num_vars()));
  for (uint32_t x : assignment)
    if (x >= g.order())
      throw Error(Errc::InvalidParameter, "element index " + std::to_string(x) + " out of range");
  uint32_t acc = g.identity();
  for (const auto& l : w.letters()) {
    uint32_t x = assignment[l.var];
    acc = g.mul(acc, l.sign > 0 ? x : g.inv(x));
  }
  return acc;
}

}  // namespace wordcensus
