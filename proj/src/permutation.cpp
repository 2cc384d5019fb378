#include "wordcensus/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "wordcensus/error.hpp"

namespace wordcensus {

Permutation::Permutation(std::vector<uint32_t> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (uint32_t v : map_) {
    if (v >= map_.size() || seen[v])
      throw Error(Errc::InvalidParameter, "mapping is not a bijection on 0.." +
                                              std::to_string(map_.size()) + "-1");
    seen[v] = true;
  }
}

Permutation Permutation::identity(uint32_t degree) {
  std::vector<uint32_t> m(degree);
  std::iota(m.begin(), m.end(), 0u);
  return Permutation(std::move(m));
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (map_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<uint32_t> m(map_.size());
  for (uint32_t i = 0; i < degree(); ++i) m[map_[i]] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree())
    throw Error(Errc::InvalidParameter, "composing permutations of different degree");
  std::vector<uint32_t> m(map_.size());
  for (uint32_t i = 0; i < degree(); ++i) m[i] = next.map_[map_[i]];
  return Permutation(std::move(m));
}

std::string Permutation::cycle_string() const {
  std::vector<bool> done(map_.size(), false);
  std::ostringstream out;
  for (uint32_t i = 0; i < degree(); ++i) {
    if (done[i] || map_[i] == i) continue;
    out << '(';
    uint32_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = map_[j];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::string Permutation::one_line_string() const {
  std::ostringstream out;
  for (uint32_t i = 0; i < degree(); ++i) {
    if (i) out << ' ';
    out << (map_[i] + 1);
  }
  return out.str();
}

namespace {

Permutation parse_cycles(const std::string& text, uint32_t degree) {
  std::vector<std::vector<uint32_t>> cycles;
  uint32_t max_point = 0;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw Error(Errc::ParseError, "expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start)
        throw Error(Errc::ParseError, "expected point at position " + std::to_string(pos));
      uint32_t point = static_cast<uint32_t>(std::stoul(text.substr(start, pos - start)));
      if (point == 0)
        throw Error(Errc::ParseError, "points are 1-indexed (position " + std::to_string(start) + ")");
      cycle.push_back(point - 1);
      max_point = std::max(max_point, point);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;  // allow "(1,2,3)"
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  uint32_t n = degree ? degree : max_point;
  if (max_point > n)
    throw Error(Errc::ParseError, "point " + std::to_string(max_point) + " exceeds degree " +
                                      std::to_string(n));
  std::vector<uint32_t> m(n);
  std::iota(m.begin(), m.end(), 0u);
  for (const auto& cycle : cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      uint32_t from = cycle[i];
      uint32_t to = cycle[(i + 1) % cycle.size()];
      if (m[from] != from)
        throw Error(Errc::ParseError, "point " + std::to_string(from + 1) + " appears twice");
      m[from] = to;
    }
  }
  // Rebuild to validate the composed mapping is still a bijection (cycles
  // sharing a point across parentheses are rejected above).
  return Permutation(std::move(m));
}

Permutation parse_one_line(const std::string& text, uint32_t degree) {
  std::istringstream in(text);
  std::vector<uint32_t> images;
  std::string tok;
  while (in >> tok) {
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(Errc::ParseError, "bad token '" + tok + "' in one-line permutation");
    uint32_t v = static_cast<uint32_t>(std::stoul(tok));
    if (v == 0) throw Error(Errc::ParseError, "one-line images are 1-indexed");
    images.push_back(v - 1);
  }
  if (images.empty()) throw Error(Errc::ParseError, "empty permutation");
  if (degree && images.size() != degree)
    throw Error(Errc::ParseError, "one-line permutation has " + std::to_string(images.size()) +
                                      " entries, expected " + std::to_string(degree));
  try {
    return Permutation(std::move(images));
  } catch (const Error&) {
    throw Error(Errc::ParseError, "one-line list is not a permutation: " + text);
  }
}

}  // namespace

Permutation parse_permutation(const std::string& text, uint32_t degree) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw Error(Errc::ParseError, "empty permutation");
  if (text[i] == '(') return parse_cycles(text, degree);
  return parse_one_line(text, degree);
}

}  // namespace wordcensus
