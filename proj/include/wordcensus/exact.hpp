#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wordcensus {

// All verdict-carrying quantities are exact: arbitrary-precision integers for
// counts, rationals for probabilities. No floating point anywhere on those
// paths.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, uint32_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

// "num/den" with the denominator always present ("1" for integers), the
// serialization used by every report format.
inline std::string fraction_string(const BigRat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace wordcensus
