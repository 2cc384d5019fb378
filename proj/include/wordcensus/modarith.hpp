#pragma once

#include <cstdint>

namespace wordcensus {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Inverse mod a prime p.
inline uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b) % p; }

// a^e mod a prime p with e allowed to be negative.
inline uint64_t powmod_signed(uint64_t a, int64_t e, uint64_t p) {
  if (e >= 0) return powmod(a, static_cast<uint64_t>(e), p);
  return invmod(powmod(a, static_cast<uint64_t>(-e), p), p);
}

}  // namespace wordcensus
