#include "wordcensus/crt.hpp"

#include <boost/integer/extended_euclidean.hpp>

#include "wordcensus/error.hpp"

namespace wordcensus {

BigInt crt_lift(const std::vector<Residue>& residues, const BigInt& bound) {
  if (residues.empty()) throw Error(Errc::InvalidParameter, "no residues");
  for (const auto& r : residues) {
    if (r.modulus < 2) throw Error(Errc::InvalidParameter, "modulus must be at least 2");
    if (r.value >= r.modulus)
      throw Error(Errc::InvalidParameter, "residue " + std::to_string(r.value) +
                                              " not reduced mod " + std::to_string(r.modulus));
  }

  BigInt x = residues[0].value;
  BigInt m = residues[0].modulus;
  for (size_t i = 1; i < residues.size(); ++i) {
    const BigInt mi = residues[i].modulus;
    const BigInt ri = residues[i].value;
    auto e = boost::integer::extended_euclidean(m, mi);
    const BigInt& g = e.gcd;
    BigInt diff = ri - x;
    if (diff % g != 0)
      throw Error(Errc::Inconsistent, "residue " + std::to_string(residues[i].value) + " mod " +
                                          std::to_string(residues[i].modulus) +
                                          " conflicts with earlier moduli");
    BigInt lcm = m / g * mi;
    // x + m * t ≡ ri (mod mi) with t = (diff / g) * inv(m/g mod mi/g).
    BigInt step = (diff / g % (mi / g)) * e.x % (mi / g);
    x = (x + m * step) % lcm;
    if (x < 0) x += lcm;
    m = lcm;
  }

  if (m <= bound)
    throw Error(Errc::InsufficientModuli,
                "combined modulus " + m.str() + " does not exceed bound " + bound.str());
  return x;
}

}  // namespace wordcensus
