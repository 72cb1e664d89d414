#pragma once

#include <cstdint>

#include "gw/basep.hpp"

namespace gw {

// Integer parameters (h, gamma, gamma') of a two-dimensional situation at
// q = p^f: h lives mod q^2-1 and must not be divisible by q+1, gamma and
// gamma' live mod q-1, and the three satisfy the determinant congruence
//   h = gamma + gamma' + (q-1)/(p-1)   (mod q-1).
struct CoherentTriple {
  std::uint32_t p = 0;
  std::uint32_t f = 0;
  Residue h;            // mod q^2 - 1
  Residue gamma;        // mod q - 1
  Residue gamma_prime;  // mod q - 1

  friend bool operator==(const CoherentTriple&, const CoherentTriple&) = default;
};

// Validates and builds a coherent triple.  Inputs are reduced to canonical
// representatives.  Throws DivisibleByQPlusOne or DeterminantMismatch.
CoherentTriple make_triple(std::uint32_t p, std::uint32_t f, const cpp_int& h,
                           const cpp_int& gamma, const cpp_int& gamma_prime);
CoherentTriple make_triple(std::uint32_t p, std::uint32_t f, const DigitVector& h,
                           const DigitVector& gamma, const DigitVector& gamma_prime);

// The 2f base-p digits (most significant first) of h - (q+1)*gamma' mod q^2-1.
// Everything combinatorial about the triple is read off this string.
DigitVector v_sequence(const CoherentTriple& t);

// The f digits of gamma - gamma' mod q-1, least significant first: entry i is
// the digit of p^i.  This sign is the one under which the type-side digit
// table and both twist-exponent formulas reproduce the reference session's
// weight sets (fixed by the calibration test).
std::vector<std::uint32_t> c_sequence(const CoherentTriple& t);

}  // namespace gw
