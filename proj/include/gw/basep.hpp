#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gw/errors.hpp"

namespace gw {

using boost::multiprecision::cpp_int;

using Digit = std::uint32_t;

// Base-p digits, most significant first.
using DigitVector = std::vector<Digit>;

// The three moduli attached to q = p^f.
enum class Ring : std::uint8_t {
  QM1,   // q - 1
  QP1,   // q + 1
  Q2M1,  // q^2 - 1
};

struct Modulus {
  std::uint32_t p = 0;
  std::uint32_t f = 0;
  Ring kind = Ring::QM1;

  // Number of digits in the canonical representation.
  std::uint32_t width() const;
  cpp_int value() const;  // the modulus itself
  cpp_int q() const;      // p^f

  friend bool operator==(const Modulus&, const Modulus&) = default;
};

// A canonical residue: `d.size() == mod.width()`, every digit < p, and the
// digits spell the canonical representative in [0, modulus).  For the p^k - 1
// moduli this means the all-(p-1) string is normalized to all zeros.
struct Residue {
  Modulus mod;
  DigitVector d;

  friend bool operator==(const Residue&, const Residue&) = default;
};

cpp_int pow_int(std::uint32_t base, std::uint32_t exp);

// Digit conversions (most significant first; `width` digits exactly).
DigitVector int_to_digits(const cpp_int& value, std::uint32_t p, std::uint32_t width);
cpp_int digits_to_int(const DigitVector& d, std::uint32_t p);

// Builds a canonical residue from `width()` digits (reduced if necessary).
Residue digits_to_residue(const Modulus& m, const DigitVector& d);
// Builds a canonical residue from any integer (negative values allowed).
Residue residue_from_int(const Modulus& m, const cpp_int& value);
cpp_int to_int(const Residue& r);

Residue res_zero(const Modulus& m);

// Modular arithmetic.  For the p^k - 1 moduli these are O(k) digit scans
// (end-around carry); no big-integer division is involved.
Residue res_add(const Residue& a, const Residue& b);
Residue res_neg(const Residue& a);
Residue res_sub(const Residue& a, const Residue& b);

// Multiplication by p^k: a left rotation of the digit string.  Rejects QP1
// residues (p^k is not a rotation mod q + 1).
Residue res_mul_pk(const Residue& a, std::uint32_t k);

// (q-1)/(p-1) = 1 + p + ... + p^{f-1}, the all-ones string mod q - 1.
Residue res_all_ones(std::uint32_t p, std::uint32_t f);

// Reduces a residue mod q^2 - 1 to one mod q - 1 (adds the two halves of the
// digit string with end-around carry).
Residue fold_qm1(const Residue& a);

// Divides a residue mod q^2 - 1 by q + 1.  Exact division: the high and low
// halves of the digit string must agree (the quotient is that shared half);
// throws NotDivisibleByQPlusOne otherwise.
Residue exact_div_qp1(const Residue& a);

}  // namespace gw
