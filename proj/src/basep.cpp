#include "gw/basep.hpp"

#include <algorithm>
#include <stdexcept>

namespace gw {

namespace {

bool all_digits_equal(const DigitVector& d, Digit value) {
  return std::all_of(d.begin(), d.end(), [value](Digit x) { return x == value; });
}

// Canonicalizes a p^k - 1 residue in place: the all-(p-1) string is the other
// spelling of zero.
void normalize_pk_minus_one(DigitVector& d, std::uint32_t p) {
  if (!d.empty() && all_digits_equal(d, p - 1)) std::fill(d.begin(), d.end(), 0u);
}

// Adds two digit strings of equal length with end-around carry (valid mod
// p^k - 1, where p^k = 1).
DigitVector add_end_around(const DigitVector& a, const DigitVector& b, std::uint32_t p) {
  DigitVector out(a.size());
  Digit carry = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    Digit s = a[i] + b[i] + carry;
    carry = s >= p ? 1 : 0;
    out[i] = s >= p ? s - p : s;
  }
  while (carry) {
    for (std::size_t i = out.size(); carry && i-- > 0;) {
      Digit s = out[i] + carry;
      carry = s >= p ? 1 : 0;
      out[i] = s >= p ? s - p : s;
    }
  }
  normalize_pk_minus_one(out, p);
  return out;
}

void check_digits(const DigitVector& d, std::uint32_t p) {
  for (Digit x : d)
    if (x >= p) throw std::invalid_argument("digit out of range for base p");
}

}  // namespace

std::uint32_t Modulus::width() const {
  switch (kind) {
    case Ring::QM1: return f;
    case Ring::QP1: return f + 1;
    case Ring::Q2M1: return 2 * f;
  }
  throw std::logic_error("bad Ring");
}

cpp_int Modulus::q() const { return pow_int(p, f); }

cpp_int Modulus::value() const {
  switch (kind) {
    case Ring::QM1: return q() - 1;
    case Ring::QP1: return q() + 1;
    case Ring::Q2M1: return q() * q() - 1;
  }
  throw std::logic_error("bad Ring");
}

cpp_int pow_int(std::uint32_t base, std::uint32_t exp) {
  cpp_int out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out *= base;
  return out;
}

DigitVector int_to_digits(const cpp_int& value, std::uint32_t p, std::uint32_t width) {
  if (value < 0) throw std::invalid_argument("int_to_digits requires value >= 0");
  DigitVector d(width, 0);
  cpp_int rest = value;
  for (std::size_t i = width; i-- > 0 && rest != 0;) {
    d[i] = static_cast<Digit>(rest % p);
    rest /= p;
  }
  if (rest != 0) throw std::invalid_argument("value does not fit in width digits");
  return d;
}

cpp_int digits_to_int(const DigitVector& d, std::uint32_t p) {
  cpp_int out = 0;
  for (Digit x : d) out = out * p + x;
  return out;
}

Residue digits_to_residue(const Modulus& m, const DigitVector& d) {
  if (d.size() != m.width())
    throw std::invalid_argument("digit vector has wrong width for modulus");
  check_digits(d, m.p);
  if (m.kind == Ring::QP1) return residue_from_int(m, digits_to_int(d, m.p));
  Residue r{m, d};
  normalize_pk_minus_one(r.d, m.p);
  return r;
}

Residue residue_from_int(const Modulus& m, const cpp_int& value) {
  cpp_int mod = m.value();
  cpp_int v = value % mod;
  if (v < 0) v += mod;
  Residue r{m, int_to_digits(v, m.p, m.width())};
  return r;  // canonical representative: no p^k-1 normalization needed
}

cpp_int to_int(const Residue& r) { return digits_to_int(r.d, r.mod.p); }

Residue res_zero(const Modulus& m) { return Residue{m, DigitVector(m.width(), 0)}; }

Residue res_add(const Residue& a, const Residue& b) {
  if (a.mod != b.mod) throw std::invalid_argument("res_add: modulus mismatch");
  if (a.mod.kind == Ring::QP1)
    return residue_from_int(a.mod, to_int(a) + to_int(b));
  return Residue{a.mod, add_end_around(a.d, b.d, a.mod.p)};
}

Residue res_neg(const Residue& a) {
  if (a.mod.kind == Ring::QP1)
    return residue_from_int(a.mod, -to_int(a));
  // mod p^k - 1 the digitwise complement is the negative.
  Residue out{a.mod, a.d};
  for (Digit& x : out.d) x = (a.mod.p - 1) - x;
  normalize_pk_minus_one(out.d, a.mod.p);
  return out;
}

Residue res_sub(const Residue& a, const Residue& b) { return res_add(a, res_neg(b)); }

Residue res_mul_pk(const Residue& a, std::uint32_t k) {
  if (a.mod.kind == Ring::QP1)
    throw std::invalid_argument("res_mul_pk: rotation is invalid mod q+1");
  Residue out{a.mod, a.d};
  std::uint32_t w = a.mod.width();
  std::rotate(out.d.begin(), out.d.begin() + (k % w), out.d.end());
  normalize_pk_minus_one(out.d, a.mod.p);
  return out;
}

Residue res_all_ones(std::uint32_t p, std::uint32_t f) {
  return Residue{Modulus{p, f, Ring::QM1}, DigitVector(f, 1)};
}

Residue fold_qm1(const Residue& a) {
  if (a.mod.kind != Ring::Q2M1)
    throw std::invalid_argument("fold_qm1 expects a residue mod q^2-1");
  std::uint32_t f = a.mod.f;
  DigitVector hi(a.d.begin(), a.d.begin() + f);
  DigitVector lo(a.d.begin() + f, a.d.end());
  Residue out{Modulus{a.mod.p, f, Ring::QM1}, add_end_around(hi, lo, a.mod.p)};
  return out;
}

Residue exact_div_qp1(const Residue& a) {
  if (a.mod.kind != Ring::Q2M1)
    throw std::invalid_argument("exact_div_qp1 expects a residue mod q^2-1");
  std::uint32_t f = a.mod.f;
  // a = H*q + L with H, L in [0, q): q+1 divides a  iff  H == L, and the
  // quotient is the shared half.
  if (!std::equal(a.d.begin(), a.d.begin() + f, a.d.begin() + f))
    throw NotDivisibleByQPlusOne();
  DigitVector half(a.d.begin(), a.d.begin() + f);
  Residue out{Modulus{a.mod.p, f, Ring::QM1}, std::move(half)};
  normalize_pk_minus_one(out.d, a.mod.p);
  return out;
}

}  // namespace gw
