#include "gw/triple.hpp"

#include <algorithm>
#include <stdexcept>

namespace gw {

namespace {

CoherentTriple build_checked(std::uint32_t p, std::uint32_t f, Residue h,
                             Residue gamma, Residue gamma_prime) {
  if (p < 3) throw std::invalid_argument("make_triple requires an odd prime p");
  if (f < 1) throw std::invalid_argument("make_triple requires f >= 1");
  // q+1 | h  iff  the two halves of the digit string agree.
  if (std::equal(h.d.begin(), h.d.begin() + f, h.d.begin() + f))
    throw DivisibleByQPlusOne();
  Residue lhs = fold_qm1(h);
  Residue rhs = res_add(res_add(gamma, gamma_prime), res_all_ones(p, f));
  if (lhs != rhs) throw DeterminantMismatch();
  return CoherentTriple{p, f, std::move(h), std::move(gamma), std::move(gamma_prime)};
}

}  // namespace

CoherentTriple make_triple(std::uint32_t p, std::uint32_t f, const cpp_int& h,
                           const cpp_int& gamma, const cpp_int& gamma_prime) {
  Modulus big{p, f, Ring::Q2M1}, small{p, f, Ring::QM1};
  return build_checked(p, f, residue_from_int(big, h), residue_from_int(small, gamma),
                       residue_from_int(small, gamma_prime));
}

CoherentTriple make_triple(std::uint32_t p, std::uint32_t f, const DigitVector& h,
                           const DigitVector& gamma, const DigitVector& gamma_prime) {
  Modulus big{p, f, Ring::Q2M1}, small{p, f, Ring::QM1};
  return build_checked(p, f, digits_to_residue(big, h), digits_to_residue(small, gamma),
                       digits_to_residue(small, gamma_prime));
}

DigitVector v_sequence(const CoherentTriple& t) {
  // (q+1) * gamma' mod q^2-1 is the digit string of gamma' repeated twice.
  Residue doubled{t.h.mod, t.gamma_prime.d};
  doubled.d.insert(doubled.d.end(), t.gamma_prime.d.begin(), t.gamma_prime.d.end());
  return res_sub(t.h, doubled).d;
}

std::vector<std::uint32_t> c_sequence(const CoherentTriple& t) {
  Residue diff = res_sub(t.gamma, t.gamma_prime);
  std::vector<std::uint32_t> c(diff.d.rbegin(), diff.d.rend());
  return c;
}

}  // namespace gw
