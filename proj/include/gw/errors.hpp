#pragma once

#include <stdexcept>
#include <string>

namespace gw {

// Base class for all domain errors raised by this library.  Contract misuse
// (wrong container sizes, out-of-range digits, ...) throws std::invalid_argument
// or std::logic_error instead.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define GW_ERROR(Name, default_message)                                   \
  struct Name : error {                                                   \
    explicit Name(const std::string& m = default_message) : error(m) {}   \
  }

// Triple construction.
GW_ERROR(DivisibleByQPlusOne, "h is divisible by q+1");
GW_ERROR(DeterminantMismatch,
         "h, gamma, gamma' violate the determinant congruence mod q-1");
GW_ERROR(NotDivisibleByQPlusOne, "residue is not divisible by q+1");

// Gene validation.
GW_ERROR(ABNotFollowedByO, "AB must be followed by O");
GW_ERROR(OIllegallyPreceded, "O must be preceded by AB or O");
GW_ERROR(ConditionThreeFails,
         "gene has no O and equal rows (excluded by construction)");

// Gene decomposition and sampling.
GW_ERROR(DegenerateGene, "operation requires a gene containing O");
GW_ERROR(NotViable, "gene has a column with O in both rows");
GW_ERROR(CircularDominance, "dominance is tied in every column");
GW_ERROR(UnsupportedPrime, "sampling requires a prime p >= 5");

// Serre-weight recipes.
GW_ERROR(NotAWeight, "tuple is not a combinatorial weight of this gene");
GW_ERROR(NonIntegralS, "twist exponent is not integral for this sigma");

// Kisin presentations.
GW_ERROR(NotACross, "column index is not a cross of this fragment");

#undef GW_ERROR

}  // namespace gw
