#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "gw/gene.hpp"
#include "gw/serre.hpp"
#include "gw/triple.hpp"
#include "gw/weights.hpp"

namespace gw {

// A 2f-periodic integer sequence (one period stored).  Values may leave
// [0, p-1] under mutation; activity re-checks bounds.
using PeriodicIntSequence = std::vector<std::int64_t>;

// An integer mask, same shape; enriched weights induce 0/1-valued masks.
using NumericalMask = std::vector<std::int64_t>;

// The two-letter alphabet underlying the similarity classes: A and AB map to
// a, B and O map to b.
enum class Cls : std::uint8_t { a, b };

Cls letter_class(Letter l);
char to_char(Cls c);

// An enriched weight: a 2f-periodic word over {a, b}.
using EnrichedWeight = std::vector<Cls>;

// A per-fragment enriched weight: the column pairs (top, bottom) for the
// fragment's columns, in fragment coordinates.
struct FragmentaryEnrichedWeight {
  std::vector<std::array<Cls, 2>> cols;

  friend bool operator==(const FragmentaryEnrichedWeight&,
                         const FragmentaryEnrichedWeight&) = default;
  friend auto operator<=>(const FragmentaryEnrichedWeight&,
                          const FragmentaryEnrichedWeight&) = default;
};

// sigma_i -> sigma_i - chi_i + p * chi_{i-1} (indices cyclic).  Mutations
// compose additively in chi.
PeriodicIntSequence mutate(const PeriodicIntSequence& sigma,
                           const NumericalMask& chi, std::uint32_t p);

// Active sequence: every pair (sigma_i, sigma_{i+f}) has both members in
// [0, p], at least one endpoint value (0 or p), and distinct members.
bool is_active(const PeriodicIntSequence& sigma, std::uint32_t p);

// Compatible sequence: sum_i sigma_i p^{2f-1-i} falls in the residue class
// of h - (q+1) gamma' mod q^2-1.
bool is_compatible(const PeriodicIntSequence& sigma, const CoherentTriple& t);

// The 0/1 mask of an enriched weight against the gene's letter classes:
// chi_i = 1 iff w_hat_i equals the class of X_i.
NumericalMask mask_of_enriched(const Gene& g, const EnrichedWeight& w_hat);

// The compatible sequence attached to an enriched weight: the v-digits
// mutated by its mask.
PeriodicIntSequence sigma_of_enriched(const CoherentTriple& t,
                                      const EnrichedWeight& w_hat);

// Membership test for the active set W_hat.
bool is_active_enriched(const CoherentTriple& t, const EnrichedWeight& w_hat);

// All fragmentary enriched weights of one fragment, sorted.
std::vector<FragmentaryEnrichedWeight> fragment_enriched(const Fragment& fr);

// The set W_hat of the triple: all active enriched weights, sorted.
// Nondegenerate viable genes assemble the per-fragment recursions; a
// degenerate gene runs a cyclic transfer over its columns; a non-viable gene
// has none.
std::vector<EnrichedWeight> enumerate_enriched(const CoherentTriple& t);

// Collapse to a combinatorial weight: bit i = 1 iff w_hat_i = w_hat_{i+f}.
CombinatorialWeight delta(const EnrichedWeight& w_hat);

// One active enriched weight with delta(lift) = w (all lifts give the same
// Serre weight); throws NotAWeight when w is not a weight of the gene.
EnrichedWeight lift_weight(const Gene& g, const CombinatorialWeight& w);

// Serre weight of an active compatible sequence: r and the sign word from
// the endpoint pattern of each pair, s from the exact division by q+1.
// Throws std::invalid_argument if sigma is not active, NonIntegralS if the
// division fails (sigma not compatible).
SerreWeight serre_of_sigma(const CoherentTriple& t,
                           const PeriodicIntSequence& sigma);

}  // namespace gw
