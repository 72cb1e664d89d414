#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gw/gene.hpp"
#include "gw/triple.hpp"
#include "gw/weights.hpp"

namespace gw {

// A Serre weight parameter pair sigma_{s,r}: twist exponent s mod q-1
// (stored canonically in [0, q-1)) and symmetric-power degrees r_i in
// [0, p-1].  The boundary word r = (p-1,...,p-1) names the q-dimensional
// twist; the defining scans produce it on some degenerate inputs and it is
// kept (and counted, see EnumerationStats) — dropping it would break the
// bijection with combinatorial weights on those inputs.
struct SerreWeight {
  cpp_int s;
  std::vector<std::uint32_t> r;

  friend bool operator==(const SerreWeight& x, const SerreWeight& y) {
    return x.s == y.s && x.r == y.r;
  }
  friend bool operator<(const SerreWeight& x, const SerreWeight& y) {
    if (x.s != y.s) return x.s < y.s;
    return x.r < y.r;
  }
};

// "Sym^[r_0,...,r_{f-1}] (x) det^s".
std::string to_string(const SerreWeight& w);

// A weight together with the sign word that produced it in one of the two
// direct enumerations (eps for the representation side, eps_prime for the
// type side; the unused one is empty).
struct WeightWitness {
  SerreWeight sigma;
  std::vector<std::uint8_t> eps;
  std::vector<std::uint8_t> eps_prime;
};

// Convention switches for the type-side enumeration.  The shipped defaults
// are the unique combination that reproduces the reference weight sets; the
// alternatives exist only so the calibration test can demonstrate that
// uniqueness.  c_from_gamma_minus_gamma_prime selects the sign of the
// c-digits; table_as_printed selects between the published digit table and
// the variant implied by the companion proof identity.
struct TypeConventions {
  bool c_from_gamma_minus_gamma_prime = true;
  bool table_as_printed = true;
};

// Diagnostics: how many produced solutions had the boundary degree word
// r = (p-1,...,p-1).  Such solutions stay in the result set.
struct EnumerationStats {
  std::uint64_t all_pm1_solutions = 0;
};

// All sigma_{s,r} attached to the representation parameter h: scans the
// solutions (eps, r) in {0,1}^f x [0,p-1]^f of
//   h = sum_i (-1)^{eps_i} p^i (1+r_i)  (mod q+1),
// with s from the exact division of the defect by q+1.  Sorted by (s, r).
std::vector<SerreWeight> weights_of_rep(std::uint32_t p, std::uint32_t f,
                                        const cpp_int& h,
                                        EnumerationStats* stats = nullptr);
std::vector<WeightWitness> rep_witnesses(std::uint32_t p, std::uint32_t f,
                                         const cpp_int& h,
                                         EnumerationStats* stats = nullptr);

// All sigma_{s,r} attached to the inertial type (gamma, gamma'): one
// candidate per sign word eps' in {0,1}^f, with r_i read off the c-digits by
// the table
//   (eps'_i, eps'_{i-1}) = (0,0) -> c_i       (0,1) -> c_i - 1
//                          (1,0) -> p-2-c_i   (1,1) -> p-1-c_i
// (cyclically, eps'_{-1} = eps'_{f-1}), discarded when any r_i falls outside
// [0, p-1], and s from the halved-bracket formula.  Sorted by (s, r).
std::vector<SerreWeight> weights_of_type(std::uint32_t p, std::uint32_t f,
                                         const cpp_int& gamma,
                                         const cpp_int& gamma_prime,
                                         EnumerationStats* stats = nullptr);
std::vector<WeightWitness> type_witnesses(std::uint32_t p, std::uint32_t f,
                                          const cpp_int& gamma,
                                          const cpp_int& gamma_prime,
                                          const TypeConventions& conv = {},
                                          EnumerationStats* stats = nullptr);

// The sign word eps' determined by a member of the type's weight set
// (unique); throws NotAWeight if sigma is not in that set.
std::vector<std::uint8_t> recover_eps_prime(const CoherentTriple& t,
                                            const SerreWeight& sigma);

// Intersection of the two direct enumerations.  Sorted by (s, r).
std::vector<SerreWeight> common_weights_oracle(const CoherentTriple& t);

// Everything the per-weight recipe needs from the triple, computed once.
struct RecipeContext {
  CoherentTriple t;
  Gene gene;
  DigitVector v;                    // v_0 .. v_{2f-1}
  std::vector<std::uint32_t> c;     // c_0 .. c_{f-1}, least significant first
  std::vector<std::uint8_t> delta;  // delta_i = 1 iff X_i ~ X_{i+f}
};

RecipeContext recipe_context(const CoherentTriple& t);

// The recipe: Serre weight of one combinatorial weight of the triple's gene.
// r comes from the digit table driven by (v, w, delta); s is computed by
// lifting w to an enriched weight and evaluating the active-sequence formula,
// with the closed form as an internal cross-check.  Throws NotAWeight when w
// is not a weight of the gene.
SerreWeight serre_of_combinatorial(const CoherentTriple& t,
                                   const CombinatorialWeight& w);
SerreWeight serre_of_combinatorial(const RecipeContext& ctx,
                                   const CombinatorialWeight& w);

// Image of all combinatorial weights of the gene under the recipe; equals
// common_weights_oracle with the cost of the gene enumeration only.  Sorted
// by (s, r).
std::vector<SerreWeight> common_weights_fast(const CoherentTriple& t);

}  // namespace gw
