#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gw/gene.hpp"

namespace gw {

// ---------------------------------------------------------------------------
// Combinatorial presentations of the varieties attached to a gene.
//
// The variety attached to a fragment of length l lives in (P^1)^l, one
// projective coordinate pair (x_i : y_i) per column.  Its presentation
// consists of
//   * constant columns, where the coordinate is pinned to [0:1] or [1:0], and
//   * quadric equations  lambda x_i y_{i+1} = mu y_i x_{i+1}  between
//     consecutive columns whose dominant letters agree, with lambda, mu
//     in {0, 1} read off the two rows.
// The gene-level variety glues the fragment varieties cyclically; its columns
// are indexed by 0..f-1 and the coordinate roles swap when an index wraps
// past f-1.
// ---------------------------------------------------------------------------

// State of one projective column of a presentation.
enum class ColumnValue : std::uint8_t {
  Free,        // (x_i : y_i) unconstrained
  TopZero,     // pinned to [0:1]  (x_i = 0)
  BottomZero,  // pinned to [1:0]  (y_i = 0)
};

// The quadric between columns i and i+1 (cyclically for a gene):
//   top * x_i y_{i+1} = bottom * y_i x_{i+1},
// where top = 1 iff the top letter at column i equals the dominant letter
// there, and bottom likewise for the bottom letter.  Both bits can be zero
// at gene level (the equation is then vacuous but still recorded).
struct KisinEquation {
  std::uint32_t i = 0;
  std::uint8_t top = 0;
  std::uint8_t bottom = 0;

  friend bool operator==(const KisinEquation&, const KisinEquation&) = default;
};

// A presentation: n projective columns, per-column constants, and the list of
// equations.  `cyclic` distinguishes gene presentations (equations may join
// column n-1 back to column 0) from fragment presentations (no wrap).
//
// A further "shape" datum (the stratification of each equal-dominance link
// into its x=0 / y=0 / diagonal strata) is part of the intended data of a
// presentation but is deliberately left unpopulated here; see the reduced
// classification below for where its absence is observable.
struct KisinPresentation {
  std::uint32_t n = 0;
  bool cyclic = false;
  std::vector<ColumnValue> constants;  // size n
  std::vector<KisinEquation> equations;

  friend bool operator==(const KisinPresentation&,
                         const KisinPresentation&) = default;
};

// How a fully reduced fragment presents itself (after normalising the O to
// the top row):
//   kSingle  -- a single column [O/A] or [O/AB];
//   kOpen    -- length > 1 with B dominant at column 1;
//   kPinned  -- length > 2 starting O,A / A,B with A dominant at column 2;
//              its variety carries one extra pinned [0:1] column in front
//              when it is glued into a longer fragment.
enum class ReducedForm : std::uint8_t { kSingle, kOpen, kPinned };

// Result of reducing a fragment: the variety of the input is
//   {[0:1]}^n x V(reduced)        (x and y swapped throughout if `swapped`),
// where for a kPinned result the pinned front column of `reduced` is counted
// inside V(reduced) rather than in the prefix.
struct ReductionResult {
  std::uint32_t n = 0;
  Fragment reduced;
  bool swapped = false;        // input had its O in the bottom row
  ReducedForm form = ReducedForm::kSingle;

  friend bool operator==(const ReductionResult&,
                         const ReductionResult&) = default;
};

// One slice of the gene-level variety: the columns [start, start+n) (mod f),
// the presentation restricted to them, and the number of combinatorial
// weights its fragment contributes there.
struct KisinComponent {
  std::uint32_t start = 0;
  KisinPresentation presentation;
  cpp_int weight_count = 0;

  friend bool operator==(const KisinComponent&,
                         const KisinComponent&) = default;
};

// Presentation of the gene-level variety.  Constants are the O-columns (the
// row with the O is the zero coordinate); an equation joins every cyclically
// consecutive pair of columns with equal dominant letters.  For the
// alternating genes in {O, AB}, where every column ties, all columns are
// constant and every equation is recorded with both bits zero.  Throws
// DegenerateGene or NotViable.
KisinPresentation presentation_of_gene(const Gene& g);

// Presentation of a standalone fragment (non-cyclic; no equation involves
// the last column's letters).  A single column contributes only its
// constant; longer fragments also get the constant of column 0 and the
// equal-dominance equations.
KisinPresentation presentation_of_fragment(const Fragment& fr);

// Exchanges A and B everywhere in the fragment.  Leaves the presentation
// unchanged; on weights it is the twist (1-w_0, w_1, ..., w_{l-1}) for
// l > 1 and the identity for l = 1.
Fragment flip(const Fragment& fr);

// Whether the fragment is reduced, i.e. (up to putting the O on top) of one
// of the three ReducedForm shapes.
bool is_reduced(const Fragment& fr);

// Reduces a fragment in one step: splits off the maximal pinned prefix and
// returns the reduced remainder, which always lands in one of the three
// shapes.  Preserves the weight count: the reduced fragment has exactly as
// many combinatorial weights as the input.
ReductionResult reduce(const Fragment& fr);

// The crosses of a fragment: the interior columns i (0 < i < l-1) whose two
// letters both equal the dominant letter of column i+1.  Every combinatorial
// weight vanishes at a cross.
std::vector<std::uint32_t> crosses(const Fragment& fr);

// Removes column i from the fragment, which must be a cross (throws
// NotACross).  The weight count weakly decreases, strictly unless the cross
// is adjacent to another cross in a reduced fragment.
Fragment delete_cross(const Fragment& fr, std::uint32_t i);

// Splits the gene-level presentation at its constant-column set S (the
// O-columns together with the pinned prefixes of the non-reduced fragments):
// one component per element of S, spanning the columns up to the next
// element of S cyclically.  The weight counts multiply to the number of
// combinatorial weights of the gene.  Throws DegenerateGene or NotViable.
std::vector<KisinComponent> decompose(const Gene& g);

// Text rendering: one "x_i = 0" / "y_i = 0" line per constant column
// followed by one line per equation with the bits substituted.  Gene
// presentations use x_i, x_{i+f} for the two rows of column i; fragment
// presentations use x_i, y_i.
std::string render_presentation(const KisinPresentation& pres);

}  // namespace gw
