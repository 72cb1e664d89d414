#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gw/triple.hpp"

namespace gw {

enum class Letter : std::uint8_t { A, B, AB, O };

std::string to_string(Letter l);
Letter letter_from_string(const std::string& s);

// A gene: a (2f)-periodic word X_0 ... X_{2f-1} in {A, B, AB, O} such that
//   (i)  every AB is followed by O,
//   (ii) every O is preceded by AB or O,
//   (iii) the word contains an O, or the two halves differ.
// Column i of the two-row picture is the pair (X_i, X_{i+f}); extending the
// column index past f-1 swaps the rows (column i+f is column i upside down).
struct Gene {
  std::uint32_t f = 0;
  std::vector<Letter> x;  // size 2f

  Letter at(std::size_t i) const { return x[i % x.size()]; }

  friend bool operator==(const Gene&, const Gene&) = default;
};

// Validates the three gene conditions; throws ABNotFollowedByO,
// OIllegallyPreceded or ConditionThreeFails.
Gene validate_gene(std::uint32_t f, std::vector<Letter> letters);

// Text form "X_0,...,X_{f-1}/X_f,...,X_{2f-1}" (top row / bottom row).
std::string render_gene(const Gene& g);
Gene parse_gene(const std::string& text);

// Reads the gene off a (2f)-digit string: position i is O when the rotation
// of the string starting at i is >= the all-ones string, and otherwise the
// digit at i picks A/AB (digit 0) or B (digit 1) depending on whether an O
// follows.  The string must not be all zeros and ones with equal halves.
Gene gene_of_digits(std::uint32_t p, const DigitVector& v);

// The gene of a coherent triple, in O(f) digit operations: seed an O at the
// first digit >= 2 (if any) and sweep the local rules backwards once.
Gene gene_of_triple(const CoherentTriple& t);

// Independent reconstruction that classifies every position by the rotation
// threshold; used to cross-check gene_of_triple.
Gene gene_of_triple_oracle(const CoherentTriple& t);

bool is_degenerate(const Gene& g);          // no O anywhere
bool is_viable(const Gene& g);              // no column (O, O)

// A maximal run of columns starting at the unique O-cut.  Row 0 of column j
// is the gene letter at position anchor+j and row 1 the letter at
// anchor+j+f, both mod 2f, so a fragment that wraps past column f-1
// continues with its rows exchanged.
struct Fragment {
  std::uint32_t anchor = 0;
  std::vector<Letter> top, bottom;

  std::size_t size() const { return top.size(); }

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

// Cuts a viable, non-degenerate gene at its O-columns.  Fragments are listed
// by increasing anchor.  Throws DegenerateGene or NotViable.
std::vector<Fragment> fragments(const Gene& g);

// The dominant letter (A or B) of every column: a strict majority among the
// letters of the column (AB contributes one A and one B, O nothing), ties
// deferring to the next column cyclically.  Throws CircularDominance when
// every column ties, which happens exactly for the alternating words in
// {O, AB} (only possible at odd f).
std::vector<Letter> dominant_letters(const Gene& g);

// Same rule on a standalone fragment; ties defer rightwards and the last
// column never ties except for the single-column fragments [O/AB], [AB/O]
// (CircularDominance).
std::vector<Letter> fragment_dominants(const Fragment& fr);

// Draws a coherent triple with the given gene, uniformly at random: digits
// are drawn per the realizability pattern, gamma' uniformly.  Returns nullopt
// (retryable) when the draw lands on an excluded residue; throws
// UnsupportedPrime for p < 5 and std::invalid_argument for composite p.
std::optional<CoherentTriple> sample_triple(const Gene& g, std::uint32_t p,
                                            std::mt19937_64& rng);
std::optional<CoherentTriple> sample_triple(const Gene& g, std::uint32_t p,
                                            std::uint64_t seed);

}  // namespace gw
