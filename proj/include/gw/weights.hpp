#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "gw/gene.hpp"

namespace gw {

// A combinatorial weight of a gene: one bit per column index 0..f-1.
// Fragment-level weights have one bit per fragment column 0..l-1.
using CombinatorialWeight = std::vector<std::uint8_t>;

// The weights of one fragment, in lexicographic order.
std::vector<CombinatorialWeight> fragment_weights(const Fragment& fr);
cpp_int count_fragment_weights(const Fragment& fr);

// The weights of a gene, sorted lexicographically by (w_0, ..., w_{f-1}).
// Non-viable genes have no weights; degenerate genes use the cyclic
// recursion.  Counting never materializes the sets.
std::vector<CombinatorialWeight> gene_weights(const Gene& g);
cpp_int count_weights(const Gene& g);
bool is_weight(const Gene& g, const CombinatorialWeight& w);

// Streams the weights in the same lexicographic order; stops early when the
// callback returns false.  Memory stays O(f) regardless of the total count.
void visit_gene_weights(const Gene& g,
                        const std::function<bool(const CombinatorialWeight&)>& visit);

// Fibonacci numbers with fib(0) = 0, fib(1) = 1.  Card W(F) <= fib(l+2).
cpp_int fib_bound(std::uint32_t n);

// The fragment of length l >= 2 attaining Card = fib(l+2); `flipped` swaps
// the roles of A and B.
Fragment extremal_fragment(std::uint32_t l, bool flipped = false);

// Introspection for the degenerate recursion: the nine partial weight sets
// after step i (i from -1 to f-1), indexed [start][target] with states
// ordered (b,b), (a,b), (b,a).
using DegenerateTable = std::array<std::array<std::vector<CombinatorialWeight>, 3>, 3>;
DegenerateTable degenerate_weight_table(const Gene& g, int i);

}  // namespace gw
