#pragma once

#include <random>
#include <vector>

#include "gw/gene.hpp"

namespace gwtest {

using namespace gw;

inline bool letter_pair_ok(Letter cur, Letter next) {
  if (cur == Letter::AB) return next == Letter::O;
  if (next == Letter::O) return cur == Letter::O;  // cur == AB handled above
  return true;
}

// All words satisfying the gene conditions, by DFS with the successor
// constraint checked incrementally (the cyclic closure and the
// distinct-halves condition at the leaves).
inline std::vector<Gene> all_valid_genes(std::uint32_t f) {
  std::vector<Gene> out;
  std::vector<Letter> word;
  const std::size_t n = 2 * static_cast<std::size_t>(f);
  const Letter alphabet[4] = {Letter::A, Letter::B, Letter::AB, Letter::O};
  auto rec = [&](auto&& self) -> void {
    if (word.size() == n) {
      if (!letter_pair_ok(word.back(), word.front())) return;
      bool has_o = false;
      for (Letter l : word) has_o |= l == Letter::O;
      if (!has_o &&
          std::equal(word.begin(), word.begin() + f, word.begin() + f))
        return;
      out.push_back(Gene{f, word});
      return;
    }
    for (Letter l : alphabet) {
      if (!word.empty() && !letter_pair_ok(word.back(), l)) continue;
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline std::vector<Gene> all_degenerate_genes(std::uint32_t f) {
  std::vector<Gene> out;
  const std::size_t n = 2 * static_cast<std::size_t>(f);
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<Letter> word(n);
    for (std::size_t i = 0; i < n; ++i)
      word[i] = (mask >> i) & 1 ? Letter::B : Letter::A;
    if (std::equal(word.begin(), word.begin() + f, word.begin() + f)) continue;
    out.push_back(Gene{f, std::move(word)});
  }
  return out;
}

// A random gene drawn through a random base-p digit string.
inline Gene random_valid_gene(std::mt19937_64& rng, std::uint32_t f,
                              std::uint32_t p = 5) {
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  for (;;) {
    DigitVector v(2 * static_cast<std::size_t>(f));
    for (auto& d : v) d = digit(rng);
    bool all_max = std::all_of(v.begin(), v.end(),
                               [p](Digit d) { return d == p - 1; });
    if (all_max) continue;
    bool small = std::all_of(v.begin(), v.end(), [](Digit d) { return d <= 1; });
    if (small && std::equal(v.begin(), v.begin() + f, v.begin() + f)) continue;
    return gene_of_digits(p, v);
  }
}

// A random coherent triple; gene shapes follow the digit distribution.
inline CoherentTriple random_triple(std::mt19937_64& rng, std::uint32_t p,
                                    std::uint32_t f) {
  for (;;) {
    Gene g = random_valid_gene(rng, f, p);
    if (auto t = sample_triple(g, p, rng)) return *t;
  }
}

inline CoherentTriple star_triple() {
  return make_triple(5, 7, cpp_int{"4865171564"}, 58923, 77258);
}

}  // namespace gwtest
