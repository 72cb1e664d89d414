#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace gw;
using namespace gwtest;

TEST_CASE("running example: gene, viability, fragments") {
  CoherentTriple t = star_triple();
  Gene g = gene_of_triple(t);
  CHECK(render_gene(g) == "O,A,B,A,AB,O,A/B,A,AB,O,O,B,AB");
  CHECK(gene_of_triple_oracle(t) == g);
  CHECK(is_viable(g));
  CHECK(!is_degenerate(g));

  auto frs = fragments(g);
  REQUIRE(frs.size() == 4);
  CHECK(frs[0].anchor == 0);
  CHECK(frs[0].top == std::vector<Letter>{Letter::O, Letter::A, Letter::B});
  CHECK(frs[0].bottom == std::vector<Letter>{Letter::B, Letter::A, Letter::AB});
  CHECK(frs[1].anchor == 3);
  CHECK(frs[1].top == std::vector<Letter>{Letter::A});
  CHECK(frs[1].bottom == std::vector<Letter>{Letter::O});
  CHECK(frs[2].anchor == 4);
  CHECK(frs[2].top == std::vector<Letter>{Letter::AB});
  CHECK(frs[2].bottom == std::vector<Letter>{Letter::O});
  CHECK(frs[3].anchor == 5);
  CHECK(frs[3].top == std::vector<Letter>{Letter::O, Letter::A});
  CHECK(frs[3].bottom == std::vector<Letter>{Letter::B, Letter::AB});

  CHECK(dominant_letters(g) ==
        std::vector<Letter>{Letter::B, Letter::A, Letter::B, Letter::A,
                            Letter::B, Letter::B, Letter::A});
}

TEST_CASE("gene validation rejects each condition violation") {
  CHECK_THROWS_AS(parse_gene("AB,A/A,A"), ABNotFollowedByO);
  CHECK_THROWS_AS(parse_gene("O,A/A,A"), OIllegallyPreceded);
  CHECK_THROWS_AS(parse_gene("A,A/A,A"), ConditionThreeFails);
  CHECK_NOTHROW(parse_gene("A,B/B,A"));
  CHECK_NOTHROW(parse_gene("AB,O/B,A"));
}

TEST_CASE("render and parse round trip") {
  for (const Gene& g : all_valid_genes(3)) CHECK(parse_gene(render_gene(g)) == g);
}

TEST_CASE("fast gene construction matches the rotation-threshold oracle") {
  SUBCASE("exhaustive over p=5, f=2") {
    int coherent = 0;
    for (int h = 0; h < 624; ++h) {
      if (h % 26 == 0) continue;
      for (int gp = 0; gp < 24; ++gp) {
        int g = ((h - gp - 6) % 24 + 24) % 24;
        CoherentTriple t = make_triple(5, 2, h, g, gp);
        ++coherent;
        Gene gene = gene_of_triple(t);
        CHECK(gene == gene_of_triple_oracle(t));
        CHECK_NOTHROW(validate_gene(2, gene.x));
      }
    }
    CHECK(coherent == 14400);
  }
  SUBCASE("random triples across p and f") {
    std::mt19937_64 rng(21);
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
      for (std::uint32_t f = 2; f <= 10; ++f) {
        for (int it = 0; it < 300; ++it) {
          CoherentTriple t = random_triple(rng, p, f);
          CHECK(gene_of_triple(t) == gene_of_triple_oracle(t));
        }
      }
    }
  }
}

TEST_CASE("digit strings follow the realizability pattern of their gene") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 2000; ++it) {
    std::uint32_t p = it % 2 ? 5 : 7;
    CoherentTriple t = random_triple(rng, p, 2 + it % 7);
    DigitVector v = v_sequence(t);
    Gene g = gene_of_triple(t);
    for (std::size_t i = 0; i < v.size(); ++i) {
      switch (g.x[i]) {
        case Letter::A:
        case Letter::AB: CHECK(v[i] == 0); break;
        case Letter::B: CHECK(v[i] == 1); break;
        case Letter::O:
          if (g.at(i + 1) == Letter::O) CHECK(v[i] >= 1);
          else CHECK(v[i] >= 2);
          CHECK(v[i] <= p - 1);
          break;
      }
    }
  }
}

TEST_CASE("sampling round-trips the gene") {
  SUBCASE("exhaustive genes for small f") {
    for (std::uint32_t f = 1; f <= 4; ++f) {
      for (const Gene& g : all_valid_genes(f)) {
        std::mt19937_64 rng(99);
        std::optional<CoherentTriple> t;
        for (int attempt = 0; attempt < 64 && !t; ++attempt)
          t = sample_triple(g, 5, rng);
        REQUIRE(t.has_value());
        CHECK(gene_of_triple(*t) == g);
      }
    }
  }
  SUBCASE("running example gene with several seeds and primes") {
    Gene g = parse_gene("O,A,B,A,AB,O,A/B,A,AB,O,O,B,AB");
    for (std::uint32_t p : {5u, 7u, 11u}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        std::optional<CoherentTriple> t;
        for (int attempt = 0; attempt < 64 && !t; ++attempt)
          t = sample_triple(g, p, rng);
        REQUIRE(t.has_value());
        CHECK(t->p == p);
        CHECK(gene_of_triple(*t) == g);
      }
    }
  }
  SUBCASE("deterministic given the seed") {
    Gene g = parse_gene("O,A,B,A,AB,O,A/B,A,AB,O,O,B,AB");
    auto a = sample_triple(g, 5, std::uint64_t{7});
    auto b = sample_triple(g, 5, std::uint64_t{7});
    REQUIRE(a.has_value());
    CHECK(*a == *b);
  }
  SUBCASE("unsupported and invalid primes") {
    Gene g = parse_gene("A,B/B,A");
    CHECK_THROWS_AS(sample_triple(g, 3, std::uint64_t{0}), UnsupportedPrime);
    CHECK_THROWS_AS(sample_triple(g, 2, std::uint64_t{0}), UnsupportedPrime);
    CHECK_THROWS_AS(sample_triple(g, 9, std::uint64_t{0}), std::invalid_argument);
  }
}

TEST_CASE("fragments partition the gene and have the cut structure") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 500; ++it) {
    Gene g = random_valid_gene(rng, 2 + it % 9);
    if (is_degenerate(g) || !is_viable(g)) continue;
    auto frs = fragments(g);
    std::size_t total = 0;
    std::vector<int> covered(2 * g.f, 0);
    for (const Fragment& fr : frs) {
      total += fr.size();
      REQUIRE(fr.top.size() == fr.bottom.size());
      // Cut column: exactly one O, and only at position 0.
      CHECK(((fr.top[0] == Letter::O) != (fr.bottom[0] == Letter::O)));
      for (std::size_t j = 1; j < fr.size(); ++j) {
        CHECK(fr.top[j] != Letter::O);
        CHECK(fr.bottom[j] != Letter::O);
        if (j + 1 < fr.size()) {
          CHECK(fr.top[j] != Letter::AB);
          CHECK(fr.bottom[j] != Letter::AB);
        }
      }
      if (fr.size() >= 2)
        CHECK(((fr.top.back() == Letter::AB) != (fr.bottom.back() == Letter::AB)));
      for (std::size_t j = 0; j < fr.size(); ++j) {
        std::size_t i = (fr.anchor + j) % (2 * g.f);
        CHECK(g.x[i] == fr.top[j]);
        CHECK(g.x[(i + g.f) % (2 * g.f)] == fr.bottom[j]);
        covered[i] += 1;
        covered[(i + g.f) % (2 * g.f)] += 1;
      }
    }
    CHECK(total == g.f);
    for (int c : covered) CHECK(c == 1);
  }
}

TEST_CASE("fragment errors") {
  CHECK_THROWS_AS(fragments(parse_gene("A,B/B,A")), DegenerateGene);
  // (O,O) column: all-O gene.
  CHECK_THROWS_AS(fragments(parse_gene("O,O/O,O")), NotViable);
}

TEST_CASE("dominance terminates and matches column majorities") {
  for (std::uint32_t f = 1; f <= 5; ++f) {
    for (const Gene& g : all_valid_genes(f)) {
      if (!is_viable(g) || is_degenerate(g)) continue;
      std::vector<Letter> dom;
      try {
        dom = dominant_letters(g);
      } catch (const CircularDominance&) {
        // Throwing is allowed exactly when every column is a tie (reachable:
        // [AB/O] at f=1, alternating O/AB genes at odd f).
        for (std::uint32_t i = 0; i < f; ++i) {
          int a = (g.x[i] == Letter::A) + (g.x[i] == Letter::AB) +
                  (g.x[i + f] == Letter::A) + (g.x[i + f] == Letter::AB);
          int b = (g.x[i] == Letter::B) + (g.x[i] == Letter::AB) +
                  (g.x[i + f] == Letter::B) + (g.x[i + f] == Letter::AB);
          CHECK(a == b);
        }
        continue;
      }
      REQUIRE(dom.size() == f);
      for (std::uint32_t i = 0; i < f; ++i) {
        CHECK((dom[i] == Letter::A || dom[i] == Letter::B));
        int a = (g.x[i] == Letter::A) + (g.x[i] == Letter::AB) +
                (g.x[i + f] == Letter::A) + (g.x[i + f] == Letter::AB);
        int b = (g.x[i] == Letter::B) + (g.x[i] == Letter::AB) +
                (g.x[i + f] == Letter::B) + (g.x[i + f] == Letter::AB);
        if (a > b) CHECK(dom[i] == Letter::A);
        if (b > a) CHECK(dom[i] == Letter::B);
        if (a == b) CHECK(dom[i] == dom[(i + 1) % f]);
      }
    }
  }
}

TEST_CASE("an all-ones digit string reads as the all-O gene") {
  Gene g = gene_of_digits(5, DigitVector{1, 1, 1, 1});
  CHECK(g.x == std::vector<Letter>(4, Letter::O));
}

TEST_CASE("degenerate genes sample without digit randomness") {
  for (const Gene& g : all_degenerate_genes(3)) {
    auto t = sample_triple(g, 7, std::uint64_t{5});
    if (!t) continue;  // only the gamma' draw can fail
    CHECK(gene_of_triple(*t) == g);
    CHECK(v_sequence(*t) == [&] {
      DigitVector v(6);
      for (int i = 0; i < 6; ++i) v[i] = g.x[i] == Letter::B ? 1 : 0;
      return v;
    }());
  }
}
