#include "gw/gene.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace gw {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::string to_string(Letter l) {
  switch (l) {
    case Letter::A: return "A";
    case Letter::B: return "B";
    case Letter::AB: return "AB";
    case Letter::O: return "O";
  }
  throw std::logic_error("bad Letter");
}

Letter letter_from_string(const std::string& s) {
  if (s == "A") return Letter::A;
  if (s == "B") return Letter::B;
  if (s == "AB") return Letter::AB;
  if (s == "O") return Letter::O;
  throw std::invalid_argument("unknown letter: " + s);
}

Gene validate_gene(std::uint32_t f, std::vector<Letter> letters) {
  if (f < 1 || letters.size() != 2 * static_cast<std::size_t>(f))
    throw std::invalid_argument("gene needs exactly 2f letters");
  const std::size_t n = letters.size();
  bool has_o = false;
  for (std::size_t i = 0; i < n; ++i) {
    Letter cur = letters[i], next = letters[(i + 1) % n];
    if (cur == Letter::AB && next != Letter::O) throw ABNotFollowedByO();
    if (next == Letter::O && cur != Letter::AB && cur != Letter::O)
      throw OIllegallyPreceded();
    has_o |= cur == Letter::O;
  }
  if (!has_o) {
    bool halves_equal = std::equal(letters.begin(), letters.begin() + f,
                                   letters.begin() + f);
    if (halves_equal) throw ConditionThreeFails();
  }
  return Gene{f, std::move(letters)};
}

std::string render_gene(const Gene& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    if (i == g.f) out << '/';
    else if (i > 0) out << ',';
    out << to_string(g.x[i]);
  }
  return out.str();
}

Gene parse_gene(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("gene text needs a '/' between the two rows");
  auto parse_row = [](const std::string& row) {
    std::vector<Letter> out;
    std::string token;
    std::istringstream in(row);
    while (std::getline(in, token, ',')) {
      token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
      if (token.empty()) throw std::invalid_argument("empty letter in gene text");
      out.push_back(letter_from_string(token));
    }
    return out;
  };
  std::vector<Letter> top = parse_row(text.substr(0, slash));
  std::vector<Letter> bottom = parse_row(text.substr(slash + 1));
  if (top.empty() || top.size() != bottom.size())
    throw std::invalid_argument("gene rows must be non-empty and equally long");
  std::uint32_t f = static_cast<std::uint32_t>(top.size());
  top.insert(top.end(), bottom.begin(), bottom.end());
  return validate_gene(f, std::move(top));
}

namespace {

// Fills positions other than the seeds using the local rules: a digit >= 2 is
// O; a digit 1 is O before O and B otherwise; a digit 0 is AB before O and A
// otherwise.  `known` marks positions already decided (all of them O).
Gene sweep_from_seed(std::uint32_t f, const DigitVector& v, std::size_t seed) {
  const std::size_t n = v.size();
  std::vector<Letter> x(n, Letter::A);
  x[seed] = Letter::O;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t i = (seed + n - step) % n;
    bool next_o = x[(i + 1) % n] == Letter::O;
    if (v[i] >= 2) x[i] = Letter::O;
    else if (v[i] == 1) x[i] = next_o ? Letter::O : Letter::B;
    else x[i] = next_o ? Letter::AB : Letter::A;
  }
  return Gene{f, std::move(x)};
}

}  // namespace

Gene gene_of_digits(std::uint32_t p, const DigitVector& v) {
  if (v.size() % 2 != 0 || v.empty())
    throw std::invalid_argument("digit string must have even positive length");
  for (Digit d : v)
    if (d >= p) throw std::invalid_argument("digit out of range");
  std::uint32_t f = static_cast<std::uint32_t>(v.size() / 2);
  auto big = std::find_if(v.begin(), v.end(), [](Digit d) { return d >= 2; });
  if (big == v.end()) {
    // All digits 0/1.  The all-ones string is every rotation's threshold
    // case and reads as all-O; anything else is degenerate with letters A/B.
    if (std::all_of(v.begin(), v.end(), [](Digit d) { return d == 1; }))
      return Gene{f, std::vector<Letter>(v.size(), Letter::O)};
    std::vector<Letter> x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      x[i] = v[i] ? Letter::B : Letter::A;
    return validate_gene(f, std::move(x));
  }
  Gene g = sweep_from_seed(f, v, static_cast<std::size_t>(big - v.begin()));
  assert((validate_gene(f, g.x), true));
  return g;
}

Gene gene_of_triple(const CoherentTriple& t) {
  return gene_of_digits(t.p, v_sequence(t));
}

Gene gene_of_triple_oracle(const CoherentTriple& t) {
  DigitVector v = v_sequence(t);
  const std::size_t n = v.size();
  // Position i is O iff the rotation of v starting at i is >= the all-ones
  // string; equal lengths make lexicographic order the value order.
  std::vector<bool> is_o(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool ge = true;  // all digits equal so far
    for (std::size_t j = 0; j < n; ++j) {
      Digit d = v[(i + j) % n];
      if (d > 1) { ge = true; break; }
      if (d < 1) { ge = false; break; }
    }
    is_o[i] = ge;
  }
  std::vector<Letter> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_o[i]) {
      x[i] = Letter::O;
      continue;
    }
    bool next_o = is_o[(i + 1) % n];
    if (v[i] == 0) x[i] = next_o ? Letter::AB : Letter::A;
    else if (v[i] == 1 && !next_o) x[i] = Letter::B;
    else
      throw std::logic_error("threshold classification contradicts local rules");
  }
  return validate_gene(t.f, std::move(x));
}

bool is_degenerate(const Gene& g) {
  return std::none_of(g.x.begin(), g.x.end(),
                      [](Letter l) { return l == Letter::O; });
}

bool is_viable(const Gene& g) {
  for (std::uint32_t i = 0; i < g.f; ++i)
    if (g.x[i] == Letter::O && g.x[i + g.f] == Letter::O) return false;
  return true;
}

std::vector<Fragment> fragments(const Gene& g) {
  if (is_degenerate(g)) throw DegenerateGene();
  if (!is_viable(g)) throw NotViable();
  const std::uint32_t f = g.f;
  std::vector<std::uint32_t> cuts;
  for (std::uint32_t c = 0; c < f; ++c)
    if (g.x[c] == Letter::O || g.x[c + f] == Letter::O) cuts.push_back(c);
  std::vector<Fragment> out;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    std::uint32_t start = cuts[k];
    std::uint32_t end = k + 1 < cuts.size() ? cuts[k + 1] : cuts[0] + f;
    Fragment fr;
    fr.anchor = start;
    for (std::uint32_t j = 0; j < end - start; ++j) {
      fr.top.push_back(g.at(start + j));
      fr.bottom.push_back(g.at(start + j + f));
    }
    out.push_back(std::move(fr));
  }
  return out;
}

namespace {

// Majority letter of one column; Letter::O encodes a tie.
Letter column_majority(Letter top, Letter bottom) {
  int a = (top == Letter::A) + (top == Letter::AB) + (bottom == Letter::A) +
          (bottom == Letter::AB);
  int b = (top == Letter::B) + (top == Letter::AB) + (bottom == Letter::B) +
          (bottom == Letter::AB);
  if (a > b) return Letter::A;
  if (b > a) return Letter::B;
  return Letter::O;
}

}  // namespace

std::vector<Letter> dominant_letters(const Gene& g) {
  const std::uint32_t f = g.f;
  std::vector<Letter> dom(f, Letter::O);
  std::uint32_t seed = f;
  for (std::uint32_t i = 0; i < f; ++i)
    if (column_majority(g.x[i], g.x[i + f]) != Letter::O) { seed = i; break; }
  if (seed == f) throw CircularDominance();
  for (std::uint32_t step = 0; step < f; ++step) {
    std::uint32_t i = (seed + f - step) % f;
    Letter own = column_majority(g.x[i], g.x[i + f]);
    dom[i] = own != Letter::O ? own : dom[(i + 1) % f];
  }
  return dom;
}

std::vector<Letter> fragment_dominants(const Fragment& fr) {
  const std::size_t l = fr.size();
  std::vector<Letter> dom(l, Letter::O);
  for (std::size_t step = 0; step < l; ++step) {
    std::size_t j = l - 1 - step;
    Letter own = column_majority(fr.top[j], fr.bottom[j]);
    if (own == Letter::O && j + 1 < l) own = dom[j + 1];
    if (own == Letter::O && j + 1 == l) throw CircularDominance();
    dom[j] = own;
  }
  return dom;
}

std::optional<CoherentTriple> sample_triple(const Gene& g, std::uint32_t p,
                                            std::mt19937_64& rng) {
  if (p == 2 || p == 3) throw UnsupportedPrime();
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const std::uint32_t f = g.f;
  const std::size_t n = g.x.size();
  DigitVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    switch (g.x[i]) {
      case Letter::A:
      case Letter::AB: v[i] = 0; break;
      case Letter::B: v[i] = 1; break;
      case Letter::O: {
        std::uint32_t lo = g.at(i + 1) == Letter::O ? 1 : 2;
        v[i] = std::uniform_int_distribution<std::uint32_t>(lo, p - 1)(rng);
        break;
      }
    }
  }
  // The digit string must be a canonical residue and not divisible by q+1.
  if (std::all_of(v.begin(), v.end(), [p](Digit d) { return d == p - 1; }))
    return std::nullopt;
  if (std::equal(v.begin(), v.begin() + f, v.begin() + f)) return std::nullopt;
  DigitVector gp(f);
  for (std::uint32_t i = 0; i < f; ++i)
    gp[i] = std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng);
  if (std::all_of(gp.begin(), gp.end(), [p](Digit d) { return d == p - 1; }))
    return std::nullopt;

  Modulus big{p, f, Ring::Q2M1}, small{p, f, Ring::QM1};
  Residue rv = digits_to_residue(big, v);
  Residue doubled{big, gp};
  doubled.d.insert(doubled.d.end(), gp.begin(), gp.end());
  Residue h = res_add(rv, doubled);
  Residue gamma_prime = digits_to_residue(small, gp);
  Residue gamma =
      res_sub(res_sub(fold_qm1(h), gamma_prime), res_all_ones(p, f));
  return make_triple(p, f, h.d, gamma.d, gamma_prime.d);
}

std::optional<CoherentTriple> sample_triple(const Gene& g, std::uint32_t p,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_triple(g, p, rng);
}

}  // namespace gw
