#include "gw/enriched.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "gw/basep.hpp"
#include "gw/errors.hpp"

namespace gw {

namespace {

using std::size_t;

// Column states, shared with the combinatorial recursion: a column of an
// enriched weight is (top, bottom) and never (a, a).
constexpr int kBB = 0;
constexpr int kAB = 1;
constexpr int kBA = 2;

constexpr std::array<std::array<Cls, 2>, 3> kStateCols = {{
    {Cls::b, Cls::b},
    {Cls::a, Cls::b},
    {Cls::b, Cls::a},
}};

int swapped_state(int s) {
  if (s == kAB) return kBA;
  if (s == kBA) return kAB;
  return kBB;
}

// Branch conditions of the fragmentary recursion at step i >= 1, phrased on
// letter classes exactly as in the combinatorial chain.
struct StepCond {
  bool bb;  // classes of column i-1 agree  -> (b,b) continues from ab/ba
  bool ab;  // top classes of columns i, i-1 agree -> (a,b) continues from ab
  bool ba;  // bottom classes agree -> (b,a) continues from ba
};

StepCond fragment_cond(const Fragment& fr, size_t i) {
  return StepCond{
      letter_class(fr.top[i - 1]) == letter_class(fr.bottom[i - 1]),
      letter_class(fr.top[i]) == letter_class(fr.top[i - 1]),
      letter_class(fr.bottom[i]) == letter_class(fr.bottom[i - 1]),
  };
}

// Whether state `cur` at column i may follow state `prev` at column i-1.
bool step_ok(int prev, int cur, const StepCond& c) {
  switch (cur) {
    case kBB:
      return c.bb ? (prev == kAB || prev == kBA) : prev == kBB;
    case kAB:
      return c.ab ? prev == kAB : (prev == kBA || prev == kBB);
    default:
      return c.ba ? prev == kBA : (prev == kAB || prev == kBB);
  }
}

bool base_allowed(const Fragment& fr, int state) {
  switch (state) {
    case kBB:
      return !(fr.size() == 1 && ((fr.top[0] == Letter::A || fr.top[0] == Letter::B) ||
                                  (fr.bottom[0] == Letter::A || fr.bottom[0] == Letter::B)));
    case kAB:
      return fr.bottom[0] != Letter::O;
    default:
      return fr.top[0] != Letter::O;
  }
}

bool terminal_allowed(const Fragment& fr, int state) {
  const size_t l = fr.size();
  if (fr.bottom[l - 1] == Letter::AB) return state == kBB || state == kAB;
  if (fr.top[l - 1] == Letter::AB) return state == kBB || state == kBA;
  return true;  // single-column fragments have no AB end
}

void check_fragment(const Fragment& fr) {
  const size_t l = fr.size();
  if (l == 0 || fr.bottom.size() != l)
    throw std::invalid_argument("fragment rows must be nonempty and equal-length");
}

// All state paths through one fragment.  Distinct paths differ as sequences,
// so plain concatenation of the branch sources needs no deduplication.
std::vector<std::vector<int>> fragment_state_paths(const Fragment& fr) {
  check_fragment(fr);
  const size_t l = fr.size();
  std::array<std::vector<std::vector<int>>, 3> cur;
  for (int s : {kBB, kAB, kBA})
    if (base_allowed(fr, s)) cur[s].push_back({s});
  for (size_t i = 1; i < l; ++i) {
    const StepCond c = fragment_cond(fr, i);
    std::array<std::vector<std::vector<int>>, 3> next;
    for (int s : {kBB, kAB, kBA}) {
      for (int prev : {kBB, kAB, kBA}) {
        if (!step_ok(prev, s, c)) continue;
        for (const auto& path : cur[prev]) {
          next[s].push_back(path);
          next[s].back().push_back(s);
        }
      }
    }
    cur = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (int s : {kBB, kAB, kBA})
    if (terminal_allowed(fr, s))
      out.insert(out.end(), cur[s].begin(), cur[s].end());
  return out;
}

FragmentaryEnrichedWeight cols_of_path(const std::vector<int>& path) {
  FragmentaryEnrichedWeight w;
  w.cols.reserve(path.size());
  for (int s : path) w.cols.push_back(kStateCols[static_cast<size_t>(s)]);
  return w;
}

// Degenerate genes: transition legality between consecutive columns, phrased
// as the interior two-row conditions.  Indices run cyclically through the
// whole 2f-word: at i = 0 the previous column is column f-1 with its rows
// swapped (letters X_{2f-1} on top, X_{f-1} below), matching the swapped
// state the caller passes in.
bool degenerate_step_ok(const Gene& g, size_t i, int prev, int cur) {
  const size_t f = g.f;
  const size_t n = 2 * f;
  const size_t ptop = (i + n - 1) % n;
  const size_t pbot = (i + f - 1) % n;
  const StepCond c{
      letter_class(g.at(ptop)) == letter_class(g.at(pbot)),
      letter_class(g.at(i)) == letter_class(g.at(ptop)),
      letter_class(g.at(i + f)) == letter_class(g.at(pbot)),
  };
  return step_ok(prev, cur, c);
}

// All closed state cycles of a degenerate gene: choose column f-1, walk the
// columns with column -1 = swap(column f-1), and keep paths that return to
// the seed.  An optional per-column bit constrains delta(state).
void degenerate_paths(const Gene& g, const CombinatorialWeight* bits,
                      const std::function<bool(const std::vector<int>&)>& emit) {
  const size_t f = g.f;
  std::vector<int> path(f);
  for (int seed : {kBB, kAB, kBA}) {
    if (bits && ((*bits)[f - 1] == 1) != (seed == kBB)) continue;
    bool stop = false;
    auto rec = [&](auto&& self, size_t i, int prev) -> void {
      if (stop) return;
      if (i == f - 1) {
        if (degenerate_step_ok(g, i, prev, seed)) {
          path[i] = seed;
          if (!emit(path)) stop = true;
        }
        return;
      }
      for (int s : {kBB, kAB, kBA}) {
        if (bits && ((*bits)[i] == 1) != (s == kBB)) continue;
        if (!degenerate_step_ok(g, i, prev, s)) continue;
        path[i] = s;
        self(self, i + 1, s);
        if (stop) return;
      }
    };
    if (f == 1) {
      // Single column: the step condition closes column 0 against its own swap.
      if (degenerate_step_ok(g, 0, swapped_state(seed), seed)) {
        path[0] = seed;
        if (!emit(path)) return;
      }
      continue;
    }
    rec(rec, 0, swapped_state(seed));
    if (stop) return;
  }
}

EnrichedWeight word_of_degenerate_path(const Gene& g, const std::vector<int>& path) {
  const size_t f = g.f;
  EnrichedWeight w(2 * f, Cls::b);
  for (size_t i = 0; i < f; ++i) {
    const auto& col = kStateCols[static_cast<size_t>(path[i])];
    w[i] = col[0];
    w[i + f] = col[1];
  }
  return w;
}

}  // namespace

Cls letter_class(Letter l) {
  return (l == Letter::A || l == Letter::AB) ? Cls::a : Cls::b;
}

char to_char(Cls c) { return c == Cls::a ? 'a' : 'b'; }

PeriodicIntSequence mutate(const PeriodicIntSequence& sigma,
                           const NumericalMask& chi, std::uint32_t p) {
  const size_t n = sigma.size();
  if (n == 0 || chi.size() != n)
    throw std::invalid_argument("mutation needs equal-length nonempty sequences");
  PeriodicIntSequence out(n);
  for (size_t i = 0; i < n; ++i)
    out[i] = sigma[i] - chi[i] + static_cast<std::int64_t>(p) * chi[(i + n - 1) % n];
  return out;
}

bool is_active(const PeriodicIntSequence& sigma, std::uint32_t p) {
  const size_t n = sigma.size();
  if (n == 0 || n % 2 != 0) return false;
  const size_t f = n / 2;
  const std::int64_t pi = static_cast<std::int64_t>(p);
  for (size_t i = 0; i < f; ++i) {
    const std::int64_t x = sigma[i];
    const std::int64_t y = sigma[i + f];
    if (x < 0 || x > pi || y < 0 || y > pi) return false;
    if (x != 0 && x != pi && y != 0 && y != pi) return false;
    if (x == y) return false;
  }
  return true;
}

bool is_compatible(const PeriodicIntSequence& sigma, const CoherentTriple& t) {
  const size_t n = 2 * static_cast<size_t>(t.f);
  if (sigma.size() != n)
    throw std::invalid_argument("sequence length must be 2f");
  const Modulus mod{t.p, t.f, Ring::Q2M1};
  const cpp_int m = mod.value();
  cpp_int acc = 0;
  for (size_t i = 0; i < n; ++i) acc = acc * t.p + sigma[i];
  acc %= m;
  if (acc < 0) acc += m;
  const cpp_int q = mod.q();
  cpp_int target = (to_int(t.h) - (q + 1) * to_int(t.gamma_prime)) % m;
  if (target < 0) target += m;
  return acc == target;
}

NumericalMask mask_of_enriched(const Gene& g, const EnrichedWeight& w_hat) {
  const size_t n = 2 * static_cast<size_t>(g.f);
  if (w_hat.size() != n)
    throw std::invalid_argument("enriched weight length must be 2f");
  NumericalMask chi(n);
  for (size_t i = 0; i < n; ++i)
    chi[i] = (w_hat[i] == letter_class(g.x[i])) ? 1 : 0;
  return chi;
}

PeriodicIntSequence sigma_of_enriched(const CoherentTriple& t,
                                      const EnrichedWeight& w_hat) {
  const Gene g = gene_of_triple(t);
  const DigitVector v = v_sequence(t);
  PeriodicIntSequence base(v.size());
  for (size_t i = 0; i < v.size(); ++i) base[i] = v[i];
  return mutate(base, mask_of_enriched(g, w_hat), t.p);
}

bool is_active_enriched(const CoherentTriple& t, const EnrichedWeight& w_hat) {
  return is_active(sigma_of_enriched(t, w_hat), t.p);
}

std::vector<FragmentaryEnrichedWeight> fragment_enriched(const Fragment& fr) {
  std::vector<FragmentaryEnrichedWeight> out;
  for (const auto& path : fragment_state_paths(fr)) out.push_back(cols_of_path(path));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EnrichedWeight> enumerate_enriched(const CoherentTriple& t) {
  const Gene g = gene_of_triple(t);
  const size_t f = g.f;
  std::vector<EnrichedWeight> out;
  if (!is_viable(g)) return out;

  if (is_degenerate(g)) {
    degenerate_paths(g, nullptr, [&](const std::vector<int>& path) {
      out.push_back(word_of_degenerate_path(g, path));
      return true;
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::vector<Fragment> frs = fragments(g);
  std::vector<std::vector<FragmentaryEnrichedWeight>> choices;
  choices.reserve(frs.size());
  for (const Fragment& fr : frs) {
    choices.push_back(fragment_enriched(fr));
    if (choices.back().empty()) return out;
  }

  EnrichedWeight word(2 * f, Cls::b);
  auto place = [&](auto&& self, size_t k) -> void {
    if (k == frs.size()) {
      out.push_back(word);
      return;
    }
    const Fragment& fr = frs[k];
    for (const FragmentaryEnrichedWeight& fw : choices[k]) {
      for (size_t j = 0; j < fw.cols.size(); ++j) {
        const size_t top = (fr.anchor + j) % (2 * f);
        word[top] = fw.cols[j][0];
        word[(top + f) % (2 * f)] = fw.cols[j][1];
      }
      self(self, k + 1);
    }
  };
  place(place, 0);
  std::sort(out.begin(), out.end());
  return out;
}

CombinatorialWeight delta(const EnrichedWeight& w_hat) {
  const size_t n = w_hat.size();
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("enriched weight length must be even");
  const size_t f = n / 2;
  CombinatorialWeight w(f);
  for (size_t i = 0; i < f; ++i)
    w[i] = (w_hat[i] == w_hat[i + f]) ? 1 : 0;
  return w;
}

EnrichedWeight lift_weight(const Gene& g, const CombinatorialWeight& w) {
  if (!is_weight(g, w)) throw NotAWeight();
  const size_t f = g.f;

  if (is_degenerate(g)) {
    EnrichedWeight out;
    degenerate_paths(g, &w, [&](const std::vector<int>& path) {
      out = word_of_degenerate_path(g, path);
      return false;  // first hit suffices
    });
    if (out.empty()) throw NotAWeight();  // unreachable for genuine weights
    return out;
  }

  EnrichedWeight word(2 * f, Cls::b);
  for (const Fragment& fr : fragments(g)) {
    const size_t l = fr.size();
    // Per-column target states: bit 1 forces (b,b), bit 0 allows (a,b)/(b,a).
    std::vector<std::array<bool, 3>> reach(l, {false, false, false});
    auto allowed = [&](size_t j, int s) {
      const std::uint8_t bit = w[(fr.anchor + j) % f];
      return (bit == 1) == (s == kBB);
    };
    for (int s : {kBB, kAB, kBA})
      reach[0][static_cast<size_t>(s)] = base_allowed(fr, s) && allowed(0, s);
    for (size_t j = 1; j < l; ++j) {
      const StepCond c = fragment_cond(fr, j);
      for (int s : {kBB, kAB, kBA}) {
        if (!allowed(j, s)) continue;
        for (int prev : {kBB, kAB, kBA})
          if (reach[j - 1][static_cast<size_t>(prev)] && step_ok(prev, s, c))
            reach[j][static_cast<size_t>(s)] = true;
      }
    }
    int state = -1;
    for (int s : {kBB, kAB, kBA})
      if (reach[l - 1][static_cast<size_t>(s)] && terminal_allowed(fr, s)) {
        state = s;
        break;
      }
    if (state < 0) throw NotAWeight();  // unreachable for genuine weights
    std::vector<int> path(l);
    path[l - 1] = state;
    for (size_t j = l - 1; j > 0; --j) {
      const StepCond c = fragment_cond(fr, j);
      for (int prev : {kBB, kAB, kBA})
        if (reach[j - 1][static_cast<size_t>(prev)] && step_ok(prev, path[j], c)) {
          path[j - 1] = prev;
          break;
        }
    }
    for (size_t j = 0; j < l; ++j) {
      const auto& col = kStateCols[static_cast<size_t>(path[j])];
      const size_t top = (fr.anchor + j) % (2 * f);
      word[top] = col[0];
      word[(top + f) % (2 * f)] = col[1];
    }
  }
  return word;
}

SerreWeight serre_of_sigma(const CoherentTriple& t,
                           const PeriodicIntSequence& sigma) {
  if (sigma.size() != 2 * static_cast<size_t>(t.f))
    throw std::invalid_argument("sequence length must be 2f");
  if (!is_active(sigma, t.p))
    throw std::invalid_argument("sequence is not active");
  const size_t f = t.f;
  const std::int64_t pi = t.p;

  std::vector<std::uint32_t> r(f);
  std::vector<int> eps(f);
  for (size_t i = 0; i < f; ++i) {
    const std::int64_t x = sigma[i];
    const std::int64_t y = sigma[i + f];
    std::int64_t ri;
    if (y == 0)
      ri = x - 1;
    else if (y == pi)
      ri = pi - 1 - x;
    else if (x == 0)
      ri = y - 1;
    else  // x == p
      ri = pi - 1 - y;
    r[f - 1 - i] = static_cast<std::uint32_t>(ri);
    eps[f - 1 - i] = (x < y) ? 0 : 1;
  }

  const Modulus qm1{t.p, t.f, Ring::QM1};
  const cpp_int q = qm1.q();
  cpp_int signed_sum = 0;   // sum (-1)^{eps_i} (1+r_i) p^i
  cpp_int twist_sum = 0;    // sum eps_i (1+r_i) p^i
  cpp_int pk = 1;
  for (size_t i = 0; i < f; ++i) {
    const cpp_int term = pk * (1 + r[i]);
    if (eps[i] == 0)
      signed_sum += term;
    else {
      signed_sum -= term;
      twist_sum += term;
    }
    pk *= t.p;
  }
  cpp_int num = to_int(t.h) - signed_sum;
  if (num % (q + 1) != 0) throw NonIntegralS();
  cpp_int s = (num / (q + 1)) - twist_sum;
  const cpp_int m = qm1.value();
  s %= m;
  if (s < 0) s += m;
  return SerreWeight{s, std::move(r)};
}

}  // namespace gw
