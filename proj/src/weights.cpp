#include "gw/weights.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace gw {

namespace {

constexpr int kBB = 0, kAB = 1, kBA = 2;

// The two-class projection behind the similarity relation: {A, AB} / {B, O}.
bool cls(Letter l) { return l == Letter::B || l == Letter::O; }

// The three letter conditions steering one step of the weight recursions.
struct StepCond {
  bool bb;  // previous column's two letters similar
  bool ab;  // top letter similar to previous top
  bool ba;  // bottom letter similar to previous bottom
};

StepCond fragment_cond(const Fragment& fr, std::size_t i) {
  return {cls(fr.top[i - 1]) == cls(fr.bottom[i - 1]),
          cls(fr.top[i]) == cls(fr.top[i - 1]),
          cls(fr.bottom[i]) == cls(fr.bottom[i - 1])};
}

// Degenerate genes compare letters strictly and cyclically.
StepCond degenerate_cond(const Gene& g, std::size_t i) {
  const std::size_t n = g.x.size(), f = g.f;
  auto at = [&](std::size_t k) { return g.x[k % n]; };
  std::size_t prev = i + n - 1;
  return {at(prev) == at(prev + f), at(i) == at(prev), at(i + f) == at(prev + f)};
}

void check_fragment(const Fragment& fr) {
  const std::size_t l = fr.size();
  if (l == 0 || fr.bottom.size() != l)
    throw std::invalid_argument("fragment rows must be non-empty and equal");
  if ((fr.top[0] == Letter::O) == (fr.bottom[0] == Letter::O))
    throw std::invalid_argument("fragment must start with exactly one O");
  for (std::size_t j = 1; j < l; ++j)
    if (fr.top[j] == Letter::O || fr.bottom[j] == Letter::O)
      throw std::invalid_argument("fragment has O past its first column");
  for (std::size_t j = 0; j + 1 < l; ++j)
    if ((j > 0 && fr.top[j] == Letter::AB) || (j > 0 && fr.bottom[j] == Letter::AB))
      throw std::invalid_argument("fragment has AB before its last column");
  if (l >= 2 && (fr.top[l - 1] == Letter::AB) == (fr.bottom[l - 1] == Letter::AB))
    throw std::invalid_argument("fragment must end with exactly one AB");
  if (l >= 2 && (fr.top[0] == Letter::AB || fr.bottom[0] == Letter::AB))
    throw std::invalid_argument("fragment of length >= 2 cannot start with AB");
}

// ---------------------------------------------------------------------------
// Set-valued chain.  Lists are kept sorted; appending an equal bit to every
// element preserves the order, so unions are linear merges.

using WeightList = std::vector<CombinatorialWeight>;

WeightList merge_union(const WeightList& a, const WeightList& b) {
  WeightList out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void append_bit(WeightList& w, std::uint8_t bit) {
  for (auto& t : w) t.push_back(bit);
}

struct SetTriple {
  WeightList s[3];
};

SetTriple step_sets(const SetTriple& cur, const StepCond& c) {
  SetTriple next;
  next.s[kBB] = c.bb ? merge_union(cur.s[kAB], cur.s[kBA]) : cur.s[kBB];
  next.s[kAB] = c.ab ? cur.s[kAB] : merge_union(cur.s[kBA], cur.s[kBB]);
  next.s[kBA] = c.ba ? cur.s[kBA] : merge_union(cur.s[kAB], cur.s[kBB]);
  append_bit(next.s[kBB], 1);
  append_bit(next.s[kAB], 0);
  append_bit(next.s[kBA], 0);
  return next;
}

// ---------------------------------------------------------------------------
// Count-valued chain.  The union behind the (b,b) state is of two nested
// sets, so its cardinality is a max; the other unions are disjoint.

struct CountTriple {
  cpp_int c[3];
};

CountTriple step_counts(const CountTriple& cur, const StepCond& c) {
  CountTriple next;
  next.c[kBB] = c.bb ? std::max(cur.c[kAB], cur.c[kBA]) : cur.c[kBB];
  next.c[kAB] = c.ab ? cur.c[kAB] : cur.c[kBA] + cur.c[kBB];
  next.c[kBA] = c.ba ? cur.c[kBA] : cur.c[kAB] + cur.c[kBB];
  return next;
}

// ---------------------------------------------------------------------------
// Feasibility chain under partial bit constraints (-1 free, 0, 1): the
// boolean image of the count chain, with forced bits zeroing the states whose
// appended coordinate disagrees.

struct BoolTriple {
  bool b[3] = {false, false, false};
};

BoolTriple step_bools(const BoolTriple& cur, const StepCond& c, int forced) {
  BoolTriple next;
  next.b[kBB] = c.bb ? (cur.b[kAB] || cur.b[kBA]) : cur.b[kBB];
  next.b[kAB] = c.ab ? cur.b[kAB] : (cur.b[kBA] || cur.b[kBB]);
  next.b[kBA] = c.ba ? cur.b[kBA] : (cur.b[kAB] || cur.b[kBB]);
  if (forced == 1) next.b[kAB] = next.b[kBA] = false;
  if (forced == 0) next.b[kBB] = false;
  return next;
}

// ---------------------------------------------------------------------------
// Fragment chains: base cases and terminal selection.

bool base_bb_empty(const Fragment& fr) {
  auto is_plain = [](Letter l) { return l == Letter::A || l == Letter::B; };
  return fr.size() == 1 && (is_plain(fr.top[0]) || is_plain(fr.bottom[0]));
}

SetTriple fragment_base_sets(const Fragment& fr) {
  SetTriple t;
  if (!base_bb_empty(fr)) t.s[kBB] = {CombinatorialWeight{1}};
  if (fr.bottom[0] != Letter::O) t.s[kAB] = {CombinatorialWeight{0}};
  if (fr.top[0] != Letter::O) t.s[kBA] = {CombinatorialWeight{0}};
  return t;
}

enum class Terminal { BottomAB, TopAB, AllThree };

Terminal terminal_kind(const Fragment& fr) {
  if (fr.bottom.back() == Letter::AB) return Terminal::BottomAB;
  if (fr.top.back() == Letter::AB) return Terminal::TopAB;
  assert(fr.size() == 1);
  return Terminal::AllThree;
}

bool fragment_feasible(const Fragment& fr, const std::vector<int>& forced) {
  BoolTriple t;
  t.b[kBB] = !base_bb_empty(fr);
  t.b[kAB] = fr.bottom[0] != Letter::O;
  t.b[kBA] = fr.top[0] != Letter::O;
  if (forced[0] == 1) t.b[kAB] = t.b[kBA] = false;
  if (forced[0] == 0) t.b[kBB] = false;
  for (std::size_t i = 1; i < fr.size(); ++i)
    t = step_bools(t, fragment_cond(fr, i), forced[i]);
  switch (terminal_kind(fr)) {
    case Terminal::BottomAB: return t.b[kAB] || t.b[kBB];
    case Terminal::TopAB: return t.b[kBA] || t.b[kBB];
    case Terminal::AllThree: return t.b[kBB] || t.b[kAB] || t.b[kBA];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Degenerate chains: nine (start, target) sets with a cyclic wrap.

struct DegenerateSets {
  SetTriple start[3];  // indexed by the state at step -1
};

DegenerateSets degenerate_sets_upto(const Gene& g, int upto) {
  DegenerateSets d;
  for (int s = 0; s < 3; ++s) d.start[s].s[s] = {CombinatorialWeight{}};
  for (int i = 0; i <= upto; ++i) {
    StepCond c = degenerate_cond(g, static_cast<std::size_t>(i));
    for (int s = 0; s < 3; ++s) d.start[s] = step_sets(d.start[s], c);
  }
  return d;
}

bool degenerate_feasible(const Gene& g, const std::vector<int>& forced) {
  BoolTriple t[3];
  for (int s = 0; s < 3; ++s) t[s].b[s] = true;
  for (std::size_t i = 0; i < g.f; ++i) {
    StepCond c = degenerate_cond(g, i);
    for (int s = 0; s < 3; ++s) t[s] = step_bools(t[s], c, forced[i]);
  }
  return t[kBB].b[kBB] || t[kAB].b[kBA] || t[kBA].b[kAB];
}

// Counting needs five union sequences on top of the nine per-start counts:
// u[x][y] = Card(W^{ab-start, x} u W^{ba-start, y}) for x, y in {ab, ba}
// (indices 0 = ab, 1 = ba) and ubb = Card(W^{ab-start, bb} u W^{ba-start, bb}).
// Their steps split every union into the tuples ending in 1 (the bb parts)
// and those ending in 0, which never meet.
cpp_int degenerate_count(const Gene& g) {
  CountTriple c[3];
  for (int s = 0; s < 3; ++s) c[s].c[s] = 1;
  cpp_int u[2][2] = {{1, 1}, {0, 1}};
  cpp_int ubb = 0;
  for (std::size_t i = 0; i < g.f; ++i) {
    StepCond cond = degenerate_cond(g, i);
    cpp_int nu[2][2];
    if (cond.ab && cond.ba) {
      nu[0][0] = u[0][0], nu[0][1] = u[0][1], nu[1][0] = u[1][0], nu[1][1] = u[1][1];
    } else if (cond.ab) {  // ab targets carry, ba targets take (ab u bb)
      nu[0][0] = u[0][0];
      nu[0][1] = u[0][0] + c[kBA].c[kBB];
      nu[1][0] = u[0][0] + c[kAB].c[kBB];
      nu[1][1] = u[0][0] + ubb;
    } else if (cond.ba) {  // ba targets carry, ab targets take (ba u bb)
      nu[1][1] = u[1][1];
      nu[1][0] = u[1][1] + c[kBA].c[kBB];
      nu[0][1] = u[1][1] + c[kAB].c[kBB];
      nu[0][0] = u[1][1] + ubb;
    } else {  // both targets swap and absorb bb
      nu[0][0] = u[1][1] + ubb;
      nu[0][1] = u[1][0] + ubb;
      nu[1][0] = u[0][1] + ubb;
      nu[1][1] = u[0][0] + ubb;
    }
    cpp_int nubb = cond.bb
                       ? std::max({u[0][0], u[0][1], u[1][0], u[1][1]})
                       : ubb;
    for (int s = 0; s < 3; ++s) c[s] = step_counts(c[s], cond);
    u[0][0] = nu[0][0], u[0][1] = nu[0][1], u[1][0] = nu[1][0], u[1][1] = nu[1][1];
    ubb = nubb;
  }
  return c[kBB].c[kBB] + u[1][0];
}

// ---------------------------------------------------------------------------
// Assembly over a viable non-degenerate gene: depth-first search in global
// column order, pruning through per-fragment feasibility.  Output is in
// lexicographic order by construction.

struct Owner {
  std::size_t fragment;
  std::size_t coord;
};

void visit_nondegenerate(const Gene& g,
                         const std::function<bool(const CombinatorialWeight&)>& visit) {
  std::vector<Fragment> frs = fragments(g);
  const std::uint32_t f = g.f;
  std::vector<Owner> owner(f);
  for (std::size_t k = 0; k < frs.size(); ++k)
    for (std::size_t j = 0; j < frs[k].size(); ++j)
      owner[(frs[k].anchor + j) % f] = Owner{k, j};
  std::vector<std::vector<int>> forced(frs.size());
  for (std::size_t k = 0; k < frs.size(); ++k)
    forced[k].assign(frs[k].size(), -1);
  for (std::size_t k = 0; k < frs.size(); ++k)
    if (!fragment_feasible(frs[k], forced[k])) return;

  CombinatorialWeight w(f, 0);
  bool stop = false;
  auto rec = [&](auto&& self, std::uint32_t pos) -> void {
    if (stop) return;
    if (pos == f) {
      if (!visit(w)) stop = true;
      return;
    }
    auto [k, j] = owner[pos];
    for (int bit = 0; bit <= 1 && !stop; ++bit) {
      forced[k][j] = bit;
      if (fragment_feasible(frs[k], forced[k])) {
        w[pos] = static_cast<std::uint8_t>(bit);
        self(self, pos + 1);
      }
    }
    forced[k][j] = -1;
  };
  rec(rec, 0);
}

void visit_degenerate(const Gene& g,
                      const std::function<bool(const CombinatorialWeight&)>& visit) {
  const std::uint32_t f = g.f;
  std::vector<int> forced(f, -1);
  CombinatorialWeight w(f, 0);
  bool stop = false;
  auto rec = [&](auto&& self, std::uint32_t pos) -> void {
    if (stop) return;
    if (pos == f) {
      if (!visit(w)) stop = true;
      return;
    }
    for (int bit = 0; bit <= 1 && !stop; ++bit) {
      forced[pos] = bit;
      if (degenerate_feasible(g, forced)) {
        w[pos] = static_cast<std::uint8_t>(bit);
        self(self, pos + 1);
      }
    }
    forced[pos] = -1;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<CombinatorialWeight> fragment_weights(const Fragment& fr) {
  check_fragment(fr);
  SetTriple t = fragment_base_sets(fr);
  for (std::size_t i = 1; i < fr.size(); ++i)
    t = step_sets(t, fragment_cond(fr, i));
  switch (terminal_kind(fr)) {
    case Terminal::BottomAB: return merge_union(t.s[kAB], t.s[kBB]);
    case Terminal::TopAB: return merge_union(t.s[kBA], t.s[kBB]);
    case Terminal::AllThree:
      return merge_union(t.s[kBB], merge_union(t.s[kAB], t.s[kBA]));
  }
  return {};
}

cpp_int count_fragment_weights(const Fragment& fr) {
  check_fragment(fr);
  CountTriple t;
  t.c[kBB] = base_bb_empty(fr) ? 0 : 1;
  t.c[kAB] = fr.bottom[0] != Letter::O ? 1 : 0;
  t.c[kBA] = fr.top[0] != Letter::O ? 1 : 0;
  for (std::size_t i = 1; i < fr.size(); ++i)
    t = step_counts(t, fragment_cond(fr, i));
  switch (terminal_kind(fr)) {
    case Terminal::BottomAB: return t.c[kAB] + t.c[kBB];
    case Terminal::TopAB: return t.c[kBA] + t.c[kBB];
    case Terminal::AllThree: return t.c[kBB] + t.c[kAB] + t.c[kBA];
  }
  return 0;
}

void visit_gene_weights(const Gene& g,
                        const std::function<bool(const CombinatorialWeight&)>& visit) {
  if (!is_viable(g)) return;
  if (is_degenerate(g)) visit_degenerate(g, visit);
  else visit_nondegenerate(g, visit);
}

std::vector<CombinatorialWeight> gene_weights(const Gene& g) {
  std::vector<CombinatorialWeight> out;
  visit_gene_weights(g, [&](const CombinatorialWeight& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

cpp_int count_weights(const Gene& g) {
  if (!is_viable(g)) return 0;
  if (is_degenerate(g)) return degenerate_count(g);
  cpp_int total = 1;
  for (const Fragment& fr : fragments(g)) total *= count_fragment_weights(fr);
  return total;
}

bool is_weight(const Gene& g, const CombinatorialWeight& w) {
  if (w.size() != g.f) return false;
  for (std::uint8_t bit : w)
    if (bit > 1) return false;
  if (!is_viable(g)) return false;
  if (is_degenerate(g)) {
    std::vector<int> forced(w.begin(), w.end());
    return degenerate_feasible(g, forced);
  }
  for (const Fragment& fr : fragments(g)) {
    std::vector<int> forced(fr.size());
    for (std::size_t j = 0; j < fr.size(); ++j)
      forced[j] = w[(fr.anchor + j) % g.f];
    if (!fragment_feasible(fr, forced)) return false;
  }
  return true;
}

cpp_int fib_bound(std::uint32_t n) {
  cpp_int a = 0, b = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    cpp_int next = a + b;
    a = b;
    b = next;
  }
  return a;
}

Fragment extremal_fragment(std::uint32_t l, bool flipped) {
  if (l < 2) throw std::invalid_argument("extremal fragment needs length >= 2");
  Fragment fr;
  fr.top.resize(l);
  fr.bottom.resize(l);
  fr.top[0] = Letter::O;
  for (std::uint32_t j = 1; j < l; ++j)
    fr.top[j] = j % 2 ? Letter::A : Letter::B;
  for (std::uint32_t j = 0; j < l; ++j)
    fr.bottom[j] = j % 2 ? Letter::A : Letter::B;
  if (l % 2 == 0) fr.top[l - 1] = Letter::AB;
  else fr.bottom[l - 1] = Letter::AB;
  if (flipped) {
    for (auto row : {&fr.top, &fr.bottom})
      for (Letter& x : *row) {
        if (x == Letter::A) x = Letter::B;
        else if (x == Letter::B) x = Letter::A;
      }
  }
  return fr;
}

DegenerateTable degenerate_weight_table(const Gene& g, int i) {
  if (!is_degenerate(g)) throw DegenerateGene("gene must be degenerate");
  if (i < -1 || i >= static_cast<int>(g.f))
    throw std::invalid_argument("step index out of range");
  DegenerateSets d = degenerate_sets_upto(g, i);
  DegenerateTable out;
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) out[s][t] = d.start[s].s[t];
  return out;
}

}  // namespace gw
