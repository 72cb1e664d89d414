#include "gw/kisin.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gw/errors.hpp"
#include "gw/weights.hpp"

namespace gw {

namespace {

Letter flip_letter(Letter l) {
  switch (l) {
    case Letter::A: return Letter::B;
    case Letter::B: return Letter::A;
    default: return l;
  }
}

Fragment row_swap(const Fragment& fr) {
  Fragment out = fr;
  std::swap(out.top, out.bottom);
  return out;
}

// Puts the O of the first column on top and the letter below it in {A, AB}.
// Row swapping and flipping both leave the variety and the weight count
// unchanged, so everything about the variety can be read off the normal form.
struct Normalized {
  Fragment fr;
  bool swapped = false;
};

Normalized normalize(const Fragment& fr) {
  if (fr.size() == 0) throw std::invalid_argument("empty fragment");
  Normalized nm;
  nm.fr = fr;
  if (nm.fr.top[0] != Letter::O) {
    if (nm.fr.bottom[0] != Letter::O)
      throw std::invalid_argument("fragment must start with its O column");
    nm.fr = row_swap(nm.fr);
    nm.swapped = true;
  }
  if (nm.fr.bottom[0] == Letter::B) nm.fr = flip(nm.fr);
  return nm;
}

// Which of the three reduced shapes a fragment literally is, with the O on
// top; nullopt when it is none of them.
std::optional<ReducedForm> classify_top_reduced(const Fragment& fr) {
  const std::size_t l = fr.size();
  if (l == 0 || fr.top[0] != Letter::O) return std::nullopt;
  if (fr.bottom[0] != Letter::A && fr.bottom[0] != Letter::AB)
    return std::nullopt;
  if (l == 1) return ReducedForm::kSingle;
  auto dom = fragment_dominants(fr);
  if (dom[1] == Letter::B) return ReducedForm::kOpen;
  if (l > 2 && fr.top[1] == Letter::A && fr.bottom[1] == Letter::B &&
      dom[2] == Letter::A)
    return ReducedForm::kPinned;
  return std::nullopt;
}

// Number of leading columns whose coordinate is pinned to [0:1] on the
// variety of a normalized fragment: the largest n such that the bottom row
// carries A strictly before column n-1 and A is dominant strictly before
// column n.  The remaining coordinates all project surjectively.
std::uint32_t pinned_prefix(const Fragment& fr) {
  const std::size_t l = fr.size();
  if (l == 1) return 1;
  auto dom = fragment_dominants(fr);
  std::uint32_t n = 0;
  while (n < l && dom[n] == Letter::A &&
         (n == 0 || fr.bottom[n - 1] == Letter::A))
    ++n;
  if (n == 0) throw std::logic_error("normalized fragment with no pinned column");
  return n;
}

}  // namespace

KisinPresentation presentation_of_gene(const Gene& g) {
  if (is_degenerate(g)) throw DegenerateGene();
  if (!is_viable(g)) throw NotViable();
  const std::uint32_t f = g.f;
  KisinPresentation pres;
  pres.n = f;
  pres.cyclic = true;
  pres.constants.assign(f, ColumnValue::Free);
  for (std::uint32_t i = 0; i < f; ++i) {
    if (g.x[i] == Letter::O)
      pres.constants[i] = ColumnValue::TopZero;
    else if (g.x[i + f] == Letter::O)
      pres.constants[i] = ColumnValue::BottomZero;
  }
  std::vector<Letter> dom;
  bool tied = false;
  try {
    dom = dominant_letters(g);
  } catch (const CircularDominance&) {
    tied = true;  // alternating {O, AB}: every pair is joined, all bits zero
  }
  for (std::uint32_t i = 0; i < f; ++i) {
    if (!tied && dom[i] != dom[(i + 1) % f]) continue;
    std::uint8_t top = (!tied && g.x[i] == dom[i]) ? 1 : 0;
    std::uint8_t bottom = (!tied && g.x[i + f] == dom[i]) ? 1 : 0;
    pres.equations.push_back({i, top, bottom});
  }
  return pres;
}

KisinPresentation presentation_of_fragment(const Fragment& fr) {
  const std::size_t l = fr.size();
  if (l == 0) throw std::invalid_argument("empty fragment");
  KisinPresentation pres;
  pres.n = static_cast<std::uint32_t>(l);
  pres.cyclic = false;
  pres.constants.assign(l, ColumnValue::Free);
  if (fr.top[0] == Letter::O)
    pres.constants[0] = ColumnValue::TopZero;
  else if (fr.bottom[0] == Letter::O)
    pres.constants[0] = ColumnValue::BottomZero;
  if (l == 1) return pres;
  auto dom = fragment_dominants(fr);
  for (std::size_t i = 0; i + 1 < l; ++i) {
    if (dom[i] != dom[i + 1]) continue;
    pres.equations.push_back({static_cast<std::uint32_t>(i),
                              fr.top[i] == dom[i] ? std::uint8_t{1} : std::uint8_t{0},
                              fr.bottom[i] == dom[i] ? std::uint8_t{1} : std::uint8_t{0}});
  }
  return pres;
}

Fragment flip(const Fragment& fr) {
  Fragment out = fr;
  for (auto& l : out.top) l = flip_letter(l);
  for (auto& l : out.bottom) l = flip_letter(l);
  return out;
}

bool is_reduced(const Fragment& fr) {
  return classify_top_reduced(fr).has_value() ||
         classify_top_reduced(row_swap(fr)).has_value();
}

ReductionResult reduce(const Fragment& fr) {
  Normalized nm = normalize(fr);
  Fragment work = std::move(nm.fr);
  const std::uint32_t l = static_cast<std::uint32_t>(work.size());

  ReductionResult res;
  res.swapped = nm.swapped;

  if (auto form = classify_top_reduced(work)) {
    res.n = 0;
    res.reduced = std::move(work);
    res.form = *form;
    return res;
  }

  // Not reduced, so l > 1, the first column is (O, A) and A is dominant at
  // position 1; the pinned prefix therefore has length at least 2.
  const std::uint32_t n = pinned_prefix(work);
  if (n < 2) throw std::logic_error("unreduced fragment with pinned prefix < 2");

  if (n == l && work.bottom[l - 1] == Letter::AB) {
    // Every coordinate is pinned; the weights survive on one (O, AB) column.
    res.n = l - 1;
    res.reduced.anchor = work.anchor + l - 1;
    res.reduced.top = {Letter::O};
    res.reduced.bottom = {Letter::AB};
    res.form = ReducedForm::kSingle;
  } else if (work.bottom[n - 1] == Letter::A) {
    // The pinned prefix collapses onto a fresh (O, A) column.
    res.n = n - 1;
    res.reduced.anchor = work.anchor + n - 1;
    res.reduced.top = {Letter::O};
    res.reduced.bottom = {Letter::A};
    res.reduced.top.insert(res.reduced.top.end(), work.top.begin() + n,
                           work.top.end());
    res.reduced.bottom.insert(res.reduced.bottom.end(), work.bottom.begin() + n,
                              work.bottom.end());
    res.form = n == l ? ReducedForm::kSingle : ReducedForm::kOpen;
  } else {
    // The column before the prefix end reads (A, B): keep it as a tie column
    // behind a fresh (O, A) one.  The result counts one of its pinned
    // coordinates inside its own variety, hence the prefix length n - 3.
    if (n < 3 || work.bottom[n - 1] != Letter::B || work.top[n - 1] != Letter::A)
      throw std::logic_error("unexpected pinned prefix boundary");
    res.n = n - 3;
    res.reduced.anchor = work.anchor + n - 2;
    res.reduced.top = {Letter::O, Letter::A};
    res.reduced.bottom = {Letter::A, Letter::B};
    res.reduced.top.insert(res.reduced.top.end(), work.top.begin() + n,
                           work.top.end());
    res.reduced.bottom.insert(res.reduced.bottom.end(), work.bottom.begin() + n,
                              work.bottom.end());
    res.form = ReducedForm::kPinned;
  }

  if (classify_top_reduced(res.reduced) != res.form)
    throw std::logic_error("reduction did not land on a reduced fragment");
  return res;
}

std::vector<std::uint32_t> crosses(const Fragment& fr) {
  const std::size_t l = fr.size();
  std::vector<std::uint32_t> out;
  if (l < 3) return out;
  auto dom = fragment_dominants(fr);
  for (std::size_t i = 1; i + 1 < l; ++i)
    if (fr.top[i] == fr.bottom[i] && fr.top[i] == dom[i + 1])
      out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

Fragment delete_cross(const Fragment& fr, std::uint32_t i) {
  auto xs = crosses(fr);
  if (std::find(xs.begin(), xs.end(), i) == xs.end()) throw NotACross();
  Fragment out = fr;
  out.top.erase(out.top.begin() + i);
  out.bottom.erase(out.bottom.begin() + i);
  return out;
}

std::vector<KisinComponent> decompose(const Gene& g) {
  const auto frs = fragments(g);  // throws DegenerateGene / NotViable
  const std::uint32_t f = g.f;
  const KisinPresentation whole = presentation_of_gene(g);

  // Constant columns of the gene variety, in gene coordinates: the pinned
  // prefix of every fragment.  The O column itself is pinned on the row of
  // the O; the later prefix columns are pinned on the row that continues it
  // (the roles swap when the fragment wraps past column f-1).
  std::vector<ColumnValue> pinned(f, ColumnValue::Free);
  std::vector<cpp_int> carried(f);
  std::vector<std::uint32_t> starts;
  for (const Fragment& fr : frs) {
    const std::uint32_t np = pinned_prefix(normalize(fr).fr);
    const bool o_top = fr.top[0] == Letter::O;
    for (std::uint32_t k = 0; k < np; ++k) {
      const std::uint32_t pos = (fr.anchor + k) % (2 * f);
      const bool frag_top_is_gene_top = pos < f;
      const std::uint32_t col = pos % f;
      pinned[col] = (o_top == frag_top_is_gene_top) ? ColumnValue::TopZero
                                                    : ColumnValue::BottomZero;
      starts.push_back(col);
    }
    // The slice beginning at the last pinned column spans the surjective
    // remainder of this fragment and carries its whole weight count.
    carried[(fr.anchor + np - 1) % f] = count_fragment_weights(fr);
  }
  std::sort(starts.begin(), starts.end());
  for (std::uint32_t c = 0; c < f; ++c)
    if (whole.constants[c] != ColumnValue::Free && pinned[c] != whole.constants[c])
      throw std::logic_error("pinned columns disagree with the O columns");

  const auto is_start = [&](std::uint32_t col) {
    return std::binary_search(starts.begin(), starts.end(), col);
  };
  // x-coordinate at a (2f)-periodic position is forced to zero?
  const auto zero_at = [&](std::uint32_t pos) {
    pos %= 2 * f;
    return pos < f ? pinned[pos] == ColumnValue::TopZero
                   : pinned[pos - f] == ColumnValue::BottomZero;
  };

  std::vector<KisinComponent> out(starts.size());
  std::vector<std::uint32_t> slice_of(f);  // column -> index into `out`
  for (std::size_t j = 0; j < starts.size(); ++j) {
    const std::uint32_t begin = starts[j];
    const std::uint32_t next = j + 1 < starts.size() ? starts[j + 1] : starts[0] + f;
    const std::uint32_t len = next - begin;
    out[j].start = begin;
    out[j].presentation.n = len;
    out[j].presentation.cyclic = false;
    out[j].presentation.constants.assign(len, ColumnValue::Free);
    out[j].presentation.constants[0] = pinned[begin];
    out[j].weight_count = carried[begin] != 0 ? carried[begin] : cpp_int(1);
    for (std::uint32_t k = 0; k < len; ++k) slice_of[(begin + k) % f] = static_cast<std::uint32_t>(j);
  }

  for (const KisinEquation& eq : whole.equations) {
    const std::uint32_t c = eq.i;
    const std::uint32_t cn = (c + 1) % f;
    if (!is_start(cn)) {
      // Interior of a slice: keep, relative to the slice start.
      KisinComponent& comp = out[slice_of[c]];
      const std::uint32_t local = (c + f - comp.start) % f;
      comp.presentation.equations.push_back({local, eq.top, eq.bottom});
    } else {
      // The equation runs into a pinned column; it must hold identically on
      // the constant locus, otherwise dropping it would lose information.
      const bool top_vanishes = eq.top == 0 || zero_at(c) || zero_at(c + 1 + f);
      const bool bottom_vanishes =
          eq.bottom == 0 || zero_at(c + f) || zero_at(c + 1);
      if (!top_vanishes || !bottom_vanishes)
        throw std::logic_error("dropped boundary equation is not vacuous");
    }
  }
  return out;
}

std::string render_presentation(const KisinPresentation& pres) {
  std::ostringstream out;
  const std::uint32_t n = pres.n;
  if (pres.cyclic) {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (pres.constants[i] == ColumnValue::TopZero)
        out << "x_" << i << " = 0\n";
      else if (pres.constants[i] == ColumnValue::BottomZero)
        out << "x_" << i + n << " = 0\n";
    }
    for (const KisinEquation& eq : pres.equations) {
      const std::uint32_t m = 2 * n;
      out << int(eq.top) << "·x_" << eq.i << "·x_" << (eq.i + 1 + n) % m
          << " = " << int(eq.bottom) << "·x_" << (eq.i + n) % m << "·x_"
          << (eq.i + 1) % m << "\n";
    }
  } else {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (pres.constants[i] == ColumnValue::TopZero)
        out << "x_" << i << " = 0\n";
      else if (pres.constants[i] == ColumnValue::BottomZero)
        out << "y_" << i << " = 0\n";
    }
    for (const KisinEquation& eq : pres.equations)
      out << int(eq.top) << "·x_" << eq.i << "·y_" << eq.i + 1 << " = "
          << int(eq.bottom) << "·y_" << eq.i << "·x_" << eq.i + 1
          << "\n";
  }
  return out.str();
}

}  // namespace gw
