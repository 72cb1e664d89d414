#include "gw/serre.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>

#include "gw/basep.hpp"
#include "gw/enriched.hpp"
#include "gw/errors.hpp"

namespace gw {

namespace {

using std::size_t;

cpp_int canon(cpp_int x, const cpp_int& m) {
  x %= m;
  if (x < 0) x += m;
  return x;
}

bool all_pm1(const std::vector<std::uint32_t>& r, std::uint32_t p) {
  return std::all_of(r.begin(), r.end(),
                     [&](std::uint32_t d) { return d == p - 1; });
}

bool witness_less(const WeightWitness& x, const WeightWitness& y) {
  if (!(x.sigma == y.sigma)) return x.sigma < y.sigma;
  if (x.eps != y.eps) return x.eps < y.eps;
  return x.eps_prime < y.eps_prime;
}

std::vector<SerreWeight> strip_witnesses(std::vector<WeightWitness> ws) {
  std::vector<SerreWeight> out;
  out.reserve(ws.size());
  for (auto& w : ws) out.push_back(std::move(w.sigma));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string to_string(const SerreWeight& w) {
  std::ostringstream os;
  os << "Sym^[";
  for (size_t i = 0; i < w.r.size(); ++i) {
    if (i) os << ',';
    os << w.r[i];
  }
  os << "] ⊗ det^" << w.s;
  return os.str();
}

std::vector<WeightWitness> rep_witnesses(std::uint32_t p, std::uint32_t f,
                                         const cpp_int& h,
                                         EnumerationStats* stats) {
  if (p < 3 || f == 0) throw std::invalid_argument("need p >= 3 and f >= 1");
  const Modulus mq{p, f, Ring::QM1};
  const cpp_int q = mq.q();
  const cpp_int qp1 = q + 1;
  const cpp_int qm1 = q - 1;
  const cpp_int hc = canon(h, q * q - 1);
  const cpp_int target = hc % qp1;

  std::vector<cpp_int> pk(f), pk_mod(f), wrap_mod(f);
  for (std::uint32_t i = 0; i < f; ++i) {
    pk[i] = pow_int(p, i);
    pk_mod[i] = pk[i] % qp1;
    wrap_mod[i] = (pk[i] * (p - 1)) % qp1;
  }

  std::vector<WeightWitness> out;
  std::vector<std::uint32_t> r(f);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
    std::vector<int> sign(f);
    cpp_int run = 0;  // sum_i sign_i (1 + r_i) p^i  mod q+1, kept in [0, q+1)
    auto add = [&](const cpp_int& d) {
      run += d;
      if (run >= qp1) run -= qp1;
    };
    auto sub = [&](const cpp_int& d) {
      run -= d;
      if (run < 0) run += qp1;
    };
    for (std::uint32_t i = 0; i < f; ++i) {
      sign[i] = (mask >> i) & 1 ? -1 : 1;
      if (sign[i] > 0)
        add(pk_mod[i]);
      else
        sub(pk_mod[i]);
    }
    std::fill(r.begin(), r.end(), 0);
    for (;;) {
      if (run == target) {
        if (stats && all_pm1(r, p)) ++stats->all_pm1_solutions;
        cpp_int signed_sum = 0, twist_sum = 0;
        for (std::uint32_t i = 0; i < f; ++i) {
          const cpp_int term = pk[i] * (1 + r[i]);
          signed_sum += sign[i] * term;
          if (sign[i] < 0) twist_sum += term;
        }
        const cpp_int num = hc - signed_sum;
        if (num % qp1 != 0)
          throw std::logic_error("candidate passed the residue check but "
                                 "the twist division is not exact");
        WeightWitness w;
        w.sigma.s = canon(num / qp1 - twist_sum, qm1);
        w.sigma.r = r;
        w.eps.resize(f);
        for (std::uint32_t i = 0; i < f; ++i) w.eps[i] = sign[i] < 0;
        out.push_back(std::move(w));
      }
      std::uint32_t k = 0;
      while (k < f) {
        if (r[k] + 1 < p) {
          ++r[k];
          if (sign[k] > 0)
            add(pk_mod[k]);
          else
            sub(pk_mod[k]);
          break;
        }
        r[k] = 0;
        if (sign[k] > 0)
          sub(wrap_mod[k]);
        else
          add(wrap_mod[k]);
        ++k;
      }
      if (k == f) break;
    }
  }
  std::sort(out.begin(), out.end(), witness_less);
  return out;
}

std::vector<SerreWeight> weights_of_rep(std::uint32_t p, std::uint32_t f,
                                        const cpp_int& h,
                                        EnumerationStats* stats) {
  return strip_witnesses(rep_witnesses(p, f, h, stats));
}

std::vector<WeightWitness> type_witnesses(std::uint32_t p, std::uint32_t f,
                                          const cpp_int& gamma,
                                          const cpp_int& gamma_prime,
                                          const TypeConventions& conv,
                                          EnumerationStats* stats) {
  if (p < 3 || f == 0) throw std::invalid_argument("need p >= 3 and f >= 1");
  const Modulus mq{p, f, Ring::QM1};
  const cpp_int qm1 = mq.value();
  const cpp_int g = canon(gamma, qm1);
  const cpp_int gp = canon(gamma_prime, qm1);
  const cpp_int cdiff =
      canon(conv.c_from_gamma_minus_gamma_prime ? g - gp : gp - g, qm1);
  const DigitVector cd = int_to_digits(cdiff, p, f);  // most significant first
  std::vector<std::int64_t> c(f);
  for (std::uint32_t i = 0; i < f; ++i) c[i] = cd[f - 1 - i];

  std::vector<cpp_int> pk(f);
  for (std::uint32_t i = 0; i < f; ++i) pk[i] = pow_int(p, i);

  std::vector<WeightWitness> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f); ++mask) {
    std::vector<std::uint8_t> ep(f);
    for (std::uint32_t i = 0; i < f; ++i) ep[i] = (mask >> i) & 1;
    std::vector<std::uint32_t> r(f);
    bool ok = true;
    for (std::uint32_t i = 0; i < f && ok; ++i) {
      const std::uint8_t cur = ep[i];
      const std::uint8_t prev = ep[(i + f - 1) % f];
      std::int64_t ri;
      if (conv.table_as_printed) {
        if (cur == 0)
          ri = prev == 0 ? c[i] : c[i] - 1;
        else
          ri = prev == 0 ? p - 2 - c[i] : p - 1 - c[i];
      } else {
        if (cur == 0)
          ri = prev == 0 ? c[i] : c[i] + 1;
        else
          ri = prev == 0 ? p - 2 - c[i] : p - 3 - c[i];
      }
      if (ri < 0 || ri >= p)
        ok = false;
      else
        r[i] = static_cast<std::uint32_t>(ri);
    }
    if (!ok) continue;
    if (stats && all_pm1(r, p)) ++stats->all_pm1_solutions;
    cpp_int bracket = ep[f - 1] ? qm1 : 0;
    for (std::uint32_t i = 0; i < f; ++i)
      bracket += (c[i] - static_cast<std::int64_t>(r[i])) * pk[i];
    if (bracket % 2 != 0) continue;  // no twist exponent under this sign word
    WeightWitness w;
    w.sigma.s = canon(gp + bracket / 2, qm1);
    w.sigma.r = std::move(r);
    w.eps_prime = std::move(ep);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), witness_less);
  return out;
}

std::vector<SerreWeight> weights_of_type(std::uint32_t p, std::uint32_t f,
                                         const cpp_int& gamma,
                                         const cpp_int& gamma_prime,
                                         EnumerationStats* stats) {
  return strip_witnesses(
      type_witnesses(p, f, gamma, gamma_prime, TypeConventions{}, stats));
}

std::vector<std::uint8_t> recover_eps_prime(const CoherentTriple& t,
                                            const SerreWeight& sigma) {
  const auto ws =
      type_witnesses(t.p, t.f, to_int(t.gamma), to_int(t.gamma_prime));
  std::vector<std::uint8_t> found;
  bool any = false;
  for (const auto& w : ws) {
    if (w.sigma == sigma) {
      if (any)
        throw std::logic_error("type weight with more than one sign word");
      found = w.eps_prime;
      any = true;
    }
  }
  if (!any) throw NotAWeight();
  return found;
}

std::vector<SerreWeight> common_weights_oracle(const CoherentTriple& t) {
  const auto a = weights_of_rep(t.p, t.f, to_int(t.h));
  const auto b = weights_of_type(t.p, t.f, to_int(t.gamma), to_int(t.gamma_prime));
  std::vector<SerreWeight> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

RecipeContext recipe_context(const CoherentTriple& t) {
  RecipeContext ctx{t, gene_of_triple(t), v_sequence(t), c_sequence(t), {}};
  ctx.delta.resize(t.f);
  for (std::uint32_t i = 0; i < t.f; ++i)
    ctx.delta[i] =
        letter_class(ctx.gene.at(i)) == letter_class(ctx.gene.at(i + t.f));
  return ctx;
}

SerreWeight serre_of_combinatorial(const RecipeContext& ctx,
                                   const CombinatorialWeight& w) {
  const Gene& g = ctx.gene;
  const std::uint32_t f = g.f;
  const std::int64_t p = ctx.t.p;
  if (!is_weight(g, w)) throw NotAWeight();

  // Degrees r from the two-row digit table.
  std::vector<std::uint32_t> r(f);
  for (std::uint32_t i = 0; i < f; ++i) {
    const std::uint32_t im1 = (i + f - 1) % f;
    const bool same = w[im1] == ctx.delta[im1];
    std::int64_t val;
    if (g.at(i) == Letter::O)
      val = same ? static_cast<std::int64_t>(ctx.v[i]) - 1 - w[i]
                 : p - 1 - ctx.v[i] + w[i];
    else if (g.at(i + f) == Letter::O)
      val = same ? static_cast<std::int64_t>(ctx.v[i + f]) - 1 - w[i]
                 : p - 1 - ctx.v[i + f] + w[i];
    else
      val = same ? w[i] * (p - 1) : p - 2 + w[i];
    if (val < 0 || val >= p)
      throw std::logic_error("recipe digit out of range");
    r[f - 1 - i] = static_cast<std::uint32_t>(val);
  }

  // Twist exponent from the enriched lift and its compatible sequence.
  const EnrichedWeight lift = lift_weight(g, w);
  const NumericalMask chi = mask_of_enriched(g, lift);
  PeriodicIntSequence base(ctx.v.size());
  for (size_t i = 0; i < ctx.v.size(); ++i) base[i] = ctx.v[i];
  const SerreWeight sw = serre_of_sigma(ctx.t, mutate(base, chi, ctx.t.p));
  if (sw.r != r)
    throw std::logic_error("digit table and active sequence disagree on r");

  // Closed-form cross-check of the twist exponent.
  const Modulus mq{ctx.t.p, f, Ring::QM1};
  const cpp_int qm1 = mq.value();
  const cpp_int q = mq.q();
  const std::int64_t half = (p - 1) / 2;
  std::uint32_t i0 = f;
  int ep0 = -1;
  for (std::uint32_t i = 0; i < f; ++i) {
    if (static_cast<std::int64_t>(ctx.c[i]) != half) {
      i0 = i;
      const std::int64_t ri = r[i];
      const std::int64_t ci = ctx.c[i];
      ep0 = (ri == ci || ri == ci - 1) ? 0 : 1;
      break;
    }
  }
  if (i0 == f) {
    // Balanced digits: anchor at any column with a gap in either row (the
    // gene cannot be degenerate here), reading the sign off the same-column
    // flag of the digit table.
    for (std::uint32_t m = 0; m < f; ++m) {
      if (g.at(m) == Letter::O || g.at(m + f) == Letter::O) {
        i0 = f - 1 - m;
        const std::uint32_t idx = (m + f - 1) % f;
        ep0 = (w[idx] == ctx.delta[idx]) ? 0 : 1;
        break;
      }
    }
    if (i0 == f)
      throw std::logic_error(
          "balanced digits without a gap; no anchor for the closed-form "
          "twist");
  }
  // Exact telescoping identity: weighting position i by q for i <= i0 and by
  // 1 beyond leaves a single boundary term at i0, so the bracket is twice an
  // integer congruent to the twist sum.
  cpp_int bracket = ep0 ? qm1 : 0;
  cpp_int pki = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    const cpp_int lambda = (i <= i0) ? q : 1;
    bracket += lambda * (static_cast<std::int64_t>(ctx.c[i]) -
                         static_cast<std::int64_t>(r[i])) *
               pki;
    pki *= ctx.t.p;
  }
  if (bracket % 2 != 0)
    throw std::logic_error("closed-form twist bracket is odd");
  const cpp_int s_cf = canon(to_int(ctx.t.gamma_prime) + bracket / 2, qm1);
  if (s_cf != sw.s)
    throw std::logic_error("closed-form twist disagrees with the active "
                           "sequence");
  return sw;
}

SerreWeight serre_of_combinatorial(const CoherentTriple& t,
                                   const CombinatorialWeight& w) {
  return serre_of_combinatorial(recipe_context(t), w);
}

std::vector<SerreWeight> common_weights_fast(const CoherentTriple& t) {
  const RecipeContext ctx = recipe_context(t);
  std::vector<SerreWeight> out;
  visit_gene_weights(ctx.gene, [&](const CombinatorialWeight& w) {
    out.push_back(serre_of_combinatorial(ctx, w));
    return true;
  });
  std::sort(out.begin(), out.end());
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i - 1] == out[i])
      throw std::logic_error("recipe image is not injective");
  return out;
}

}  // namespace gw
