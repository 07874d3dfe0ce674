#include "ordchomp/wpog.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ordchomp {

namespace {

// Natural multiple via the natural product.
CnfOrdinal times(const CnfOrdinal& a, long k) {
  return natural_product(a, CnfOrdinal::natural(Coeff(k)));
}

CnfOrdinal level_above(const GeneratorSet& g) {
  return ordinary_add(g.ebar(), CnfOrdinal::natural(1));
}

// Terms of `a` with exponent strictly below `e`.
CnfOrdinal tail_below(const CnfOrdinal& a, const CnfOrdinal& e) {
  std::vector<CnfOrdinal::Term> out;
  for (const auto& t : a.terms())
    if (compare(t.exponent, e) == Ordering::LT) out.push_back(t);
  return CnfOrdinal::from_terms(std::move(out));
}

// Pairwise incomparability of the family { b (+) d (x) k }. The ordinary
// difference of members k < l is d (x) (l-k) (+) s_b (+) r_d (x) k, where
// s_b is b's tail below the leading exponent of d and r_d is d's own tail;
// the family is an antichain iff every such difference avoids the monoid.
bool family_incomparable(const MonoidView& view, const CnfOrdinal& s_b,
                         const CnfOrdinal& d, const CnfOrdinal& r_d, int size) {
  for (int k = 0; k < size; ++k)
    for (int l = k + 1; l < size; ++l) {
      CnfOrdinal diff = natural_sum(natural_sum(times(d, l - k), s_b), times(r_d, k));
      if (contains(view, diff) != Tri::False) return false;
    }
  return true;
}

bool verify_witness(const MonoidView& view, const std::vector<CnfOrdinal>& w) {
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = 0; j < w.size(); ++j) {
      if (i == j) continue;
      if (leq(view, w[i], w[j]) != Tri::False) return false;
    }
  return true;
}

}  // namespace

std::optional<ShapeCertificate> sufficient_shape(const GeneratorSet& g) {
  ShapeCertificate cert;
  std::optional<CnfOrdinal> alpha;
  for (const auto& gen : g.gens()) {
    if (gen.is_natural()) {
      cert.primes.push_back(gen.as_natural());
      continue;
    }
    // Accept w^{a+1}*x + w^a*y, or the degenerate single term w^{a+1}*x.
    const auto& terms = gen.terms();
    if (terms.size() > 2) return std::nullopt;
    CnfOrdinal hi = terms[0].exponent;
    CnfOrdinal cand;
    if (terms.size() == 2) {
      cand = terms[1].exponent;
      if (ordinary_add(cand, CnfOrdinal::natural(1)) != hi) return std::nullopt;
    } else {
      // hi must be a successor: last CNF term of hi has exponent 0. Its
      // predecessor decrements that last coefficient.
      if (hi.is_zero() || !hi.terms().back().exponent.is_zero()) return std::nullopt;
      std::vector<CnfOrdinal::Term> pred = hi.terms();
      if (--pred.back().coefficient == 0) pred.pop_back();
      cand = CnfOrdinal::from_terms(std::move(pred));
      if (ordinary_add(cand, CnfOrdinal::natural(1)) != hi) return std::nullopt;
    }
    if (alpha && *alpha != cand) return std::nullopt;
    alpha = cand;
    ++cert.extra_count;
  }
  if (cert.primes.empty()) return std::nullopt;
  uint64_t d = 0;
  for (const Coeff& p : cert.primes) {
    if (p > UINT64_MAX) return std::nullopt;
    d = std::gcd(d, p.convert_to<uint64_t>());
  }
  if (d != 1) return std::nullopt;
  cert.alpha = alpha.value_or(CnfOrdinal{});
  return cert;
}

NecessaryResult necessary_condition(const GeneratorSet& g, int multiples,
                                    long coeff_bound) {
  NecessaryResult res{true, {}, {}};
  CnfOrdinal min_lead = leading_exp(g.gens().front());
  for (const auto& gen : g.gens())
    if (compare(leading_exp(gen), min_lead) == Ordering::LT)
      min_lead = leading_exp(gen);
  // Among the smallest generators, pick the multi-term offender whose
  // trailing/leading coefficient ratio is largest; its natural multiples are
  // pairwise incomparable.
  const CnfOrdinal* offender = nullptr;
  for (const auto& gen : g.gens()) {
    if (leading_exp(gen) != min_lead || gen.terms().size() < 2) continue;
    if (!offender) {
      offender = &gen;
      continue;
    }
    const Coeff &a1 = gen.terms().front().coefficient,
                &an = gen.terms().back().coefficient;
    const Coeff &b1 = offender->terms().front().coefficient,
                &bn = offender->terms().back().coefficient;
    if (an * b1 > bn * a1) offender = &gen;
  }
  if (!offender) return res;
  res.pass = false;
  res.offender = *offender;
  for (int p = 1; p <= multiples; ++p) res.witness.push_back(times(*offender, p));
  CnfOrdinal level = level_above(g);
  for (int attempt = 0; attempt < 3; ++attempt) {
    MonoidView view = enumerate_monoid(g, level, coeff_bound << attempt);
    if (verify_witness(view, res.witness)) return res;
  }
  throw Error("could not certify incomparability of the multiples witness");
}

std::optional<std::vector<CnfOrdinal>> find_antichain(const GeneratorSet& g,
                                                      const CnfOrdinal& level,
                                                      int size, long coeff_bound,
                                                      long node_budget,
                                                      size_t search_cap) {
  if (size < 2) throw Error("antichain size must be at least 2");
  MonoidView view = enumerate_monoid(g, level, coeff_bound);
  size_t prefix = std::min(search_cap, view.elements.size());
  struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
      return p.first * 0x9e3779b97f4a7c15ULL ^ p.second;
    }
  };
  std::unordered_map<std::pair<uint64_t, uint64_t>, bool, PairHash> memo;
  long budget = node_budget;
  for (size_t bi = 0; bi < prefix; ++bi) {
    const CnfOrdinal& b = view.elements[bi];
    if (b.is_zero()) continue;
    CnfOrdinal eb = leading_exp(b);
    for (size_t di = 0; di < prefix; ++di) {
      const CnfOrdinal& d = view.elements[di];
      if (d.is_zero()) continue;
      CnfOrdinal ed = leading_exp(d);
      // A step with a higher leading exponent absorbs b entirely and the
      // differences are monoid elements; skip.
      if (compare(ed, eb) == Ordering::GT) continue;
      CnfOrdinal s_b = tail_below(b, ed);
      auto key = std::make_pair(hash_value(s_b), hash_value(d));
      bool ok;
      auto it = memo.find(key);
      if (it != memo.end()) {
        ok = it->second;
      } else {
        if (--budget < 0) return std::nullopt;
        CnfOrdinal r_d = tail_below(d, ed);
        ok = family_incomparable(view, s_b, d, r_d, size);
        memo.emplace(key, ok);
      }
      if (!ok) continue;
      std::vector<CnfOrdinal> witness;
      for (int k = 0; k < size; ++k)
        witness.push_back(natural_sum(b, times(d, k)));
      if (verify_witness(view, witness)) return witness;
    }
  }
  return std::nullopt;
}

WpogVerdict wpog_verdict(const GeneratorSet& g, long coeff_bound,
                         int antichain_size, long node_budget, size_t search_cap) {
  WpogVerdict v;
  v.level_checked = ordinary_add(g.ebar(), CnfOrdinal::natural(1));
  v.coeff_bound = coeff_bound;
  v.size = antichain_size;
  if (auto cert = sufficient_shape(g)) {
    v.status = WpogVerdict::Status::IsWpog;
    v.reason = "shape criterion (relatively prime naturals plus shared-exponent pairs)";
    return v;
  }
  NecessaryResult nec = necessary_condition(g, antichain_size, coeff_bound);
  if (!nec.pass) {
    v.status = WpogVerdict::Status::NotWpog;
    v.reason = "smallest generator " + print(nec.offender) + " has a trailing term";
    v.witness = nec.witness;
    return v;
  }
  if (auto w = find_antichain(g, v.level_checked, antichain_size, coeff_bound,
                              node_budget, search_cap)) {
    v.status = WpogVerdict::Status::NotWpog;
    v.reason = "antichain found at level " + print(v.level_checked);
    v.witness = *w;
    return v;
  }
  v.status = WpogVerdict::Status::Inconclusive;
  v.reason = "no antichain of size " + std::to_string(antichain_size) +
             " found within bounds";
  return v;
}

}  // namespace ordchomp
