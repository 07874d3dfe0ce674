#include "ordchomp/monoid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace ordchomp {

namespace {

using CnfSet = std::unordered_set<CnfOrdinal, CnfHash, CnfEq>;

uint64_t to_u64(const Coeff& c, const char* what) {
  if (c < 0 || c > UINT64_MAX) throw BoundTooLarge(std::string(what) + " out of range");
  return c.convert_to<uint64_t>();
}

// Membership sieve for the numerical semigroup generated by `gens`,
// over values 0..limit.
std::vector<char> semigroup_sieve(const std::vector<Coeff>& gens, uint64_t limit) {
  std::vector<char> in(limit + 1, 0);
  in[0] = 1;
  for (uint64_t v = 1; v <= limit; ++v)
    for (const Coeff& g : gens) {
      uint64_t gv = to_u64(g, "generator");
      if (gv <= v && in[v - gv]) {
        in[v] = 1;
        break;
      }
    }
  return in;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<CnfOrdinal> gens) {
  for (const auto& g : gens)
    if (g.is_zero()) throw Error("generators must be nonzero");
  std::sort(gens.begin(), gens.end(),
            [](const CnfOrdinal& a, const CnfOrdinal& b) { return a < b; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) throw Error("generator set must be nonempty");
  gens_ = std::move(gens);
  numeric_ = true;
  for (const auto& g : gens_) {
    CnfOrdinal e = leading_exp(g);
    if (compare(e, ebar_) == Ordering::GT) ebar_ = e;
    if (g.is_natural())
      numeric_part_.push_back(g.as_natural());
    else
      numeric_ = false;
  }
}

CnfOrdinal epsilon_of(const GeneratorSet& g) {
  if (g.is_numeric()) return CnfOrdinal{};
  CnfOrdinal u;
  bool attained = false;
  for (const auto& gen : g.gens()) {
    CnfOrdinal v = leading_exp(leading_exp(gen));
    Ordering c = compare(v, u);
    if (c == Ordering::GT) {
      u = v;
      attained = true;
    } else if (c == Ordering::EQ) {
      attained = true;
    }
  }
  return attained ? ordinary_add(u, CnfOrdinal::natural(1)) : u;
}

bool is_gamma_closed(const CnfOrdinal& alpha, const GeneratorSet& g) {
  if (g.is_numeric()) return true;
  if (alpha.is_zero()) return false;
  return alpha.terms().back().exponent == epsilon_of(g);
}

namespace {

// Ordinals usable as multiplier exponents: everything below sigma when sigma
// is a natural number; otherwise ordinals assembled from sigma's own
// sub-exponents with capped coefficients, filtered below sigma.
std::vector<CnfOrdinal> exponent_universe(const CnfOrdinal& sigma, long bound) {
  std::vector<CnfOrdinal> out;
  if (sigma.is_natural()) {
    Coeff n = sigma.as_natural();
    if (n > 64) throw BoundTooLarge("sigma too large for enumeration");
    for (Coeff i = 0; i < n; ++i) out.push_back(CnfOrdinal::natural(i));
    return out;
  }
  // Collect atoms: all exponents appearing recursively inside sigma.
  CnfSet atoms;
  std::vector<CnfOrdinal> stack{sigma};
  while (!stack.empty()) {
    CnfOrdinal cur = stack.back();
    stack.pop_back();
    for (const auto& t : cur.terms()) {
      if (atoms.insert(t.exponent).second) stack.push_back(t.exponent);
    }
  }
  atoms.insert(CnfOrdinal{});
  std::vector<CnfOrdinal> sorted(atoms.begin(), atoms.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const CnfOrdinal& a, const CnfOrdinal& b) { return b < a; });
  if (std::pow(static_cast<double>(bound + 1), static_cast<double>(sorted.size())) > 2e6)
    throw BoundTooLarge("exponent universe too large");
  CnfSet result;
  std::vector<CnfOrdinal::Term> terms;
  auto rec = [&](auto&& self, size_t i) -> void {
    CnfOrdinal cand = CnfOrdinal::from_terms(terms);
    if (cand < sigma) result.insert(cand);
    for (size_t j = i; j < sorted.size(); ++j)
      for (long c = 1; c <= bound; ++c) {
        terms.push_back({sorted[j], Coeff(c)});
        self(self, j + 1);
        terms.pop_back();
      }
  };
  rec(rec, 0);
  for (long c = 0; c <= bound; ++c) {
    CnfOrdinal n = CnfOrdinal::natural(Coeff(c));
    if (n < sigma) result.insert(n);
  }
  out.assign(result.begin(), result.end());
  std::sort(out.begin(), out.end(),
            [](const CnfOrdinal& a, const CnfOrdinal& b) { return a < b; });
  return out;
}

// All CNF ordinals whose exponents come from `exps` with coefficients in
// 1..bound, including 0.
std::vector<CnfOrdinal> multipliers(const std::vector<CnfOrdinal>& exps, long bound,
                                    size_t cap) {
  std::vector<CnfOrdinal> desc(exps.rbegin(), exps.rend());
  std::vector<CnfOrdinal> out;
  std::vector<CnfOrdinal::Term> terms;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (out.size() > cap) throw BoundTooLarge("multiplier universe exceeds cap");
    out.push_back(CnfOrdinal::from_terms(terms));
    for (size_t j = i; j < desc.size(); ++j)
      for (long c = 1; c <= bound; ++c) {
        terms.push_back({desc[j], Coeff(c)});
        self(self, j + 1);
        terms.pop_back();
      }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

MonoidView enumerate_monoid(const GeneratorSet& g, const CnfOrdinal& sigma,
                            long coeff_bound, size_t element_cap) {
  if (sigma.is_zero()) throw Error("sigma must be at least 1");
  if (coeff_bound < 1) throw Error("coeff_bound must be at least 1");
  MonoidView view{g, sigma, coeff_bound, sigma.is_natural(), {}};
  std::vector<CnfOrdinal> exps = exponent_universe(sigma, coeff_bound);
  std::vector<CnfOrdinal> mults = multipliers(exps, coeff_bound, element_cap);
  CnfOrdinal omega_sigma = omega_power(sigma);

  CnfSet acc;
  acc.insert(CnfOrdinal{});
  for (const auto& gen : g.gens()) {
    // Products multiplier (x) generator that stay below w^sigma.
    std::vector<CnfOrdinal> prods;
    CnfSet seen;
    for (const auto& m : mults) {
      CnfOrdinal p = natural_product(m, gen);
      if (p < omega_sigma && seen.insert(p).second) prods.push_back(p);
    }
    CnfSet next;
    for (const auto& s : acc)
      for (const auto& p : prods) {
        next.insert(natural_sum(s, p));
        if (next.size() > element_cap) throw BoundTooLarge("element cap exceeded");
      }
    acc = std::move(next);
  }
  view.elements.assign(acc.begin(), acc.end());
  std::sort(view.elements.begin(), view.elements.end(),
            [](const CnfOrdinal& a, const CnfOrdinal& b) { return a < b; });
  return view;
}

Tri contains(const MonoidView& view, const CnfOrdinal& beta) {
  auto it = std::lower_bound(view.elements.begin(), view.elements.end(), beta,
                             [](const CnfOrdinal& a, const CnfOrdinal& b) { return a < b; });
  if (it != view.elements.end() && *it == beta) return Tri::True;
  if (!view.complete_universe) return Tri::Unknown;
  // Any representation sum_gamma mult_gamma (x) gamma of beta has every
  // multiplier coefficient c satisfying c * mincoeff(gamma) <= some top-level
  // coefficient of beta (coefficients never cancel). If all such multipliers
  // were enumerated, absence is definitive.
  Coeff max_c = 0;
  for (const auto& t : beta.terms()) max_c = std::max(max_c, t.coefficient);
  Coeff needed = 0;
  for (const auto& gen : view.gamma.gens()) {
    Coeff min_c = gen.terms()[0].coefficient;
    for (const auto& t : gen.terms()) min_c = std::min(min_c, t.coefficient);
    needed = std::max(needed, Coeff(max_c / min_c));
  }
  return needed <= view.coeff_bound ? Tri::False : Tri::Unknown;
}

Tri leq(const MonoidView& view, const CnfOrdinal& a, const CnfOrdinal& b) {
  Ordering c = compare(a, b);
  if (c == Ordering::EQ) return Tri::True;
  if (c == Ordering::GT) return Tri::False;
  return contains(view, subtract(b, a));
}

std::vector<std::pair<CnfOrdinal, CnfOrdinal>> decompose(const CnfOrdinal& beta,
                                                         const GeneratorSet& g) {
  std::vector<std::pair<CnfOrdinal, CnfOrdinal>> out;
  if (beta.is_zero()) return out;
  CnfOrdinal eps = epsilon_of(g);
  // Group terms of beta by the part of their exponent at or above epsilon;
  // the remainder of each exponent goes into the block.
  for (const auto& t : beta.terms()) {
    std::vector<CnfOrdinal::Term> key_terms, rem_terms;
    for (const auto& et : t.exponent.terms()) {
      if (compare(et.exponent, eps) != Ordering::LT)
        key_terms.push_back(et);
      else
        rem_terms.push_back(et);
    }
    CnfOrdinal key = CnfOrdinal::from_terms(std::move(key_terms));
    CnfOrdinal rem = CnfOrdinal::from_terms(std::move(rem_terms));
    CnfOrdinal piece =
        CnfOrdinal::from_terms({{rem, t.coefficient}});  // w^rem * coeff
    if (!out.empty() && out.back().first == key)
      out.back().second = ordinary_add(out.back().second, piece);
    else
      out.emplace_back(key, piece);
  }
  for (const auto& [key, block] : out) {
    if (!key.is_zero() && !is_gamma_closed(key, g))
      throw NotDecomposable("exponent " + print(key) + " is not gamma-closed");
    (void)block;
  }
  // Block membership in <Gamma>^{w^epsilon}: definitive for numeric
  // generator sets, bounded-best-effort otherwise.
  if (g.is_numeric()) {
    long long f = frobenius(g);
    std::vector<char> sieve;
    if (f >= 0)
      sieve = semigroup_sieve(g.numeric_part(), static_cast<uint64_t>(f) + 1);
    for (const auto& [key, block] : out) {
      (void)key;
      if (!block.is_natural()) throw NotDecomposable("non-natural block " + print(block));
      Coeff v = block.as_natural();
      if (f >= 0 && v <= f && !sieve[to_u64(v, "block")])
        throw NotDecomposable("block " + print(block) + " outside the semigroup");
    }
  } else {
    try {
      MonoidView bv = enumerate_monoid(g, omega_power(eps), 8, 200000);
      for (const auto& [key, block] : out) {
        (void)key;
        if (contains(bv, block) == Tri::False)
          throw NotDecomposable("block " + print(block) + " outside the monoid");
      }
    } catch (const BoundTooLarge&) {
      // Cannot check blocks within bounds; fall through to the identity check.
    }
  }
  // Recomposition must reproduce beta exactly.
  CnfOrdinal check;
  for (const auto& [key, block] : out)
    check = ordinary_add(check, natural_product(omega_power(key), block));
  if (check != beta) throw NotDecomposable("recomposition mismatch for " + print(beta));
  return out;
}

std::vector<uint64_t> gaps(const GeneratorSet& g) {
  const std::vector<Coeff>& part = g.numeric_part();
  if (part.empty()) throw Error("no natural generators");
  uint64_t d = 0;
  for (const Coeff& c : part) d = std::gcd(d, to_u64(c, "generator"));
  if (d != 1) throw InfiniteGaps("gcd of natural generators is " + std::to_string(d));
  uint64_t lo = to_u64(part.front(), "generator");
  uint64_t hi = to_u64(part.back(), "generator");
  uint64_t limit = lo * hi;  // the Frobenius number is below lo*hi
  std::vector<char> in = semigroup_sieve(part, limit);
  std::vector<uint64_t> out;
  for (uint64_t v = 1; v <= limit; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

long long frobenius(const GeneratorSet& g) {
  std::vector<uint64_t> gs = gaps(g);
  return gs.empty() ? -1 : static_cast<long long>(gs.back());
}

}  // namespace ordchomp
