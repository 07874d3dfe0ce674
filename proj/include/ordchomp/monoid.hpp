#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ordchomp/cnf.hpp"

namespace ordchomp {

// A finite set of nonzero generators, kept sorted and deduplicated.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<CnfOrdinal> gens);

  const std::vector<CnfOrdinal>& gens() const { return gens_; }
  // max over generators of the leading exponent.
  const CnfOrdinal& ebar() const { return ebar_; }
  bool is_numeric() const { return numeric_; }  // all generators below w
  // The natural-number generators, ascending.
  const std::vector<Coeff>& numeric_part() const { return numeric_part_; }

 private:
  std::vector<CnfOrdinal> gens_;
  std::vector<Coeff> numeric_part_;
  CnfOrdinal ebar_;
  bool numeric_;
};

// The closure threshold: 0 when all generators are below w, otherwise
// max over generators of e(e(gamma)), bumped by one when attained.
CnfOrdinal epsilon_of(const GeneratorSet& g);

// Whether w^alpha is closed under adding generator tails: always true for
// numeric generator sets; otherwise alpha's last term exponent must equal
// epsilon_of(g).
bool is_gamma_closed(const CnfOrdinal& alpha, const GeneratorSet& g);

// A bounded explicit listing of <Gamma>^sigma: every sum over generators of
// multiplier (x) generator with the multiplier drawn from a capped universe.
struct MonoidView {
  GeneratorSet gamma;
  CnfOrdinal sigma;
  long coeff_bound;
  // True when the multiplier universe provably covers every representation
  // within the coefficient bound (the case of a natural sigma).
  bool complete_universe;
  std::vector<CnfOrdinal> elements;  // sorted ascending, always contains 0
};

MonoidView enumerate_monoid(const GeneratorSet& g, const CnfOrdinal& sigma,
                            long coeff_bound, size_t element_cap = 1000000);

enum class Tri { False, True, Unknown };

// Membership in the monoid, relative to the view's bounds: True for listed
// elements; False when any representation would need a multiplier coefficient
// within the enumerated range yet none was found; Unknown otherwise.
Tri contains(const MonoidView& view, const CnfOrdinal& beta);

// The monoid's partial order: a <= b iff a = b, or a < b as ordinals and the
// ordinary difference b - a lies in the monoid.
Tri leq(const MonoidView& view, const CnfOrdinal& a, const CnfOrdinal& b);

// Factored form of beta as pairs (alpha_i, beta_i) with
//   beta = w^{alpha_1} (x) beta_1 + ... + w^{alpha_m} (x) beta_m
// (ordinary sums, natural products), each nonzero alpha_i gamma-closed and
// each beta_i in <Gamma>^{w^epsilon}. Throws NotDecomposable on failure.
std::vector<std::pair<CnfOrdinal, CnfOrdinal>> decompose(const CnfOrdinal& beta,
                                                         const GeneratorSet& g);

// Gap set of the numerical semigroup generated by the natural generators.
// Throws InfiniteGaps when their gcd is not 1.
std::vector<uint64_t> gaps(const GeneratorSet& g);

// Largest gap, or -1 when there is none.
long long frobenius(const GeneratorSet& g);

}  // namespace ordchomp
