#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordchomp/monoid.hpp"

namespace ordchomp {

// Witness that the shape criterion applies: relatively prime natural
// generators plus optional two-term generators w^{alpha+1}*a + w^alpha*b
// sharing a single alpha.
struct ShapeCertificate {
  std::vector<Coeff> primes;  // the natural generators
  CnfOrdinal alpha;           // shared exponent of the remaining generators
  size_t extra_count;         // how many non-natural generators matched
};

std::optional<ShapeCertificate> sufficient_shape(const GeneratorSet& g);

// The smallest generators (those of minimal leading exponent) must each be a
// single CNF term; a multi-term offender yields an antichain of its natural
// multiples at level ebar+1.
struct NecessaryResult {
  bool pass;
  CnfOrdinal offender;              // meaningful when !pass
  std::vector<CnfOrdinal> witness;  // verified pairwise incomparable
};

NecessaryResult necessary_condition(const GeneratorSet& g, int multiples = 4,
                                    long coeff_bound = 6);

// Searches the view at the given level for a pairwise-incomparable family
//   { b (+) d (x) k : 0 <= k < size }
// with base b and step d nonzero view elements (such a family extends to an
// infinite antichain by the same differences). Scans (b, d) pairs in
// ascending element order; incomparability must be certified, not Unknown.
std::optional<std::vector<CnfOrdinal>> find_antichain(const GeneratorSet& g,
                                                      const CnfOrdinal& level,
                                                      int size, long coeff_bound,
                                                      long node_budget = 100000,
                                                      size_t search_cap = 4000);

struct WpogVerdict {
  enum class Status { IsWpog, NotWpog, Inconclusive };
  Status status;
  std::string reason;
  std::vector<CnfOrdinal> witness;  // antichain when NotWpog
  CnfOrdinal level_checked;
  long coeff_bound = 0;
  int size = 0;
};

// Pipeline: shape certificate, then the necessary condition, then bounded
// antichain search at level ebar+1.
WpogVerdict wpog_verdict(const GeneratorSet& g, long coeff_bound = 6,
                         int antichain_size = 4, long node_budget = 100000,
                         size_t search_cap = 4000);

}  // namespace ordchomp
