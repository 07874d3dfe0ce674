#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ordchomp/errors.hpp"

namespace ordchomp {

// A finite partial order with a global minimum, stored as bit-matrix rows.
// Relation and shape are validated on construction.
class FinitePoset {
 public:
  FinitePoset(std::vector<std::string> labels,
              const std::function<bool(int, int)>& leq_fn);

  int size() const { return n_; }
  int words() const { return words_; }
  bool leq(int i, int j) const {
    return (up_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1;
  }
  int min_index() const { return min_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  int index_of(const std::string& label) const;  // -1 when absent
  // Bitmask of { j : i <= j }, `words()` machine words.
  const uint64_t* up_row(int i) const { return up_.data() + static_cast<size_t>(i) * words_; }
  const uint64_t* down_row(int i) const {
    return down_.data() + static_cast<size_t>(i) * words_;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  int min_ = -1;
  std::vector<std::string> labels_;
  std::vector<uint64_t> up_;    // row i = up-set of i
  std::vector<uint64_t> down_;  // row i = down-set of i
};

// Lexicographic product: (p,q) <= (p',q') iff p < p' or (p = p' and q <= q').
FinitePoset lex_product(const FinitePoset& p, const FinitePoset& t);

// P^0 is a point; P^{n+1} = P x P^n lexicographically.
FinitePoset power(const FinitePoset& p, int n, size_t size_cap = 100000);

// Two disjoint copies of t above a fresh minimum.
FinitePoset twin_poset(const FinitePoset& t);

// Graphviz DOT text of the covering relation, bottom-up edges.
std::string hasse_dot(const FinitePoset& p, const std::string& name = "hasse");

}  // namespace ordchomp
