#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordchomp/errors.hpp"

namespace ordchomp {

using Coeff = boost::multiprecision::cpp_int;

enum class Ordering { LT, EQ, GT };

// An ordinal below epsilon_0 in Cantor normal form:
//   w^{e_1}*c_1 + ... + w^{e_k}*c_k
// with e_1 > e_2 > ... > e_k (each itself a CnfOrdinal) and c_i >= 1.
// The empty term list is the ordinal 0.
class CnfOrdinal {
 public:
  struct Term;  // { exponent: CnfOrdinal, coefficient: Coeff }, defined below

  CnfOrdinal() = default;  // zero

  static CnfOrdinal natural(const Coeff& n);
  // Validates strictly decreasing exponents and positive coefficients.
  static CnfOrdinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_natural() const;
  // The value of a natural-number ordinal; throws Error otherwise.
  Coeff as_natural() const;

 private:
  friend Ordering compare(const CnfOrdinal&, const CnfOrdinal&);
  std::vector<Term> terms_;
};

struct CnfOrdinal::Term {
  CnfOrdinal exponent;
  Coeff coefficient;
};

Ordering compare(const CnfOrdinal& a, const CnfOrdinal& b);

inline bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) {
  return compare(a, b) == Ordering::EQ;
}
inline bool operator!=(const CnfOrdinal& a, const CnfOrdinal& b) {
  return !(a == b);
}
inline bool operator<(const CnfOrdinal& a, const CnfOrdinal& b) {
  return compare(a, b) == Ordering::LT;
}
inline bool operator<=(const CnfOrdinal& a, const CnfOrdinal& b) {
  return compare(a, b) != Ordering::GT;
}

// Ordinary (non-commutative) ordinal addition.
CnfOrdinal ordinary_add(const CnfOrdinal& a, const CnfOrdinal& b);

// Hessenberg natural sum: termwise coefficient addition over the union of
// exponents.
CnfOrdinal natural_sum(const CnfOrdinal& a, const CnfOrdinal& b);

// Hessenberg natural product: natural sum over all term pairs of
// w^{e_i (+) f_j} * (c_i * d_j).
CnfOrdinal natural_product(const CnfOrdinal& a, const CnfOrdinal& b);

// The unique c with a + c = b; throws UnderflowError when a > b.
CnfOrdinal subtract(const CnfOrdinal& b, const CnfOrdinal& a);

// Leading exponent e_1; 0 for the ordinal 0.
CnfOrdinal leading_exp(const CnfOrdinal& a);

CnfOrdinal omega_power(const CnfOrdinal& a);

// Canonical ASCII form: "w^(w+1)*3+w*2+5", "w^2", "0", ...
std::string print(const CnfOrdinal& a);

// Accepts the grammar
//   ordinal := term ("+" term)* | "0"
//   term    := "w" ["^" exp] ["*" nat] | nat
//   exp     := nat | "(" ordinal ")"
// Non-normalized sums are folded left to right with ordinary addition.
CnfOrdinal parse(std::string_view text);

uint64_t hash_value(const CnfOrdinal& a);

struct CnfHash {
  size_t operator()(const CnfOrdinal& a) const { return hash_value(a); }
};
struct CnfEq {
  bool operator()(const CnfOrdinal& a, const CnfOrdinal& b) const {
    return a == b;
  }
};

}  // namespace ordchomp
