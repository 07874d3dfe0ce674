#include "ordchomp/cnf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ordchomp {

CnfOrdinal CnfOrdinal::natural(const Coeff& n) {
  if (n < 0) throw Error("natural ordinal from negative value");
  CnfOrdinal r;
  if (n > 0) r.terms_.push_back({CnfOrdinal{}, n});
  return r;
}

CnfOrdinal CnfOrdinal::from_terms(std::vector<Term> terms) {
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient <= 0) throw Error("CNF coefficient must be >= 1");
    if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != Ordering::GT)
      throw Error("CNF exponents must strictly decrease");
  }
  CnfOrdinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool CnfOrdinal::is_natural() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Coeff CnfOrdinal::as_natural() const {
  if (!is_natural()) throw Error("ordinal is not a natural number: " + print(*this));
  return terms_.empty() ? Coeff(0) : terms_[0].coefficient;
}

Ordering compare(const CnfOrdinal& a, const CnfOrdinal& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    Ordering e = compare(a.terms_[i].exponent, b.terms_[i].exponent);
    if (e != Ordering::EQ) return e;
    const Coeff& ca = a.terms_[i].coefficient;
    const Coeff& cb = b.terms_[i].coefficient;
    if (ca != cb) return ca < cb ? Ordering::LT : Ordering::GT;
  }
  if (a.terms_.size() == b.terms_.size()) return Ordering::EQ;
  // A proper prefix is smaller: the longer ordinal adds positive terms.
  return a.terms_.size() < b.terms_.size() ? Ordering::LT : Ordering::GT;
}

CnfOrdinal ordinary_add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  const CnfOrdinal& e = b.terms()[0].exponent;
  std::vector<CnfOrdinal::Term> out;
  size_t i = 0;
  while (i < a.terms().size() && compare(a.terms()[i].exponent, e) == Ordering::GT)
    out.push_back(a.terms()[i++]);
  Coeff lead = b.terms()[0].coefficient;
  if (i < a.terms().size() && a.terms()[i].exponent == e)
    lead += a.terms()[i].coefficient;
  out.push_back({e, lead});
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return CnfOrdinal::from_terms(std::move(out));
}

CnfOrdinal natural_sum(const CnfOrdinal& a, const CnfOrdinal& b) {
  std::vector<CnfOrdinal::Term> out;
  size_t i = 0, j = 0;
  while (i < a.terms().size() || j < b.terms().size()) {
    if (i == a.terms().size()) {
      out.push_back(b.terms()[j++]);
    } else if (j == b.terms().size()) {
      out.push_back(a.terms()[i++]);
    } else {
      Ordering c = compare(a.terms()[i].exponent, b.terms()[j].exponent);
      if (c == Ordering::GT)
        out.push_back(a.terms()[i++]);
      else if (c == Ordering::LT)
        out.push_back(b.terms()[j++]);
      else {
        out.push_back({a.terms()[i].exponent,
                       a.terms()[i].coefficient + b.terms()[j].coefficient});
        ++i;
        ++j;
      }
    }
  }
  return CnfOrdinal::from_terms(std::move(out));
}

CnfOrdinal natural_product(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (a.is_zero() || b.is_zero()) return CnfOrdinal{};
  struct ExpGreater {
    bool operator()(const CnfOrdinal& x, const CnfOrdinal& y) const {
      return compare(x, y) == Ordering::GT;
    }
  };
  std::map<CnfOrdinal, Coeff, ExpGreater> acc;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      acc[natural_sum(ta.exponent, tb.exponent)] += ta.coefficient * tb.coefficient;
  std::vector<CnfOrdinal::Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) out.push_back({e, c});
  return CnfOrdinal::from_terms(std::move(out));
}

CnfOrdinal subtract(const CnfOrdinal& b, const CnfOrdinal& a) {
  size_t i = 0;
  while (i < a.terms().size() && i < b.terms().size() &&
         a.terms()[i].exponent == b.terms()[i].exponent &&
         a.terms()[i].coefficient == b.terms()[i].coefficient)
    ++i;
  auto rest = [&](size_t from, const Coeff* head, const CnfOrdinal* head_exp) {
    std::vector<CnfOrdinal::Term> out;
    if (head) out.push_back({*head_exp, *head});
    out.insert(out.end(), b.terms().begin() + from, b.terms().end());
    return CnfOrdinal::from_terms(std::move(out));
  };
  if (i == a.terms().size()) return rest(i, nullptr, nullptr);  // a is a prefix of b
  if (i == b.terms().size())
    throw UnderflowError("subtract: " + print(a) + " > " + print(b));
  Ordering e = compare(a.terms()[i].exponent, b.terms()[i].exponent);
  if (e == Ordering::GT)
    throw UnderflowError("subtract: " + print(a) + " > " + print(b));
  if (e == Ordering::LT) return rest(i, nullptr, nullptr);
  const Coeff& ca = a.terms()[i].coefficient;
  const Coeff& cb = b.terms()[i].coefficient;
  if (ca > cb) throw UnderflowError("subtract: " + print(a) + " > " + print(b));
  Coeff d = cb - ca;
  return rest(i + 1, &d, &b.terms()[i].exponent);
}

CnfOrdinal leading_exp(const CnfOrdinal& a) {
  return a.is_zero() ? CnfOrdinal{} : a.terms()[0].exponent;
}

CnfOrdinal omega_power(const CnfOrdinal& a) {
  return CnfOrdinal::from_terms({{a, 1}});
}

std::string print(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out << "+";
    first = false;
    if (t.exponent.is_zero()) {
      out << t.coefficient;
      continue;
    }
    out << "w";
    if (t.exponent != CnfOrdinal::natural(1)) {
      if (t.exponent.is_natural())
        out << "^" << t.exponent.as_natural();
      else
        out << "^(" << print(t.exponent) << ")";
    }
    if (t.coefficient != 1) out << "*" << t.coefficient;
  }
  return out.str();
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Coeff nat() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a natural number");
    if (s[pos] == '0') fail("natural literals must not start with 0");
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return Coeff(std::string(s.substr(start, pos - start)));
  }

  CnfOrdinal term() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      CnfOrdinal exp = CnfOrdinal::natural(1);
      if (eat('^')) {
        if (eat('(')) {
          exp = ordinal();
          if (!eat(')')) fail("expected ')'");
        } else {
          exp = CnfOrdinal::natural(nat());
        }
      }
      Coeff c = 1;
      if (eat('*')) c = nat();
      return natural_product(omega_power(exp), CnfOrdinal::natural(c));
    }
    return CnfOrdinal::natural(nat());
  }

  CnfOrdinal ordinal() {
    skip_ws();
    if (pos < s.size() && s[pos] == '0') {
      ++pos;
      return CnfOrdinal{};
    }
    CnfOrdinal acc = term();
    while (eat('+')) acc = ordinary_add(acc, term());
    return acc;
  }
};

}  // namespace

CnfOrdinal parse(std::string_view text) {
  Parser p{text};
  CnfOrdinal r = p.ordinal();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

namespace {
uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

uint64_t hash_value(const CnfOrdinal& a) {
  uint64_t h = 0x2545f4914f6cdd1dULL;
  for (const auto& t : a.terms()) {
    h = mix(h ^ hash_value(t.exponent));
    // Hash the coefficient through its limbs; small values fit one word.
    uint64_t c = t.coefficient <= UINT64_MAX
                     ? t.coefficient.convert_to<uint64_t>()
                     : mix(std::hash<std::string>{}(t.coefficient.str()));
    h = mix(h ^ c);
  }
  return h;
}

}  // namespace ordchomp
