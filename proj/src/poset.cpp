#include "ordchomp/poset.hpp"

#include <sstream>

namespace ordchomp {

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::function<bool(int, int)>& leq_fn)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
  if (n_ == 0) throw Error("poset must be nonempty");
  words_ = (n_ + 63) / 64;
  up_.assign(static_cast<size_t>(n_) * words_, 0);
  down_.assign(static_cast<size_t>(n_) * words_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (leq_fn(i, j)) {
        up_[static_cast<size_t>(i) * words_ + j / 64] |= 1ULL << (j % 64);
        down_[static_cast<size_t>(j) * words_ + i / 64] |= 1ULL << (i % 64);
      }
  for (int i = 0; i < n_; ++i) {
    if (!leq(i, i)) throw Error("relation is not reflexive");
    for (int j = 0; j < n_; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) throw Error("relation is not antisymmetric");
      if (leq(i, j)) {
        // up(j) must lie inside up(i)
        const uint64_t* ui = up_row(i);
        const uint64_t* uj = up_row(j);
        for (int w = 0; w < words_; ++w)
          if (uj[w] & ~ui[w]) throw Error("relation is not transitive");
      }
    }
    bool below_all = true;
    for (int j = 0; j < n_ && below_all; ++j)
      if (!leq(i, j)) below_all = false;
    if (below_all) min_ = i;
  }
  if (min_ < 0) throw Error("poset has no global minimum");
}

int FinitePoset::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[static_cast<size_t>(i)] == label) return i;
  return -1;
}

FinitePoset lex_product(const FinitePoset& p, const FinitePoset& t) {
  int nt = t.size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(p.size()) * nt);
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < nt; ++j)
      labels.push_back("(" + p.label(i) + "," + t.label(j) + ")");
  auto rel = [&](int a, int b) {
    int pa = a / nt, qa = a % nt, pb = b / nt, qb = b % nt;
    if (pa == pb) return t.leq(qa, qb);
    return p.leq(pa, pb);
  };
  return FinitePoset(std::move(labels), rel);
}

FinitePoset power(const FinitePoset& p, int n, size_t size_cap) {
  if (n < 0) throw Error("power exponent must be nonnegative");
  FinitePoset acc({"*"}, [](int, int) { return true; });
  for (int i = 0; i < n; ++i) {
    if (static_cast<size_t>(acc.size()) * p.size() > size_cap)
      throw BoundTooLarge("poset power exceeds size cap");
    acc = lex_product(p, acc);
  }
  return acc;
}

FinitePoset twin_poset(const FinitePoset& t) {
  int nt = t.size();
  std::vector<std::string> labels{"min"};
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < nt; ++i)
      labels.push_back("(" + std::to_string(c) + "," + t.label(i) + ")");
  auto rel = [&](int a, int b) {
    if (a == 0) return true;
    if (b == 0) return false;
    int ca = (a - 1) / nt, ia = (a - 1) % nt;
    int cb = (b - 1) / nt, ib = (b - 1) % nt;
    return ca == cb && t.leq(ia, ib);
  };
  return FinitePoset(std::move(labels), rel);
}

std::string hasse_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n  rankdir=BT;\n";
  for (int i = 0; i < p.size(); ++i)
    out << "  n" << i << " [label=\"" << p.label(i) << "\"];\n";
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < p.size() && cover; ++k)
        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) cover = false;
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace ordchomp
