#include "ordchomp/chomp.hpp"

#include <algorithm>
#include <bit>

namespace ordchomp {

namespace {

uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename Fn>
void for_each_bit(const uint64_t* words, int nwords, Fn&& fn) {
  for (int w = 0; w < nwords; ++w) {
    uint64_t m = words[w];
    while (m) {
      int b = std::countr_zero(m);
      m &= m - 1;
      fn(w * 64 + b);
    }
  }
}

std::vector<char> sieve_members(const std::vector<Coeff>& gens, uint64_t limit) {
  std::vector<uint64_t> gs;
  for (const Coeff& g : gens) gs.push_back(g.convert_to<uint64_t>());
  std::vector<char> in(limit + 1, 0);
  in[0] = 1;
  for (uint64_t v = 1; v <= limit; ++v)
    for (uint64_t g : gs)
      if (g <= v && in[v - g]) {
        in[v] = 1;
        break;
      }
  return in;
}

}  // namespace

size_t Position::count() const {
  size_t c = 0;
  for (uint64_t w : alive) c += static_cast<size_t>(std::popcount(w));
  return c;
}

Position full_position(std::shared_ptr<const FinitePoset> poset) {
  Position p{poset, std::vector<uint64_t>(poset->words(), 0)};
  int n = poset->size();
  for (int i = 0; i < n; ++i) p.alive[i / 64] |= 1ULL << (i % 64);
  return p;
}

Position apply_move(const Position& p, int x) {
  if (x < 0 || x >= p.poset->size() || !p.is_alive(x))
    throw DeadElement("move on dead element " +
                      (x >= 0 && x < p.poset->size() ? p.poset->label(x)
                                                     : std::to_string(x)));
  Position q = p;
  const uint64_t* up = p.poset->up_row(x);
  for (int w = 0; w < p.poset->words(); ++w) q.alive[w] &= ~up[w];
  return q;
}

size_t ChompSolver::VecHash::operator()(const std::vector<uint64_t>& v) const {
  uint64_t h = 0x8a5cd789635d2dffULL;
  for (uint64_t w : v) h = mix(h ^ w);
  return h;
}

ChompSolver::ChompSolver(std::shared_ptr<const FinitePoset> poset)
    : poset_(std::move(poset)) {}

std::vector<uint64_t> ChompSolver::wl_labels(const std::vector<uint64_t>& alive) {
  int n = poset_->size(), words = poset_->words();
  std::vector<uint64_t> lab(n, 0), next(n, 0), tmp(words);
  std::vector<int> verts;
  for_each_bit(alive.data(), words, [&](int v) { verts.push_back(v); });
  for (int v : verts) lab[v] = 0x517cc1b727220a95ULL;
  for (int round = 0; round < 3; ++round) {
    for (int v : verts) {
      uint64_t ups = 0, downs = 0;
      for (int w = 0; w < words; ++w) tmp[w] = poset_->up_row(v)[w] & alive[w];
      for_each_bit(tmp.data(), words, [&](int u) { ups += mix(lab[u]); });
      for (int w = 0; w < words; ++w) tmp[w] = poset_->down_row(v)[w] & alive[w];
      for_each_bit(tmp.data(), words, [&](int u) { downs += mix(lab[u]); });
      next[v] = mix(lab[v] ^ mix(ups * 3 + 1) ^ mix(downs * 5 + 2));
    }
    for (int v : verts) lab[v] = next[v];
  }
  std::vector<uint64_t> out;
  out.reserve(verts.size());
  for (int v : verts) out.push_back(lab[v]);
  return out;  // parallel to ascending alive vertex order
}

bool ChompSolver::isomorphic(const std::vector<uint64_t>& alive_a,
                             const std::vector<uint64_t>& labels_a,
                             const std::vector<uint64_t>& alive_b,
                             const std::vector<uint64_t>& labels_b) {
  int words = poset_->words();
  std::vector<int> va, vb;
  for_each_bit(alive_a.data(), words, [&](int v) { va.push_back(v); });
  for_each_bit(alive_b.data(), words, [&](int v) { vb.push_back(v); });
  if (va.size() != vb.size()) return false;
  size_t n = va.size();
  std::vector<int> map_ab(n, -1);
  std::vector<char> used(n, 0);
  // Match vertices of a to label-compatible vertices of b, checking relation
  // consistency incrementally.
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == n) return true;
    for (size_t j = 0; j < n; ++j) {
      if (used[j] || labels_a[i] != labels_b[j]) continue;
      bool ok = true;
      for (size_t k = 0; k < i && ok; ++k) {
        size_t jk = static_cast<size_t>(map_ab[k]);
        if (poset_->leq(va[i], va[k]) != poset_->leq(vb[j], vb[jk]) ||
            poset_->leq(va[k], va[i]) != poset_->leq(vb[jk], vb[j]))
          ok = false;
      }
      if (!ok) continue;
      used[j] = 1;
      map_ab[i] = static_cast<int>(j);
      if (self(self, i + 1)) return true;
      used[j] = 0;
      map_ab[i] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

bool ChompSolver::mover_wins(const std::vector<uint64_t>& alive) {
  int words = poset_->words();
  int min = poset_->min_index();
  if (auto it = exact_.find(alive); it != exact_.end()) return it->second;

  std::vector<uint64_t> labels = wl_labels(alive);
  std::vector<uint64_t> sorted_labels = labels;
  std::sort(sorted_labels.begin(), sorted_labels.end());
  uint64_t pkey = mix(sorted_labels.size());
  for (uint64_t l : sorted_labels) pkey = mix(pkey ^ l);
  if (auto it = profile_.find(pkey); it != profile_.end())
    for (const ProfileEntry& e : it->second)
      if (e.labels == sorted_labels && isomorphic(alive, labels, e.alive, wl_labels(e.alive))) {
        exact_.emplace(alive, e.win);
        return e.win;
      }

  bool win = false;
  size_t cnt = 0;
  for (uint64_t w : alive) cnt += static_cast<size_t>(std::popcount(w));
  if (cnt > 1) {
    std::vector<uint64_t> child(words);
    for (int w = 0; w < words && !win; ++w) {
      uint64_t m = alive[w];
      while (m && !win) {
        int b = std::countr_zero(m);
        m &= m - 1;
        int x = w * 64 + b;
        if (x == min) continue;
        const uint64_t* up = poset_->up_row(x);
        for (int ww = 0; ww < words; ++ww) child[ww] = alive[ww] & ~up[ww];
        if (!mover_wins(child)) win = true;
      }
    }
  }
  exact_.emplace(alive, win);
  profile_[pkey].push_back({alive, sorted_labels, win});
  return win;
}

std::optional<int> ChompSolver::best_move(const Position& p) {
  int min = p.poset->min_index();
  if (p.count() <= 1) return std::nullopt;
  std::vector<uint64_t> child(p.poset->words());
  std::optional<int> result;
  for_each_bit(p.alive.data(), p.poset->words(), [&](int x) {
    if (result || x == min) return;
    const uint64_t* up = p.poset->up_row(x);
    for (int w = 0; w < p.poset->words(); ++w) child[w] = p.alive[w] & ~up[w];
    if (!mover_wins(child)) result = x;
  });
  return result;
}

Verdict ChompSolver::solve(const Position& p) {
  Verdict v{Player::B, std::nullopt, Verdict::Quality::Exact, 0};
  if (mover_wins(p.alive)) {
    v.winner = Player::A;
    if (auto m = best_move(p)) v.winning_move = p.poset->label(*m);
  }
  return v;
}

Position semigroup_position_after(const GeneratorSet& g, uint64_t a) {
  if (!g.is_numeric()) throw Error("semigroup positions need natural generators");
  std::vector<uint64_t> gap_list = gaps(g);
  uint64_t f = gap_list.empty() ? 0 : gap_list.back();
  uint64_t limit = a + f + 1;
  std::vector<char> in = sieve_members(g.numeric_part(), limit);
  if (a == 0 || a > limit || !in[a]) throw NotInSemigroup(std::to_string(a));
  std::vector<uint64_t> values;
  for (uint64_t b = 0; b < a; ++b)
    if (in[b]) values.push_back(b);
  for (uint64_t gp : gap_list)
    if (a + gp <= limit && in[a + gp]) values.push_back(a + gp);
  std::vector<std::string> labels;
  for (uint64_t v : values) labels.push_back(print(CnfOrdinal::natural(v)));
  auto rel = [&](int i, int j) {
    uint64_t x = values[static_cast<size_t>(i)], y = values[static_cast<size_t>(j)];
    return x <= y && in[y - x];
  };
  auto poset = std::make_shared<const FinitePoset>(std::move(labels), rel);
  return full_position(poset);
}

Verdict scan_first_moves(const GeneratorSet& g, const CnfOrdinal& sigma,
                         long move_bound, long coeff_bound) {
  if (sigma == CnfOrdinal::natural(1)) {
    std::vector<uint64_t> gap_list = gaps(g);
    uint64_t f = gap_list.empty() ? 0 : gap_list.back();
    uint64_t maxg = g.numeric_part().back().convert_to<uint64_t>();
    uint64_t bound = move_bound > 0 ? static_cast<uint64_t>(move_bound) : 4 * (f + maxg);
    std::vector<char> in = sieve_members(g.numeric_part(), bound);
    for (uint64_t a = 1; a <= bound; ++a) {
      if (!in[a]) continue;
      Position pos = semigroup_position_after(g, a);
      ChompSolver solver(pos.poset);
      if (!solver.mover_wins(pos.alive))
        return {Player::A, print(CnfOrdinal::natural(a)), Verdict::Quality::Exact,
                static_cast<long>(bound)};
    }
    return {Player::B, std::nullopt, Verdict::Quality::BoundedScan,
            static_cast<long>(bound)};
  }
  // Truncated higher-level game: solve the whole bounded view.
  MonoidView view = enumerate_monoid(g, sigma, coeff_bound, 20000);
  size_t n = view.elements.size();
  int words = static_cast<int>((n + 63) / 64);
  std::vector<std::vector<uint64_t>> rows(n, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (leq(view, view.elements[i], view.elements[j]) == Tri::True)
        rows[i][j / 64] |= 1ULL << (j % 64);
  // Certified-membership gaps can break transitivity at the truncation edge;
  // close the relation (still antisymmetric: it refines the ordinal order).
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if ((rows[i][k / 64] >> (k % 64)) & 1)
        for (int w = 0; w < words; ++w) rows[i][w] |= rows[k][w];
  std::vector<std::string> labels;
  for (const auto& e : view.elements) labels.push_back(print(e));
  auto rel = [&](int i, int j) {
    return (rows[static_cast<size_t>(i)][j / 64] >> (j % 64)) & 1;
  };
  auto poset = std::make_shared<const FinitePoset>(std::move(labels), rel);
  ChompSolver solver(poset);
  Verdict v = solver.solve(full_position(poset));
  v.quality = Verdict::Quality::BoundedScan;
  v.bound = coeff_bound;
  return v;
}

std::shared_ptr<const FinitePoset> sigma2_truncation(const GeneratorSet& g,
                                                     uint64_t u_cap, uint64_t v_cap) {
  if (!g.is_numeric()) throw Error("truncation needs natural generators");
  uint64_t limit = std::max(u_cap, v_cap);
  std::vector<char> in = sieve_members(g.numeric_part(), limit);
  std::vector<std::pair<uint64_t, uint64_t>> elems;  // (u, v); u = 0 is the bottom copy
  for (uint64_t v = 0; v <= v_cap; ++v)
    if (in[v]) elems.emplace_back(0, v);
  for (uint64_t u = 1; u <= u_cap; ++u) {
    if (!in[u]) continue;
    for (uint64_t v = 0; v <= v_cap; ++v)
      if (in[v]) elems.emplace_back(u, v);
  }
  std::vector<std::string> labels;
  for (auto [u, v] : elems) {
    CnfOrdinal o = natural_sum(natural_product(omega_power(CnfOrdinal::natural(1)),
                                               CnfOrdinal::natural(u)),
                               CnfOrdinal::natural(v));
    labels.push_back(print(o));
  }
  auto rel = [&](int i, int j) {
    auto [ua, va] = elems[static_cast<size_t>(i)];
    auto [ub, vb] = elems[static_cast<size_t>(j)];
    if (ua == ub) return va <= vb && in[vb - va];
    if (ua > ub) return false;
    if (ua == 0) return true;  // naturals sit below every level element
    return static_cast<bool>(in[ub - ua]);
  };
  return std::make_shared<const FinitePoset>(std::move(labels), rel);
}

MirrorAgent::MirrorAgent(const GeneratorSet& g,
                         std::shared_ptr<const FinitePoset> poset)
    : poset_(poset), solver_(poset) {
  if (!g.is_numeric()) throw NotApplicable("mirror agent needs natural generators");
  const std::vector<Coeff>& p = g.numeric_part();
  uint64_t n = p.front().convert_to<uint64_t>();
  if (p.size() != n) throw NotApplicable("not of maximal embedding dimension");
  if (n % 2 != 0) throw NotApplicable("mirror pairing needs an even generator count");
  std::vector<uint64_t> pv;
  for (const Coeff& c : p) pv.push_back(c.convert_to<uint64_t>());
  level_of_.resize(static_cast<size_t>(poset_->size()));
  value_of_.resize(static_cast<size_t>(poset_->size()));
  for (int i = 0; i < poset_->size(); ++i) {
    CnfOrdinal o = parse(poset_->label(i));
    uint64_t u = 0, v = 0;
    for (const auto& t : o.terms()) {
      if (t.exponent.is_zero())
        v = t.coefficient.convert_to<uint64_t>();
      else if (t.exponent == CnfOrdinal::natural(1))
        u = t.coefficient.convert_to<uint64_t>();
      else
        throw NotApplicable("poset is not a level-2 truncation");
    }
    level_of_[static_cast<size_t>(i)] = u;
    value_of_[static_cast<size_t>(i)] = v;
    if (u == 0) continue;
    // u lies in layer k at slot i where u = (k-1)n + p_i; partner the slot
    // with its neighbour (0<->1, 2<->3, ...).
    for (size_t s = 0; s < pv.size(); ++s)
      if (u % n == pv[s] % n) {
        uint64_t k1n = u - pv[s];  // (k-1)*n
        partner_[u] = k1n + pv[s ^ 1];
        break;
      }
  }
}

int MirrorAgent::respond(const Position& after_adversary, int adversary_move) {
  uint64_t u = level_of_[static_cast<size_t>(adversary_move)];
  uint64_t v = value_of_[static_cast<size_t>(adversary_move)];
  if (u > 0) {
    auto it = partner_.find(u);
    if (it != partner_.end()) {
      for (int i = 0; i < poset_->size(); ++i)
        if (level_of_[static_cast<size_t>(i)] == it->second &&
            value_of_[static_cast<size_t>(i)] == v && after_adversary.is_alive(i))
          return i;
    }
    // Truncation edge: wipe what remains of the unpaired level.
    int best = -1;
    for (int i = 0; i < poset_->size(); ++i)
      if (level_of_[static_cast<size_t>(i)] == u && after_adversary.is_alive(i) &&
          (best < 0 || value_of_[static_cast<size_t>(i)] < value_of_[static_cast<size_t>(best)]))
        best = i;
    if (best >= 0) return best;
  }
  return fallback(after_adversary);
}

int MirrorAgent::fallback(const Position& p) {
  if (auto m = solver_.best_move(p)) return *m;
  int min = p.poset->min_index();
  for (int i = 0; i < p.poset->size(); ++i)
    if (i != min && p.is_alive(i)) return i;
  if (p.is_alive(min)) return min;  // forced loss
  throw Error("no legal response");
}

}  // namespace ordchomp
