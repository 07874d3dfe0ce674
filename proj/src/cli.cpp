#include "ordchomp/cli.hpp"

#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ordchomp/chomp.hpp"
#include "ordchomp/cnf.hpp"
#include "ordchomp/errors.hpp"
#include "ordchomp/monoid.hpp"
#include "ordchomp/poset.hpp"
#include "ordchomp/wpog.hpp"

namespace ordchomp {

namespace {

GeneratorSet parse_gens(const std::string& list) {
  std::vector<CnfOrdinal> gens;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) gens.push_back(parse(item));
  return GeneratorSet(std::move(gens));
}

// Poset of the coefficient-bounded view, with the certified order closed
// transitively (Unknown memberships can otherwise leave gaps at the edge).
std::shared_ptr<const FinitePoset> view_poset(const MonoidView& view) {
  size_t n = view.elements.size();
  int words = static_cast<int>((n + 63) / 64);
  std::vector<std::vector<uint64_t>> rows(n, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (leq(view, view.elements[i], view.elements[j]) == Tri::True)
        rows[i][j / 64] |= 1ULL << (j % 64);
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if ((rows[i][k / 64] >> (k % 64)) & 1)
        for (int w = 0; w < words; ++w) rows[i][w] |= rows[k][w];
  std::vector<std::string> labels;
  for (const auto& e : view.elements) labels.push_back(print(e));
  auto rel = [&](int i, int j) {
    return static_cast<bool>((rows[static_cast<size_t>(i)][j / 64] >> (j % 64)) & 1);
  };
  return std::make_shared<const FinitePoset>(std::move(labels), rel);
}

int cmd_calc(const std::string& a, const std::string& op, const std::string& b,
             std::ostream& out) {
  CnfOrdinal x = parse(a), y = parse(b);
  if (op == "add") {
    out << print(ordinary_add(x, y)) << "\n";
  } else if (op == "nsum") {
    out << print(natural_sum(x, y)) << "\n";
  } else if (op == "nprod") {
    out << print(natural_product(x, y)) << "\n";
  } else if (op == "sub") {
    out << print(subtract(x, y)) << "\n";
  } else if (op == "cmp") {
    Ordering o = compare(x, y);
    out << (o == Ordering::LT ? "<" : o == Ordering::EQ ? "=" : ">") << "\n";
  } else {
    throw Error("unknown operation '" + op + "' (add|nsum|nprod|sub|cmp)");
  }
  return 0;
}

int cmd_wpog(const std::string& gens, long coeff_bound, int size,
             std::ostream& out) {
  WpogVerdict v = wpog_verdict(parse_gens(gens), coeff_bound, size);
  switch (v.status) {
    case WpogVerdict::Status::IsWpog:
      out << "wpog: yes (corollary)\n";
      out << "reason: " << v.reason << "\n";
      break;
    case WpogVerdict::Status::NotWpog:
      out << "wpog: no\n";
      out << "reason: " << v.reason << "\n";
      for (const auto& w : v.witness) out << print(w) << "\n";
      break;
    case WpogVerdict::Status::Inconclusive:
      out << "wpog: inconclusive (no antichain of size " << size
          << " within bound " << coeff_bound << ")\n";
      break;
  }
  out << "level-checked: " << print(v.level_checked) << "\n";
  return 0;
}

int cmd_solve(const std::string& gens, const std::string& sigma,
              long move_bound, long coeff_bound, std::ostream& out) {
  Verdict v = scan_first_moves(parse_gens(gens), parse(sigma), move_bound,
                               coeff_bound);
  out << "winner: " << (v.winner == Player::A ? "A" : "B") << "\n";
  if (v.quality == Verdict::Quality::Exact)
    out << "quality: exact\n";
  else
    out << "quality: bounded(" << v.bound << ")\n";
  if (v.winning_move) out << "winning-move: " << *v.winning_move << "\n";
  return 0;
}

int cmd_play(const std::string& gens, const std::string& sigma,
             long coeff_bound, std::ostream& out, std::istream& in) {
  MonoidView view =
      enumerate_monoid(parse_gens(gens), parse(sigma), coeff_bound, 20000);
  auto poset = view_poset(view);
  Position pos = full_position(poset);
  ChompSolver solver(poset);
  out << "board: " << poset->size() << " elements, you move first; taking 0 loses\n";
  std::string line;
  while (true) {
    out << "alive:";
    for (int i = 0; i < poset->size(); ++i)
      if (pos.is_alive(i)) out << " " << poset->label(i);
    out << "\nmove> " << std::flush;
    if (!std::getline(in, line)) return 0;
    int idx;
    try {
      idx = poset->index_of(print(parse(line)));
    } catch (const ParseError& e) {
      out << "unreadable move: " << e.what() << "\n";
      continue;
    }
    if (idx < 0 || !pos.is_alive(idx)) {
      out << "not an alive element\n";
      continue;
    }
    pos = apply_move(pos, idx);
    if (idx == poset->min_index()) {
      out << "you took the minimum - engine wins\n";
      return 0;
    }
    if (pos.count() == 0) {
      out << "engine has no element left - you win\n";
      return 0;
    }
    int reply = -1;
    if (auto m = solver.best_move(pos)) reply = *m;
    if (reply < 0)
      for (int i = 0; i < poset->size() && reply < 0; ++i)
        if (pos.is_alive(i) && i != poset->min_index()) reply = i;
    if (reply < 0) reply = poset->min_index();
    out << "engine plays " << poset->label(reply) << "\n";
    pos = apply_move(pos, reply);
    if (reply == poset->min_index()) {
      out << "engine took the minimum - you win\n";
      return 0;
    }
  }
}

int selftest(std::ostream& out, uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "pass" : "FAIL") << ": " << name << "\n";
    if (!ok) ++failures;
  };

  auto rand_ord = [&](auto&& self, int depth) -> CnfOrdinal {
    int nterms = static_cast<int>(rng() % 3);
    CnfOrdinal v = CnfOrdinal::natural(0);
    for (int i = 0; i < nterms; ++i) {
      CnfOrdinal e = depth > 0 ? self(self, depth - 1)
                               : CnfOrdinal::natural(rng() % 3);
      Coeff c(1 + rng() % 9);
      v = natural_sum(v, natural_product(omega_power(e), CnfOrdinal::natural(c)));
    }
    return v;
  };

  bool laws = true;
  for (int i = 0; i < 100 && laws; ++i) {
    CnfOrdinal a = rand_ord(rand_ord, 1), b = rand_ord(rand_ord, 1),
               c = rand_ord(rand_ord, 1);
    laws = natural_sum(a, b) == natural_sum(b, a) &&
           natural_product(a, b) == natural_product(b, a) &&
           natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c)) &&
           natural_product(natural_product(a, b), c) ==
               natural_product(a, natural_product(b, c)) &&
           natural_product(a, natural_sum(b, c)) ==
               natural_sum(natural_product(a, b), natural_product(a, c));
  }
  check("natural sum/product laws (100 random triples)", laws);

  bool roundtrip = true;
  for (int i = 0; i < 100 && roundtrip; ++i) {
    CnfOrdinal a = rand_ord(rand_ord, 1), b = rand_ord(rand_ord, 1);
    if (b < a) std::swap(a, b);
    roundtrip = ordinary_add(a, subtract(b, a)) == b;
  }
  check("subtraction round trip (100 random pairs)", roundtrip);

  check("parse/print round trip",
        print(parse("w^(w*2+1)*3+w^2*2+5")) == "w^(w*2+1)*3+w^2*2+5");

  WpogVerdict w1 = wpog_verdict(parse_gens("w+1"), 6, 3);
  check("{w+1} is not a wpog", w1.status == WpogVerdict::Status::NotWpog);
  WpogVerdict w2 = wpog_verdict(parse_gens("3,5"), 6, 2);
  check("{3,5} is a wpog", w2.status == WpogVerdict::Status::IsWpog);

  bool twins = true;
  for (int t = 0; t < 20 && twins; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) {
      r[i][i] = 1;
      r[0][i] = 1;
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) r[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (r[i][k])
          for (int j = 0; j < n; ++j)
            if (r[k][j]) r[i][j] = 1;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    FinitePoset base(labels, [&](int i, int j) { return r[i][j] != 0; });
    auto tp = std::make_shared<const FinitePoset>(twin_poset(base));
    ChompSolver solver(tp);
    twins = solver.solve(full_position(tp)).winner == Player::B;
  }
  check("twin posets are second-player wins (20 random)", twins);

  Verdict one = scan_first_moves(parse_gens("1"), CnfOrdinal::natural(1));
  check("Chomp on <1> at level 1: first player wins with move 1",
        one.winner == Player::A && one.winning_move == "1");

  out << (failures == 0 ? "selftest: all passed\n"
                        : "selftest: " + std::to_string(failures) + " failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
  CLI::App app{"Chomp on ordinal monoids: CNF arithmetic, monoid views, "
               "wpog verdicts, and exact game solving"};
  app.require_subcommand(1);

  std::string a, op, b;
  auto* calc = app.add_subcommand("calc", "Evaluate a binary CNF operation");
  calc->add_option("lhs", a, "left operand (CNF)")->required();
  calc->add_option("op", op, "add|nsum|nprod|sub|cmp")->required();
  calc->add_option("rhs", b, "right operand (CNF)")->required();

  std::string gens, sigma = "1", out_path;
  long coeff_bound = 6, move_bound = 0, node_budget = 100000;
  int size = 4;
  uint64_t seed = 1;

  auto* en = app.add_subcommand("enum", "List the bounded view of <gens>^sigma");
  en->add_option("--gens", gens, "comma-separated CNF generators")->required();
  en->add_option("--sigma", sigma, "level (CNF)");
  en->add_option("--coeff-bound", coeff_bound, "multiplier coefficient bound");
  en->add_option("--out", out_path, "write one element per line to this file");

  std::string qa, qb;
  auto* ord = app.add_subcommand("order", "Compare two elements in the monoid order");
  ord->add_option("--gens", gens, "comma-separated CNF generators")->required();
  ord->add_option("--sigma", sigma, "level (CNF)");
  ord->add_option("--coeff-bound", coeff_bound, "multiplier coefficient bound");
  ord->add_option("lhs", qa, "left element (CNF)")->required();
  ord->add_option("rhs", qb, "right element (CNF)")->required();

  auto* wp = app.add_subcommand("wpog", "Well-partial-order generator verdict");
  wp->add_option("--gens", gens, "comma-separated CNF generators")->required();
  wp->add_option("--coeff-bound", coeff_bound, "search coefficient bound");
  wp->add_option("--size", size, "antichain size sought");

  auto* so = app.add_subcommand("solve", "Solve Chomp on <gens>^sigma");
  so->add_option("--gens", gens, "comma-separated CNF generators")->required();
  so->add_option("--sigma", sigma, "level (CNF)");
  so->add_option("--move-bound", move_bound, "first-move scan bound (level 1)");
  so->add_option("--coeff-bound", coeff_bound, "truncation bound (level >= 2)");

  auto* pl = app.add_subcommand("play", "Interactive playout versus the engine");
  pl->add_option("--gens", gens, "comma-separated CNF generators")->required();
  pl->add_option("--sigma", sigma, "level (CNF)");
  pl->add_option("--coeff-bound", coeff_bound, "board truncation bound");

  auto* ha = app.add_subcommand("hasse", "DOT digraph of the covering relation");
  ha->add_option("--gens", gens, "comma-separated CNF generators")->required();
  ha->add_option("--sigma", sigma, "level (CNF)");
  ha->add_option("--coeff-bound", coeff_bound, "truncation bound");
  ha->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* st = app.add_subcommand("selftest", "Run the built-in check suite");
  st->add_option("--seed", seed, "random seed");
  (void)node_budget;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (calc->parsed()) return cmd_calc(a, op, b, out);
    if (en->parsed()) {
      MonoidView view =
          enumerate_monoid(parse_gens(gens), parse(sigma), coeff_bound, 100000);
      std::ofstream file;
      std::ostream* dst = &out;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error("cannot open " + out_path);
        dst = &file;
      }
      for (const auto& e : view.elements) *dst << print(e) << "\n";
      return 0;
    }
    if (ord->parsed()) {
      MonoidView view =
          enumerate_monoid(parse_gens(gens), parse(sigma), coeff_bound, 100000);
      Tri t = leq(view, parse(qa), parse(qb));
      out << print(parse(qa)) << " <= " << print(parse(qb)) << " : "
          << (t == Tri::True ? "true" : t == Tri::False ? "false" : "unknown")
          << "\n";
      return 0;
    }
    if (wp->parsed()) return cmd_wpog(gens, coeff_bound, size, out);
    if (so->parsed())
      return cmd_solve(gens, sigma, move_bound, coeff_bound, out);
    if (pl->parsed()) return cmd_play(gens, sigma, coeff_bound, out, in);
    if (ha->parsed()) {
      MonoidView view =
          enumerate_monoid(parse_gens(gens), parse(sigma), coeff_bound, 100000);
      auto poset = view_poset(view);
      std::string dot = hasse_dot(*poset);
      if (out_path.empty()) {
        out << dot;
      } else {
        std::ofstream file(out_path);
        if (!file) throw Error("cannot open " + out_path);
        file << dot;
      }
      return 0;
    }
    if (st->parsed()) return selftest(out, seed);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace ordchomp
