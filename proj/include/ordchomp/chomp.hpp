#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordchomp/monoid.hpp"
#include "ordchomp/poset.hpp"

namespace ordchomp {

enum class Player { A, B };

struct Verdict {
  Player winner;
  std::optional<std::string> winning_move;  // label, present for an A verdict
  enum class Quality { Exact, BoundedScan };
  Quality quality = Quality::Exact;
  long bound = 0;  // scan bound for BoundedScan verdicts
};

// A Chomp position: the subset of poset elements still alive. Players
// alternately remove an element together with its up-set; whoever removes
// the global minimum loses.
struct Position {
  std::shared_ptr<const FinitePoset> poset;
  std::vector<uint64_t> alive;

  bool is_alive(int i) const { return (alive[i / 64] >> (i % 64)) & 1; }
  size_t count() const;
};

Position full_position(std::shared_ptr<const FinitePoset> poset);

// Removes x and its up-set; throws DeadElement when x is not alive.
Position apply_move(const Position& p, int x);

// Exact memoized minimax. Positions are cached by alive-set and, across
// isomorphic branches, by a refinement-stabilized order profile with an
// exact isomorphism check on collisions.
class ChompSolver {
 public:
  explicit ChompSolver(std::shared_ptr<const FinitePoset> poset);

  bool mover_wins(const std::vector<uint64_t>& alive);
  // Winner with optimal play, mover = A. A winning move is the
  // compare-least (lowest-index) one.
  Verdict solve(const Position& p);
  std::optional<int> best_move(const Position& p);

 private:
  struct VecHash {
    size_t operator()(const std::vector<uint64_t>& v) const;
  };
  struct ProfileEntry {
    std::vector<uint64_t> alive;
    std::vector<uint64_t> labels;  // sorted WL labels
    bool win;
  };
  std::vector<uint64_t> wl_labels(const std::vector<uint64_t>& alive);
  bool isomorphic(const std::vector<uint64_t>& alive_a,
                  const std::vector<uint64_t>& labels_a,
                  const std::vector<uint64_t>& alive_b,
                  const std::vector<uint64_t>& labels_b);

  std::shared_ptr<const FinitePoset> poset_;
  std::unordered_map<std::vector<uint64_t>, bool, VecHash> exact_;
  std::unordered_map<uint64_t, std::vector<ProfileEntry>> profile_;
};

// The exact finite position of the semigroup Chomp game after first move a:
// alive = { b in S : b < a } plus { a+g in S : g a gap }. Labels are the
// decimal values.
Position semigroup_position_after(const GeneratorSet& g, uint64_t a);

// sigma = 1: try each first move a <= move_bound in ascending order and solve
// the remaining finite position exactly; an A verdict is Exact, a B verdict is
// BoundedScan. move_bound <= 0 selects 4 * (frobenius + max generator).
// sigma >= 2: solve the whole truncated view position; always BoundedScan.
Verdict scan_first_moves(const GeneratorSet& g, const CnfOrdinal& sigma,
                         long move_bound = 0, long coeff_bound = 2);

// Builds the truncated level-2 poset over elements w*u+v and naturals v with
// u, v semigroup members at most u_cap resp. v_cap.
std::shared_ptr<const FinitePoset> sigma2_truncation(const GeneratorSet& g,
                                                     uint64_t u_cap, uint64_t v_cap);

// Second-player strategy for level-2 Chomp over a maximal-embedding-dimension
// semigroup that is a second-player win at level 1: answer a move w*u+v with
// w*partner(u)+v where partner pairs the levels of each layer, wipe a level
// remnant when the partner level is outside the truncation, and fall back to
// exact solving on finite collapses.
class MirrorAgent {
 public:
  MirrorAgent(const GeneratorSet& g, std::shared_ptr<const FinitePoset> poset);

  // Index of the response in the position reached after the adversary's
  // move; never the minimum unless nothing else is alive.
  int respond(const Position& after_adversary, int adversary_move);

 private:
  int fallback(const Position& p);

  std::shared_ptr<const FinitePoset> poset_;
  ChompSolver solver_;
  std::vector<uint64_t> level_of_;  // per element: u of w*u+v (0 for naturals)
  std::vector<uint64_t> value_of_;  // per element: v
  std::unordered_map<uint64_t, uint64_t> partner_;  // level pairing
};

}  // namespace ordchomp
