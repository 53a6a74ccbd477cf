#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpolis/finite_space.hpp"
#include "qpolis/metric.hpp"
#include "qpolis/rng.hpp"

namespace qpolis {

// --- histories and referee -----------------------------------------------------

struct MoveI {
  PointSet open = 0;
  std::uint32_t point = 0;
};

struct GameRound {
  MoveI i;
  PointSet ii = 0;
  bool has_ii = false;
};

enum class Offender { None, PlayerI, PlayerII };

/// Record of a convergent-strong-Choquet run. Legality invariants: I plays
/// open U_n containing its point with U_n inside II's previous move; II
/// replies with an open V_n, x_n in V_n inside U_n. An illegal move ends the
/// game and loses for the offender.
struct GameHistory {
  std::vector<GameRound> rounds;
  Offender offender = Offender::None;
  std::uint32_t offending_round = 0;
  bool empty_space = false;  // I had no first move

  bool legal() const { return offender == Offender::None; }
};

/// II's strategies are pure functions of the visible history (side games are
/// recomputed from it), so runs replay deterministically.
struct StrategyII {
  std::string spec;
  std::function<PointSet(const FiniteSpace&, const GameHistory&)> move;
};

struct StrategyI {
  std::string spec;
  std::function<std::optional<MoveI>(const FiniteSpace&, const GameHistory&)> move;
};

GameHistory play(const FiniteSpace& x, const StrategyI& si, const StrategyII& sii,
                 std::uint32_t rounds);

/// Post-hoc legality audit of a history against the invariants.
bool history_legal(const FiniteSpace& x, const GameHistory& h);

// --- winning conditions -----------------------------------------------------------

enum class Verdict { IIWins, IWins, Undecided };

/// Convergent condition at finite scale: II wins once the recorded replies
/// stabilize at the minimal open neighborhood of some point (the played
/// opens then form a neighborhood basis); undecided before that. Illegal
/// histories are decided by the legality flags.
Verdict winner_convergent(const FiniteSpace& x, const GameHistory& h);

/// Strong condition: nonempty intersection of the replies, certified by an
/// observed stabilization. A convergent win is always a strong win.
Verdict winner_strong(const FiniteSpace& x, const GameHistory& h);

// --- strategies ---------------------------------------------------------------------

/// II plays the minimal open neighborhood of I's point; on a finite T0 space
/// this wins every legal run within |X| distinct moves.
StrategyII strat_finite(const FiniteSpace& x);

/// Seeded adversary: any legal (open, point) move, chosen pseudo-randomly.
StrategyI strat_i_random(std::uint64_t seed);

/// I keeps playing the given point with its minimal neighborhood.
StrategyI strat_i_fixed(std::uint32_t point);

/// Subspace data for the Pi^0_2 strategy: the ambient space, the relation
/// pairs (A_n, B_n) of ambient opens, and the carved subspace.
struct Pi02Game {
  FiniteSpace ambient;
  std::vector<std::pair<PointSet, PointSet>> rels;
  FiniteSpace sub;
  std::vector<std::uint32_t> embed;  // sub point -> ambient point
};

Pi02Game pi02_game(const FiniteSpace& ambient,
                   const std::vector<std::pair<PointSet, PointSet>>& rels);

/// II on the subspace, relaying to a winning ambient strategy through the
/// bookkeeping choices (i)-(iii): the relayed open sits inside the previous
/// side reply and inside every B_n already triggered by the current point.
/// SIDE_GAME_ILLEGAL when the ambient strategy breaks legality.
StrategyII strat_pi02(const Pi02Game& g, const StrategyII& ambient);

/// II on a finite product, running one side game per factor and bookkeeping
/// strictly increasing coordinates m_k (the tail behaves as one-point
/// factors, so m_k keeps growing past the real factors).
StrategyII strat_product(const std::vector<FiniteSpace>& factors,
                         const ProductSpace& prod,
                         const std::vector<StrategyII>& strategies);

/// II on the image of a continuous open surjection, lifting I's moves
/// through the map and pushing the side replies forward.
StrategyII strat_open_image(const FiniteMap& f, const StrategyII& domain);

/// The normalization lemma: the output plays only basis elements, and its
/// reply depends on I's current move, the open sets of I's previous moves and
/// II's previous moves - not on I's previous points (reconstructed as the
/// least compatible points in the fixed enumeration order).
StrategyII normalize_strategy(const FiniteSpace& x, const StrategyII& s,
                              const std::vector<PointSet>& basis);

// --- tree extraction ------------------------------------------------------------------

/// Finite truncation of the strategy tree: sequences alternate I's basis
/// indices and II's reply indices; maximal branches carry the point whose
/// minimal neighborhood the run has stabilized at, when it has.
struct GameTree {
  std::vector<PointSet> basis;
  std::set<std::vector<std::uint32_t>> nodes;  // includes the empty sequence
  std::map<std::vector<std::uint32_t>, std::optional<std::uint32_t>> branch_point;
};

GameTree extract_tree(const FiniteSpace& x, const StrategyII& normalized,
                      const std::vector<PointSet>& basis, std::uint32_t depth);

// --- the metric game ----------------------------------------------------------------------

/// Formal-ball rendering of the game on a metric completion: moves are balls,
/// I's points are elements of D, legality is formal inclusion.
struct MetricMoveI {
  Ball ball;
  std::size_t point = 0;  // index into D
};

struct MetricRound {
  MetricMoveI i;
  Ball ii;
};

struct MetricRunReport {
  std::vector<MetricRound> rounds;
  bool legal = true;
  bool radii_shrink = true;    // II's n-th radius <= 2^-n
  bool centers_cauchy = true;  // d(c_n, c_m) <= 2^-(n-1) for m >= n
  bool formal_nesting = true;  // II's reply formally inside I's move
};

using MetricStrategyI = std::function<std::optional<MetricMoveI>(
    const MetricData&, const std::vector<MetricRound>&)>;

MetricStrategyI metric_i_random(std::uint64_t seed);
MetricStrategyI metric_i_fixed(std::size_t point);

/// Runs the ball-halving strategy for II: reply radius at most half the
/// slack inside I's ball and at most 2^-n; emits the shrinking/Cauchy
/// certificate.
MetricRunReport metric_play(const MetricData& d, const MetricStrategyI& si,
                            std::uint32_t rounds);

}  // namespace qpolis
