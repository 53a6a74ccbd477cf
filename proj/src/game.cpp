#include "qpolis/game.hpp"

#include <algorithm>

#include "qpolis/error.hpp"

namespace qpolis {

namespace {

bool legal_i(const FiniteSpace& x, const GameHistory& h, const MoveI& m) {
  if (!x.is_open(m.open) || m.open == 0) return false;
  if (m.point >= x.size() || !((m.open >> m.point) & 1)) return false;
  if (!h.rounds.empty()) {
    const GameRound& prev = h.rounds.back();
    if (!prev.has_ii || !subset(m.open, prev.ii)) return false;
  }
  return true;
}

bool legal_ii(const FiniteSpace& x, const GameRound& r, PointSet v) {
  return x.is_open(v) && ((v >> r.i.point) & 1) && subset(v, r.i.open);
}

std::optional<std::uint32_t> minimum_point(const FiniteSpace& x, PointSet v) {
  for (std::uint32_t p = 0; p < x.size(); ++p)
    if (((v >> p) & 1) && v == x.up(p)) return p;
  return std::nullopt;
}

}  // namespace

GameHistory play(const FiniteSpace& x, const StrategyI& si, const StrategyII& sii,
                 std::uint32_t rounds) {
  GameHistory h;
  for (std::uint32_t n = 0; n < rounds; ++n) {
    auto mi = si.move(x, h);
    if (!mi) {
      if (h.rounds.empty() && x.size() == 0) {
        h.empty_space = true;
      } else if (h.rounds.empty()) {
        // I resigned with legal moves available; treat as an illegal move.
        h.offender = Offender::PlayerI;
        h.offending_round = n;
      }
      return h;
    }
    if (!legal_i(x, h, *mi)) {
      h.offender = Offender::PlayerI;
      h.offending_round = n;
      return h;
    }
    h.rounds.push_back(GameRound{*mi, 0, false});
    PointSet v = sii.move(x, h);
    if (!legal_ii(x, h.rounds.back(), v)) {
      h.offender = Offender::PlayerII;
      h.offending_round = n;
      return h;
    }
    h.rounds.back().ii = v;
    h.rounds.back().has_ii = true;
  }
  if (rounds == 0 && x.size() == 0) h.empty_space = true;
  return h;
}

bool history_legal(const FiniteSpace& x, const GameHistory& h) {
  if (!h.legal()) return false;
  GameHistory replay;
  for (const GameRound& r : h.rounds) {
    if (!legal_i(x, replay, r.i)) return false;
    replay.rounds.push_back(GameRound{r.i, 0, false});
    if (!r.has_ii || !legal_ii(x, replay.rounds.back(), r.ii)) return false;
    replay.rounds.back().ii = r.ii;
    replay.rounds.back().has_ii = true;
  }
  return true;
}

Verdict winner_convergent(const FiniteSpace& x, const GameHistory& h) {
  if (h.empty_space) return Verdict::IIWins;
  if (h.offender == Offender::PlayerII) return Verdict::IWins;
  if (h.offender == Offender::PlayerI) return Verdict::IIWins;
  if (h.rounds.empty() || !h.rounds.back().has_ii) return Verdict::Undecided;
  PointSet v = h.rounds.back().ii;
  if (minimum_point(x, v)) return Verdict::IIWins;
  return Verdict::Undecided;
}

Verdict winner_strong(const FiniteSpace& x, const GameHistory& h) {
  if (h.empty_space) return Verdict::IIWins;
  if (h.offender == Offender::PlayerII) return Verdict::IWins;
  if (h.offender == Offender::PlayerI) return Verdict::IIWins;
  if (h.rounds.empty() || !h.rounds.back().has_ii) return Verdict::Undecided;
  PointSet v = h.rounds.back().ii;
  bool stabilized = minimum_point(x, v).has_value();
  if (!stabilized && h.rounds.size() >= 2)
    stabilized = h.rounds[h.rounds.size() - 2].ii == v;
  if (stabilized && v != 0) return Verdict::IIWins;
  return Verdict::Undecided;
}

StrategyII strat_finite(const FiniteSpace& x) {
  return StrategyII{"finite", [](const FiniteSpace& space, const GameHistory& h) {
                      return space.up(h.rounds.back().i.point);
                    }};
}

StrategyI strat_i_random(std::uint64_t seed) {
  return StrategyI{
      "random:" + std::to_string(seed),
      [seed](const FiniteSpace& x,
             const GameHistory& h) -> std::optional<MoveI> {
        PointSet bound = h.rounds.empty() ? x.full() : h.rounds.back().ii;
        std::vector<MoveI> candidates;
        for (PointSet u : x.opens()) {
          if (u == 0 || !subset(u, bound)) continue;
          for (std::uint32_t p = 0; p < x.size(); ++p)
            if ((u >> p) & 1) candidates.push_back(MoveI{u, p});
        }
        if (candidates.empty()) return std::nullopt;
        Rng rng(seed * 0x9e3779b9u + h.rounds.size() + 1);
        return candidates[rng.below(candidates.size())];
      }};
}

StrategyI strat_i_fixed(std::uint32_t point) {
  return StrategyI{"fixed:" + std::to_string(point),
                   [point](const FiniteSpace& x,
                           const GameHistory& h) -> std::optional<MoveI> {
                     if (point >= x.size()) return std::nullopt;
                     PointSet u = x.up(point);
                     if (!h.rounds.empty() && !subset(u, h.rounds.back().ii))
                       return std::nullopt;
                     return MoveI{u, point};
                   }};
}

Pi02Game pi02_game(const FiniteSpace& ambient,
                   const std::vector<std::pair<PointSet, PointSet>>& rels) {
  for (const auto& [a, b] : rels)
    require(ambient.is_open(a) && ambient.is_open(b), "BAD_CODE",
            "relation pair must consist of opens");
  PointSet y = ambient.full();
  for (std::uint32_t p = 0; p < ambient.size(); ++p)
    for (const auto& [a, b] : rels)
      if (((a >> p) & 1) && !((b >> p) & 1)) y &= ~(1ull << p);
  Pi02Game g{ambient, rels, FiniteSpace::empty(), {}};
  g.sub = subspace(ambient, y, &g.embed);
  return g;
}

StrategyII strat_pi02(const Pi02Game& g, const StrategyII& ambient) {
  Pi02Game game = g;
  StrategyII amb = ambient;
  return StrategyII{
      "pi02(" + ambient.spec + ")",
      [game, amb](const FiniteSpace& sub, const GameHistory& h) -> PointSet {
        // Largest ambient open whose trace sits inside the given sub-open.
        auto widen = [&](PointSet sub_open) {
          PointSet t = 0;
          for (PointSet o : game.ambient.opens()) {
            PointSet trace = 0;
            for (std::size_t i = 0; i < game.embed.size(); ++i)
              if ((o >> game.embed[i]) & 1) trace |= 1ull << i;
            if (subset(trace, sub_open)) t |= o;
          }
          return t;
        };
        GameHistory side;
        PointSet prev_side = game.ambient.full();
        PointSet reply = 0;
        for (std::size_t k = 0; k < h.rounds.size(); ++k) {
          const GameRound& r = h.rounds[k];
          std::uint32_t ax = game.embed[r.i.point];
          PointSet u2 = widen(r.i.open) & prev_side;
          for (std::size_t n = 0; n <= k && n < game.rels.size(); ++n)
            if ((game.rels[n].first >> ax) & 1) u2 &= game.rels[n].second;
          require(legal_i(game.ambient, side, MoveI{u2, ax}), "SIDE_GAME_ILLEGAL",
                  "relayed move is illegal in the ambient game");
          side.rounds.push_back(GameRound{MoveI{u2, ax}, 0, false});
          PointSet v2 = amb.move(game.ambient, side);
          require(legal_ii(game.ambient, side.rounds.back(), v2),
                  "SIDE_GAME_ILLEGAL", "ambient strategy replied illegally");
          side.rounds.back().ii = v2;
          side.rounds.back().has_ii = true;
          prev_side = v2;
          PointSet trace = 0;
          for (std::size_t i = 0; i < game.embed.size(); ++i)
            if ((v2 >> game.embed[i]) & 1) trace |= 1ull << i;
          reply = trace;
        }
        return reply;
      }};
}

StrategyII strat_product(const std::vector<FiniteSpace>& factors,
                         const ProductSpace& prod,
                         const std::vector<StrategyII>& strategies) {
  require(factors.size() == strategies.size(), "BAD_STRATEGY",
          "one strategy per factor");
  std::string spec = "product(";
  for (std::size_t i = 0; i < strategies.size(); ++i)
    spec += (i ? "," : "") + strategies[i].spec;
  spec += ")";
  return StrategyII{
      spec,
      [factors, prod, strategies](const FiniteSpace& space,
                                  const GameHistory& h) -> PointSet {
        std::size_t real = factors.size();
        std::vector<GameHistory> sides(real);
        std::vector<PointSet> replies(real);
        for (std::size_t i = 0; i < real; ++i) replies[i] = factors[i].full();
        std::size_t m_prev = 0;
        PointSet reply = 0;
        for (std::size_t k = 0; k < h.rounds.size(); ++k) {
          const GameRound& r = h.rounds[k];
          auto tuple = prod.decode(r.i.point);
          // Least m making the minimal box around the point fit inside U;
          // the tail beyond the real factors is trivially one-point, so m_k
          // can keep increasing strictly.
          std::size_t least = real;
          for (std::size_t m = 0; m <= real; ++m) {
            PointSet box = 0;
            for (std::uint32_t p = 0; p < space.size(); ++p) {
              auto t = prod.decode(p);
              bool in = true;
              for (std::size_t i = 0; i < real && in; ++i)
                in = i < m ? factors[i].leq(tuple[i], t[i]) : true;
              if (in) box |= 1ull << p;
            }
            if (subset(box, r.i.open)) {
              least = m;
              break;
            }
          }
          std::size_t m_k = std::max(least, m_prev + 1);
          for (std::size_t i = 0; i < real && i < m_k; ++i) {
            MoveI mi{factors[i].up(tuple[i]), tuple[i]};
            require(legal_i(factors[i], sides[i], mi), "SIDE_GAME_ILLEGAL",
                    "relayed factor move is illegal");
            sides[i].rounds.push_back(GameRound{mi, 0, false});
            PointSet v = strategies[i].move(factors[i], sides[i]);
            require(legal_ii(factors[i], sides[i].rounds.back(), v),
                    "SIDE_GAME_ILLEGAL", "factor strategy replied illegally");
            sides[i].rounds.back().ii = v;
            sides[i].rounds.back().has_ii = true;
            replies[i] = v;
          }
          m_prev = m_k;
          reply = 0;
          for (std::uint32_t p = 0; p < space.size(); ++p) {
            auto t = prod.decode(p);
            bool in = true;
            for (std::size_t i = 0; i < real && in; ++i)
              in = (replies[i] >> t[i]) & 1;
            if (in) reply |= 1ull << p;
          }
        }
        return reply;
      }};
}

StrategyII strat_open_image(const FiniteMap& f, const StrategyII& domain) {
  require(f.is_continuous(), "NOT_CONTINUOUS", "map is not continuous");
  require(f.is_open_map(), "NOT_OPEN_MAP", "map is not open");
  require(f.is_surjective(), "NOT_SURJECTIVE", "map is not surjective");
  FiniteMap map = f;
  StrategyII dom = domain;
  return StrategyII{
      "open-image(" + domain.spec + ")",
      [map, dom](const FiniteSpace& target, const GameHistory& h) -> PointSet {
        GameHistory side;
        PointSet prev_side = map.source.full();
        PointSet reply = 0;
        for (std::size_t k = 0; k < h.rounds.size(); ++k) {
          const GameRound& r = h.rounds[k];
          PointSet candidates = map.fiber(r.i.point) & prev_side;
          require(candidates != 0, "SIDE_GAME_ILLEGAL",
                  "no lift of I's point into the side game");
          std::uint32_t xk = static_cast<std::uint32_t>(__builtin_ctzll(candidates));
          PointSet u2 = map.preimage(r.i.open) & prev_side;
          require(legal_i(map.source, side, MoveI{u2, xk}), "SIDE_GAME_ILLEGAL",
                  "lifted move is illegal in the side game");
          side.rounds.push_back(GameRound{MoveI{u2, xk}, 0, false});
          PointSet v2 = dom.move(map.source, side);
          require(legal_ii(map.source, side.rounds.back(), v2), "SIDE_GAME_ILLEGAL",
                  "domain strategy replied illegally");
          side.rounds.back().ii = v2;
          side.rounds.back().has_ii = true;
          prev_side = v2;
          reply = map.image(v2);
        }
        return reply;
      }};
}

StrategyII normalize_strategy(const FiniteSpace& x, const StrategyII& s,
                              const std::vector<PointSet>& basis) {
  StrategyII inner = s;
  std::vector<PointSet> bas = basis;
  return StrategyII{
      "normalize(" + s.spec + ")",
      [inner, bas](const FiniteSpace& space, const GameHistory& h) -> PointSet {
        // Basis-shrunk reply: least basis element around the point inside the
        // raw reply.
        auto shrunk = [&](const GameHistory& hist) -> PointSet {
          PointSet raw = inner.move(space, hist);
          std::uint32_t pt = hist.rounds.back().i.point;
          for (PointSet b : bas)
            if (((b >> pt) & 1) && subset(b, raw)) return b;
          return raw;  // basis misses the reply; only on foreign inputs
        };
        // Reconstruct least compatible previous points.
        GameHistory replay;
        for (std::size_t k = 0; k + 1 < h.rounds.size(); ++k) {
          const GameRound& r = h.rounds[k];
          std::uint32_t chosen = r.i.point;
          for (std::uint32_t p = 0; p < space.size(); ++p) {
            if (!((r.ii >> p) & 1) || !((r.i.open >> p) & 1)) continue;
            replay.rounds.push_back(GameRound{MoveI{r.i.open, p}, 0, false});
            PointSet v = shrunk(replay);
            replay.rounds.pop_back();
            if (v == r.ii) {
              chosen = p;
              break;
            }
          }
          replay.rounds.push_back(GameRound{MoveI{r.i.open, chosen}, r.ii, true});
        }
        replay.rounds.push_back(h.rounds.back());
        return shrunk(replay);
      }};
}

GameTree extract_tree(const FiniteSpace& x, const StrategyII& normalized,
                      const std::vector<PointSet>& basis, std::uint32_t depth) {
  GameTree tree;
  tree.basis = basis;
  tree.nodes.insert({});

  // Recursive expansion: a node ending after II's reply carries the replay
  // history; I's continuations range over basis opens inside the last reply.
  struct Frame {
    std::vector<std::uint32_t> seq;
    GameHistory hist;
  };
  std::vector<Frame> stack{{{}, {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.seq.size() >= 2 * depth + 1) {
      // Maximal branch: assign the stabilization point when visible.
      std::optional<std::uint32_t> pt;
      if (!f.hist.rounds.empty() && f.hist.rounds.back().has_ii) {
        PointSet v = f.hist.rounds.back().ii;
        for (std::uint32_t p = 0; p < x.size(); ++p)
          if (((v >> p) & 1) && v == x.up(p)) pt = p;
      }
      tree.branch_point[f.seq] = pt;
      continue;
    }
    PointSet bound = f.hist.rounds.empty() ? x.full() : f.hist.rounds.back().ii;
    for (std::uint32_t m = 0; m < basis.size(); ++m) {
      if (basis[m] == 0 || !subset(basis[m], bound)) continue;
      // Distinct replies over I's possible points in this basic open.
      std::map<PointSet, std::uint32_t> replies;  // reply -> witness point
      for (std::uint32_t p = 0; p < x.size(); ++p) {
        if (!((basis[m] >> p) & 1)) continue;
        GameHistory probe = f.hist;
        probe.rounds.push_back(GameRound{MoveI{basis[m], p}, 0, false});
        PointSet v = normalized.move(x, probe);
        replies.emplace(v, p);
      }
      std::vector<std::uint32_t> iseq = f.seq;
      iseq.push_back(m);
      tree.nodes.insert(iseq);
      if (iseq.size() >= 2 * depth + 1) {
        stack.push_back({iseq, f.hist});
        continue;
      }
      for (auto [v, p] : replies) {
        auto it = std::find(basis.begin(), basis.end(), v);
        if (it == basis.end()) continue;  // normalized strategies stay in basis
        std::uint32_t vm = static_cast<std::uint32_t>(it - basis.begin());
        std::vector<std::uint32_t> iiseq = iseq;
        iiseq.push_back(vm);
        tree.nodes.insert(iiseq);
        GameHistory next = f.hist;
        next.rounds.push_back(GameRound{MoveI{basis[m], p}, v, true});
        stack.push_back({iiseq, next});
      }
    }
  }
  return tree;
}

MetricStrategyI metric_i_random(std::uint64_t seed) {
  return [seed](const MetricData& d,
                const std::vector<MetricRound>& rounds) -> std::optional<MetricMoveI> {
    Rng rng(seed * 0x51ed270bu + rounds.size() + 1);
    if (rounds.empty()) {
      std::size_t p = rng.below(d.size());
      return MetricMoveI{Ball{p, Rat(2)}, p};
    }
    const Ball& v = rounds.back().ii;
    // A point of D strictly inside the previous reply, then a ball around it
    // formally inside that reply.
    for (std::uint32_t attempt = 0; attempt < 64; ++attempt) {
      std::size_t p = rng.below(d.size());
      Rat slack = v.radius - d.dist(v.center, p);
      if (slack <= 0) continue;
      return MetricMoveI{Ball{p, slack / 2}, p};
    }
    return MetricMoveI{Ball{v.center, v.radius / 2}, v.center};
  };
}

MetricStrategyI metric_i_fixed(std::size_t point) {
  return [point](const MetricData& d,
                 const std::vector<MetricRound>& rounds) -> std::optional<MetricMoveI> {
    if (rounds.empty()) return MetricMoveI{Ball{point, Rat(2)}, point};
    const Ball& v = rounds.back().ii;
    Rat slack = v.radius - d.dist(v.center, point);
    if (slack <= 0) return std::nullopt;
    return MetricMoveI{Ball{point, slack / 2}, point};
  };
}

MetricRunReport metric_play(const MetricData& d, const MetricStrategyI& si,
                            std::uint32_t rounds) {
  MetricRunReport rep;
  Rat pow(1);  // 2^-n bound for round n
  for (std::uint32_t n = 0; n < rounds; ++n) {
    pow /= 2;
    auto mi = si(d, rep.rounds);
    if (!mi) break;
    // I's legality: the point lies in the ball; the ball formally nests.
    if (d.dist(mi->ball.center, mi->point) >= mi->ball.radius) {
      rep.legal = false;
      break;
    }
    if (!rep.rounds.empty() &&
        !formally_included(d, mi->ball, Ball{rep.rounds.back().ii.center,
                                             rep.rounds.back().ii.radius})) {
      rep.legal = false;
      break;
    }
    Rat slack = mi->ball.radius - d.dist(mi->ball.center, mi->point);
    Rat radius = std::min(slack / 2, pow);
    Ball reply{mi->point, radius};
    rep.rounds.push_back(MetricRound{*mi, reply});
    if (!(radius <= pow)) rep.radii_shrink = false;
    if (!formally_included(d, reply, mi->ball)) rep.formal_nesting = false;
  }
  for (std::size_t n = 0; n < rep.rounds.size(); ++n)
    for (std::size_t m = n; m < rep.rounds.size(); ++m) {
      Rat bound = Rat(1) / (1 << std::min<std::size_t>(n, 30));
      if (d.dist(rep.rounds[n].ii.center, rep.rounds[m].ii.center) > bound)
        rep.centers_cauchy = false;
    }
  return rep;
}

}  // namespace qpolis
