#include "qpolis/space_builders.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qpolis/rat.hpp"

namespace qpolis {

namespace {

OpenCode basic1(std::uint64_t idx) {
  return OpenCode::from_basics({BasicOpen{{idx}}});
}

bool all_fully_finite(const std::vector<Copresentation>& cs) {
  for (const auto& c : cs)
    if (!c.fully_finite()) return false;
  return true;
}

}  // namespace

Copresentation sierpinski() { return sierpinski_power(1); }

Copresentation sierpinski_power(std::uint32_t n) {
  Copresentation c;
  c.domain = IndexDomain::finite_n(n);
  c.provenance = "sierpinski_power(" + std::to_string(n) + ")";
  return c;
}

Copresentation sierpinski_power_countable() {
  Copresentation c;
  c.domain = IndexDomain::countable();
  c.provenance = "sierpinski_power(countable)";
  return c;
}

ProductResult product(const std::vector<Copresentation>& factors) {
  ProductResult out;
  std::size_t k = factors.size();
  bool finite_domains = true;
  for (const auto& f : factors) finite_domains &= f.domain.is_finite;

  if (finite_domains) {
    std::uint64_t offset = 0;
    for (const auto& f : factors) {
      std::uint64_t base = offset;
      out.embed.push_back([base](std::uint64_t i) { return base + i; });
      offset += f.domain.count;
    }
    out.space.domain = IndexDomain::finite_n(static_cast<std::uint32_t>(offset));
  } else {
    for (std::size_t i = 0; i < k; ++i)
      out.embed.push_back([i, k](std::uint64_t j) { return i + k * j; });
    out.space.domain = IndexDomain::countable();
  }

  std::vector<Enumerable<Pi02Relation>> fams;
  for (std::size_t i = 0; i < k; ++i) {
    IndexMap em = out.embed[i];
    fams.push_back(factors[i].relations.map(
        [em](const Pi02Relation& r) { return r.remapped(em); }));
  }
  out.space.relations = Enumerable<Pi02Relation>::round_robin(std::move(fams));
  out.space.provenance = "product";
  out.space.validate();
  return out;
}

LiftResult lift(const Copresentation& c) {
  LiftResult out;
  IndexMap embed;
  if (c.domain.is_finite) {
    out.flag = c.domain.count;
    embed = [](std::uint64_t i) { return i; };
    out.space.domain = IndexDomain::finite_n(c.domain.count + 1);
  } else {
    out.flag = 0;
    embed = [](std::uint64_t i) { return i + 1; };
    out.space.domain = IndexDomain::countable();
  }
  out.embed = embed;
  std::uint64_t flag = out.flag;

  // Any observation implies "defined".
  Enumerable<Pi02Relation> observe_flag;
  if (c.domain.is_finite) {
    std::vector<Pi02Relation> rels;
    for (std::uint64_t i = 0; i < c.domain.count; ++i)
      rels.push_back({basic1(embed(i)), basic1(flag), "lift-defined"});
    observe_flag = Enumerable<Pi02Relation>(std::move(rels));
  } else {
    observe_flag = Enumerable<Pi02Relation>(std::function<Pi02Relation(std::size_t)>(
        [embed, flag](std::size_t i) {
          return Pi02Relation{basic1(embed(i)), basic1(flag), "lift-defined"};
        }));
  }

  // Original relations, guarded by the flag.
  OpenCode flag_code = basic1(flag);
  auto guarded = c.relations.map([embed, flag_code](const Pi02Relation& r) {
    Pi02Relation g = r.remapped(embed);
    g.antecedent = g.antecedent.intersect(flag_code);
    g.label = "lift(" + r.label + ")";
    return g;
  });

  out.space.relations = Enumerable<Pi02Relation>::round_robin({observe_flag, guarded});
  out.space.provenance = "lift";
  out.space.validate();
  return out;
}

DisjointUnionResult disjoint_union(const std::vector<Copresentation>& pieces) {
  std::vector<Copresentation> lifted;
  std::vector<std::uint64_t> local_flags;
  std::vector<IndexMap> local_embeds;
  for (const auto& p : pieces) {
    LiftResult l = lift(p);
    lifted.push_back(l.space);
    local_flags.push_back(l.flag);
    local_embeds.push_back(l.embed);
  }
  ProductResult prod = product(lifted);

  DisjointUnionResult out;
  out.space.domain = prod.space.domain;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    out.flags.push_back(prod.embed[i](local_flags[i]));
    IndexMap pe = prod.embed[i], le = local_embeds[i];
    out.embed.push_back([pe, le](std::uint64_t j) { return pe(le(j)); });
  }

  std::vector<Pi02Relation> extra;
  std::vector<BasicOpen> some_flag;
  for (std::uint64_t f : out.flags) some_flag.push_back(BasicOpen{{f}});
  extra.push_back({OpenCode::whole_space(), OpenCode::from_basics(some_flag),
                   "union-inhabited"});
  for (std::size_t i = 0; i < out.flags.size(); ++i)
    for (std::size_t j = i + 1; j < out.flags.size(); ++j)
      extra.push_back({OpenCode::from_basics({BasicOpen{{out.flags[i], out.flags[j]}}}),
                       OpenCode::empty_code(), "union-exclusive"});

  out.space.relations = Enumerable<Pi02Relation>::round_robin(
      {Enumerable<Pi02Relation>(std::move(extra)), prod.space.relations});
  out.space.provenance = "disjoint_union";
  out.space.validate();
  return out;
}

namespace {

// Coherence of glue overlap data, checked on the brute-forced denotations.
void check_overlaps(const std::vector<Copresentation>& pieces,
                    const std::vector<OverlapData>& overlaps) {
  if (!all_fully_finite(pieces)) return;  // symbolic pieces: caller-asserted
  std::vector<std::vector<std::uint64_t>> dens;
  for (const auto& p : pieces) dens.push_back(denote(p));

  // match[a][b]: overlap point of piece a (denotation mask) -> point of b.
  std::map<std::pair<std::size_t, std::size_t>,
           std::map<std::uint64_t, std::uint64_t>>
      match;
  for (const auto& ov : overlaps) {
    require(ov.piece_a < pieces.size() && ov.piece_b < pieces.size(),
            "INCOHERENT_OVERLAP", "overlap names a missing piece");
    auto collect = [&](std::size_t piece, const OpenCode& code, bool side_a) {
      std::map<std::uint64_t, std::uint64_t> profile_of;  // point -> shared profile
      for (std::uint64_t z : dens[piece]) {
        if (!code.contains_point(z)) continue;
        std::uint64_t prof = 0;
        require(ov.shared.size() <= 64, "DESK_SCALE", "shared subbasis too large");
        for (std::size_t w = 0; w < ov.shared.size(); ++w) {
          const BasicOpen& b = side_a ? ov.shared[w].first : ov.shared[w].second;
          if (b.contains_point(z)) prof |= 1ull << w;
        }
        profile_of[z] = prof;
      }
      return profile_of;
    };
    auto pa = collect(ov.piece_a, ov.in_a, true);
    auto pb = collect(ov.piece_b, ov.in_b, false);
    std::map<std::uint64_t, std::uint64_t> by_prof_a, by_prof_b;
    for (auto [z, pr] : pa) {
      require(!by_prof_a.count(pr), "INCOHERENT_OVERLAP",
              "shared subbasis does not separate the overlap");
      by_prof_a[pr] = z;
    }
    for (auto [z, pr] : pb) {
      require(!by_prof_b.count(pr), "INCOHERENT_OVERLAP",
              "shared subbasis does not separate the overlap");
      by_prof_b[pr] = z;
    }
    require(pa.size() == pb.size(), "INCOHERENT_OVERLAP",
            "overlap sides have different sizes");
    auto& m_ab = match[{ov.piece_a, ov.piece_b}];
    auto& m_ba = match[{ov.piece_b, ov.piece_a}];
    for (auto [pr, za] : by_prof_a) {
      auto it = by_prof_b.find(pr);
      require(it != by_prof_b.end(), "INCOHERENT_OVERLAP",
              "overlap profiles fail to match across the pair");
      m_ab[za] = it->second;
      m_ba[it->second] = za;
    }
    // The profile bijection must be an order isomorphism (homeomorphism of
    // finite subspaces) w.r.t. the subbasis orders of both pieces.
    auto leq_in = [&](std::size_t piece, std::uint64_t z1, std::uint64_t z2) {
      return subset(z1, z2);  // specialization in S^I is mask inclusion
    };
    for (auto [z1, w1] : m_ab)
      for (auto [z2, w2] : m_ab)
        require(leq_in(ov.piece_a, z1, z2) == leq_in(ov.piece_b, w1, w2),
                "INCOHERENT_OVERLAP", "overlap identification is not a homeomorphism");
  }
  // Triple cocycle: composite identifications agree.
  for (const auto& [ab, m_ab] : match)
    for (const auto& [bc, m_bc] : match) {
      if (ab.second != bc.first || ab.first == bc.second) continue;
      auto ac = match.find({ab.first, bc.second});
      for (auto [za, zb] : m_ab) {
        auto it_bc = m_bc.find(zb);
        if (it_bc == m_bc.end()) continue;
        require(ac != match.end(), "INCOHERENT_OVERLAP",
                "triple overlap lacks a direct identification");
        auto it_ac = ac->second.find(za);
        require(it_ac != ac->second.end() && it_ac->second == it_bc->second,
                "INCOHERENT_OVERLAP", "triple overlap identifications disagree");
      }
    }
}

}  // namespace

GlueResult glue(const std::vector<Copresentation>& pieces,
                const std::vector<OverlapData>& overlaps) {
  check_overlaps(pieces, overlaps);

  std::vector<Copresentation> lifted;
  std::vector<std::uint64_t> local_flags;
  std::vector<IndexMap> local_embeds;
  for (const auto& p : pieces) {
    LiftResult l = lift(p);
    lifted.push_back(l.space);
    local_flags.push_back(l.flag);
    local_embeds.push_back(l.embed);
  }
  ProductResult prod = product(lifted);

  GlueResult out;
  out.space.domain = prod.space.domain;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    out.flags.push_back(prod.embed[i](local_flags[i]));
    IndexMap pe = prod.embed[i], le = local_embeds[i];
    out.embed.push_back([pe, le](std::uint64_t j) { return pe(le(j)); });
  }

  std::vector<Pi02Relation> extra;
  std::vector<BasicOpen> some_flag;
  for (std::uint64_t f : out.flags) some_flag.push_back(BasicOpen{{f}});
  extra.push_back({OpenCode::whole_space(), OpenCode::from_basics(some_flag),
                   "glue-inhabited"});

  // Which pairs carry overlap data; the rest are glued disjointly.
  std::set<std::pair<std::size_t, std::size_t>> described;

  auto emit_pair = [&](std::size_t a, std::size_t b, const OpenCode& in_a,
                       const std::vector<std::pair<BasicOpen, BasicOpen>>& shared,
                       bool a_side_first) {
    OpenCode ov_a = in_a.remapped(out.embed[a]);
    OpenCode both = basic1(out.flags[a]).intersect(basic1(out.flags[b]));
    extra.push_back({both, ov_a, "glue-overlap(" + std::to_string(a) + "," +
                                     std::to_string(b) + ")"});
    extra.push_back({ov_a, basic1(out.flags[b]),
                     "glue-defined(" + std::to_string(a) + "->" +
                         std::to_string(b) + ")"});
    for (const auto& [wa, wb] : shared) {
      const BasicOpen& mine = a_side_first ? wa : wb;
      const BasicOpen& theirs = a_side_first ? wb : wa;
      OpenCode ante = OpenCode::from_basics({mine.remapped(out.embed[a])})
                          .intersect(basic1(out.flags[b]));
      extra.push_back({ante,
                       OpenCode::from_basics({theirs.remapped(out.embed[b])}),
                       "glue-agree(" + std::to_string(a) + "->" +
                           std::to_string(b) + ")"});
    }
  };

  for (const auto& ov : overlaps) {
    described.insert({std::min(ov.piece_a, ov.piece_b), std::max(ov.piece_a, ov.piece_b)});
    emit_pair(ov.piece_a, ov.piece_b, ov.in_a, ov.shared, true);
    emit_pair(ov.piece_b, ov.piece_a, ov.in_b, ov.shared, false);
  }
  for (std::size_t a = 0; a < pieces.size(); ++a)
    for (std::size_t b = a + 1; b < pieces.size(); ++b)
      if (!described.count({a, b})) {
        extra.push_back({basic1(out.flags[a]).intersect(basic1(out.flags[b])),
                         OpenCode::empty_code(), "glue-disjoint"});
      }

  out.space.relations = Enumerable<Pi02Relation>::round_robin(
      {Enumerable<Pi02Relation>(std::move(extra)), prod.space.relations});
  out.space.provenance = "glue";
  out.space.validate();
  return out;
}

Copresentation pi02_subspace(const Copresentation& c,
                             const std::vector<Pi02Relation>& rels) {
  Copresentation out;
  out.domain = c.domain;
  out.relations = Enumerable<Pi02Relation>::concat(
      c.relations, Enumerable<Pi02Relation>(rels));
  out.provenance = c.provenance + "+subspace";
  out.validate();
  return out;
}

Sigma02Code Sigma02Code::open_set(const OpenCode& u) {
  return Sigma02Code{Enumerable<std::pair<OpenCode, OpenCode>>(
      std::vector<std::pair<OpenCode, OpenCode>>{{u, OpenCode::empty_code()}})};
}

Sigma02Code Sigma02Code::closed_complement(const OpenCode& u) {
  return Sigma02Code{Enumerable<std::pair<OpenCode, OpenCode>>(
      std::vector<std::pair<OpenCode, OpenCode>>{{OpenCode::whole_space(), u}})};
}

bool Sigma02Code::contains_point(std::uint64_t mask) const {
  require(diffs.finite(), "INFINITE_ENUMERATION", "finite models only");
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const auto& [b, c] = diffs.at(i);
    if (b.contains_point(mask) && !c.contains_point(mask)) return true;
  }
  return false;
}

AdjoinResult adjoin_delta02(
    const Copresentation& c,
    const std::vector<std::pair<Sigma02Code, Sigma02Code>>& pairs) {
  std::uint64_t m = pairs.size();
  AdjoinResult out;
  IndexMap embed;
  if (c.domain.is_finite) {
    std::uint32_t n = c.domain.count;
    embed = [](std::uint64_t i) { return i; };
    for (std::uint64_t k = 0; k < m; ++k) out.flags.push_back(n + k);
    out.space.domain = IndexDomain::finite_n(n + static_cast<std::uint32_t>(m));
  } else {
    embed = [m](std::uint64_t i) { return i + m; };
    for (std::uint64_t k = 0; k < m; ++k) out.flags.push_back(k);
    out.space.domain = IndexDomain::countable();
  }
  out.embed = embed;

  // Complementarity check at finite scale.
  if (c.fully_finite()) {
    bool finite_codes = true;
    for (const auto& [a, na] : pairs)
      finite_codes &= a.diffs.finite() && na.diffs.finite();
    if (finite_codes) {
      auto den = denote(c);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        for (std::uint64_t z : den)
          require(pairs[k].first.contains_point(z) !=
                      pairs[k].second.contains_point(z),
                  "NOT_COMPLEMENTARY",
                  "adjoined pair " + std::to_string(k) +
                      " fails to partition the denotation");
    }
  }

  std::vector<Enumerable<Pi02Relation>> fams;
  fams.push_back(c.relations.map(
      [embed](const Pi02Relation& r) { return r.remapped(embed); }));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    OpenCode flag = basic1(out.flags[k]);
    const auto& pos = pairs[k].first.diffs;
    const auto& neg = pairs[k].second.diffs;
    fams.push_back(
        pos.map([embed, flag, k](const std::pair<OpenCode, OpenCode>& bc) {
          return Pi02Relation{
              bc.first.remapped(embed),
              bc.second.remapped(embed).unite(flag),
              "adjoin-pos(" + std::to_string(k) + ")"};
        }));
    fams.push_back(
        neg.map([embed, flag, k](const std::pair<OpenCode, OpenCode>& bc) {
          return Pi02Relation{
              bc.first.remapped(embed).intersect(flag),
              bc.second.remapped(embed),
              "adjoin-neg(" + std::to_string(k) + ")"};
        }));
  }
  out.space.relations = Enumerable<Pi02Relation>::round_robin(std::move(fams));
  out.space.provenance = c.provenance + "+delta02";
  out.space.validate();
  return out;
}

JoinResult join_topologies(const Copresentation& base,
                           const std::vector<FinerTopology>& finers) {
  require(base.domain.is_finite, "DESK_SCALE",
          "join_topologies needs a finite base index set");
  for (const auto& f : finers) {
    require(f.base_translation.size() == base.domain.count, "BAD_TRANSLATION",
            "translation must cover every base index");
    if (f.space.domain.is_finite)
      for (std::uint64_t t : f.base_translation)
        require(t < f.space.domain.count, "BAD_TRANSLATION",
                "translation index out of range");
  }

  // Finite-scale soundness: each finer denotation must project bijectively
  // onto the base denotation through its translation.
  if (base.fully_finite()) {
    auto base_den = denote(base);
    for (const auto& f : finers) {
      if (!f.space.fully_finite()) continue;
      auto den = denote(f.space);
      std::vector<std::uint64_t> traces;
      for (std::uint64_t z : den) {
        std::uint64_t tr = 0;
        for (std::uint32_t i = 0; i < base.domain.count; ++i)
          if ((z >> f.base_translation[i]) & 1) tr |= 1ull << i;
        traces.push_back(tr);
      }
      auto sorted = traces;
      std::sort(sorted.begin(), sorted.end());
      require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
              "BAD_TRANSLATION", "finer topology fails to separate base traces");
      require(sorted == base_den, "BAD_TRANSLATION",
              "finer topology denotes a different underlying space");
    }
  }

  std::vector<Copresentation> copies;
  copies.push_back(base);
  for (const auto& f : finers) copies.push_back(f.space);
  ProductResult prod = product(copies);

  JoinResult out;
  out.space.domain = prod.space.domain;
  out.base_embed = prod.embed[0];
  for (std::size_t j = 0; j < finers.size(); ++j)
    out.finer_embed.push_back(prod.embed[j + 1]);

  std::vector<Pi02Relation> diag;
  for (std::uint32_t i = 0; i < base.domain.count; ++i) {
    std::vector<std::uint64_t> renders;
    renders.push_back(out.base_embed(i));
    for (std::size_t j = 0; j < finers.size(); ++j)
      renders.push_back(out.finer_embed[j](finers[j].base_translation[i]));
    for (std::size_t p = 0; p < renders.size(); ++p)
      for (std::size_t q = 0; q < renders.size(); ++q)
        if (p != q)
          diag.push_back({basic1(renders[p]), basic1(renders[q]),
                          "join-diagonal(" + std::to_string(i) + ")"});
  }
  out.space.relations = Enumerable<Pi02Relation>::round_robin(
      {Enumerable<Pi02Relation>(std::move(diag)), prod.space.relations});
  out.space.provenance = "join_topologies";
  out.space.validate();
  return out;
}

SigmaCode SigmaCode::level1(OpenCode u) {
  SigmaCode c;
  c.level = 1;
  c.open = std::move(u);
  return c;
}

SigmaCode SigmaCode::diff_union(std::uint32_t level,
                                std::vector<std::pair<SigmaCode, SigmaCode>> pairs) {
  SigmaCode c;
  c.level = level;
  for (auto& [a, b] : pairs) {
    require(a.level < level && b.level < level, "BAD_CODE",
            "subcode level does not decrease");
    c.subs.emplace_back(std::make_shared<SigmaCode>(std::move(a)),
                        std::make_shared<SigmaCode>(std::move(b)));
  }
  return c;
}

RefineResult sigma_refine(const Copresentation& c, const std::vector<SigmaCode>& codes) {
  require(c.domain.is_finite, "DESK_SCALE", "sigma_refine needs a finite index set");
  std::uint32_t n = c.domain.count;
  std::vector<std::uint64_t> identity(n);
  for (std::uint32_t i = 0; i < n; ++i) identity[i] = i;

  bool all_level1 = true;
  for (const auto& code : codes) all_level1 &= code.level == 1;
  if (all_level1) {
    RefineResult out{c, identity, {}};
    for (const auto& code : codes) out.renderings.push_back(code.open);
    return out;
  }

  // One finer topology per input code (level-1 codes need none); then a
  // single join with the base identifies all copies.
  std::vector<FinerTopology> finers;
  struct Pending {
    std::size_t code_idx;
    bool via_finer;
    std::size_t finer_idx = 0;             // when via_finer
    std::vector<std::uint64_t> flag_idxs;  // flags inside that finer
  };
  std::vector<Pending> pending;

  for (std::size_t k = 0; k < codes.size(); ++k) {
    const SigmaCode& code = codes[k];
    if (code.level == 1) {
      pending.push_back({k, false});
      continue;
    }
    // Recursively refine so each sub-pair denotes opens, then adjoin the
    // differences as Delta^0_2 sets of that refinement.
    std::vector<SigmaCode> subs;
    for (const auto& [b, cc] : code.subs) {
      subs.push_back(*b);
      subs.push_back(*cc);
    }
    RefineResult sub = sigma_refine(c, subs);
    std::vector<std::pair<Sigma02Code, Sigma02Code>> adjoin_pairs;
    for (std::size_t i = 0; i < code.subs.size(); ++i) {
      const OpenCode& bi = sub.renderings[2 * i];
      const OpenCode& ci = sub.renderings[2 * i + 1];
      Sigma02Code pos{Enumerable<std::pair<OpenCode, OpenCode>>(
          std::vector<std::pair<OpenCode, OpenCode>>{{bi, ci}})};
      // not (B \ C) = (X \ B) union C
      Sigma02Code neg{Enumerable<std::pair<OpenCode, OpenCode>>(
          std::vector<std::pair<OpenCode, OpenCode>>{
              {OpenCode::whole_space(), bi}, {ci, OpenCode::empty_code()}})};
      adjoin_pairs.emplace_back(std::move(pos), std::move(neg));
    }
    AdjoinResult adj = adjoin_delta02(sub.space, adjoin_pairs);
    FinerTopology finer;
    finer.space = adj.space;
    for (std::uint32_t i = 0; i < n; ++i)
      finer.base_translation.push_back(adj.embed(sub.base_translation[i]));
    Pending p{k, true, finers.size(), adj.flags};
    finers.push_back(std::move(finer));
    pending.push_back(std::move(p));
  }

  JoinResult join = join_topologies(c, finers);
  RefineResult out;
  out.space = join.space;
  for (std::uint32_t i = 0; i < n; ++i) out.base_translation.push_back(join.base_embed(i));
  out.renderings.resize(codes.size());
  for (const auto& p : pending) {
    if (!p.via_finer) {
      out.renderings[p.code_idx] = codes[p.code_idx].open.remapped(join.base_embed);
    } else {
      std::vector<BasicOpen> gens;
      for (std::uint64_t f : p.flag_idxs)
        gens.push_back(BasicOpen{{join.finer_embed[p.finer_idx](f)}});
      out.renderings[p.code_idx] = OpenCode::from_basics(std::move(gens));
    }
  }
  out.space.provenance = c.provenance + "+refine";
  return out;
}

std::vector<std::uint64_t> canonical_embedding(const FiniteSpace& x,
                                               const std::vector<PointSet>& subbasis) {
  require(subbasis.size() <= 64, "DESK_SCALE", "subbasis too large");
  try {
    std::vector<std::string> nm(x.size());
    for (std::uint32_t p = 0; p < x.size(); ++p) nm[p] = x.name(p);
    FiniteSpace gen = FiniteSpace::from_opens(nm, subbasis);
    require(gen.opens() == x.opens(), "NOT_SUBBASIS", "");
  } catch (const Error&) {
    fail("NOT_SUBBASIS", "family does not generate the topology");
  }
  std::vector<std::uint64_t> profiles(x.size(), 0);
  for (std::uint32_t p = 0; p < x.size(); ++p)
    for (std::size_t i = 0; i < subbasis.size(); ++i)
      if ((subbasis[i] >> p) & 1) profiles[p] |= 1ull << i;
  return profiles;
}

Copresentation finite_space_copres(const FiniteSpace& x,
                                   const std::vector<PointSet>& subbasis) {
  require(subbasis.size() <= 16, "DESK_SCALE", "subbasis too large");
  auto profiles = canonical_embedding(x, subbasis);
  std::uint32_t m = static_cast<std::uint32_t>(subbasis.size());
  std::vector<Pi02Relation> rels;
  for (std::uint64_t s = 0; s < (1ull << m); ++s) {
    // Points in the intersection named by s.
    std::vector<BasicOpen> gens;
    std::set<std::uint64_t> seen;
    for (std::uint32_t p = 0; p < x.size(); ++p)
      if (subset(s, profiles[p]) && seen.insert(profiles[p]).second) {
        BasicOpen b;
        for (std::uint32_t i = 0; i < m; ++i)
          if ((profiles[p] >> i) & 1) b.indices.push_back(i);
        gens.push_back(std::move(b));
      }
    BasicOpen ante;
    for (std::uint32_t i = 0; i < m; ++i)
      if ((s >> i) & 1) ante.indices.push_back(i);
    rels.push_back({OpenCode::from_basics({ante}),
                    OpenCode::from_basics(std::move(gens)),
                    "profile(" + std::to_string(s) + ")"});
  }
  Copresentation c;
  c.domain = IndexDomain::finite_n(m);
  c.relations = Enumerable<Pi02Relation>(std::move(rels));
  c.provenance = "finite_space_copres";
  c.validate();
  return c;
}

}  // namespace qpolis
