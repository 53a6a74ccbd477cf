#include "qpolis/posite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qpolis {

namespace {

OpenCode basic1(std::uint64_t idx) {
  return OpenCode::from_basics({BasicOpen{{idx}}});
}

// Least-index refining cover from the family, else the maximal refinement.
WitnessResult default_witness(const Posite& p, const Cover& cover,
                              std::uint32_t smaller) {
  auto refine_into = [&](const Cover& cand) -> std::optional<std::vector<std::uint32_t>> {
    std::vector<std::uint32_t> refine;
    for (std::uint32_t v2 : cand.members) {
      bool found = false;
      for (std::size_t k = 0; k < cover.members.size(); ++k)
        if (p.leq(v2, cover.members[k])) {
          refine.push_back(static_cast<std::uint32_t>(k));
          found = true;
          break;
        }
      if (!found) return std::nullopt;
    }
    return refine;
  };
  for (const Cover& cand : p.covers()) {
    if (cand.covered != smaller) continue;
    if (auto refine = refine_into(cand)) return {cand, *refine};
  }
  Cover maximal;
  maximal.covered = smaller;
  std::vector<std::uint32_t> refine;
  for (std::uint32_t v = 0; v < p.size(); ++v) {
    if (!p.leq(v, smaller)) continue;
    for (std::size_t k = 0; k < cover.members.size(); ++k)
      if (p.leq(v, cover.members[k])) {
        maximal.members.push_back(v);
        refine.push_back(static_cast<std::uint32_t>(k));
        break;
      }
  }
  return {maximal, refine};
}

}  // namespace

Posite Posite::make(std::vector<std::string> names,
                    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& leq,
                    std::vector<Cover> covers, Witness witness) {
  Posite p;
  std::uint32_t n = static_cast<std::uint32_t>(names.size());
  require(n <= 64, "DESK_SCALE", "carrier too large");
  p.names_ = std::move(names);
  p.up_.assign(n, 0);
  for (std::uint32_t u = 0; u < n; ++u) p.up_[u] |= 1ull << u;
  for (auto [u, v] : leq) {
    require(u < n && v < n, "BAD_ORDER", "leq pair out of range");
    p.up_[u] |= 1ull << v;
  }
  for (std::uint32_t k = 0; k < n; ++k)  // transitive closure
    for (std::uint32_t u = 0; u < n; ++u)
      if ((p.up_[u] >> k) & 1) p.up_[u] |= p.up_[k];
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < u; ++v)
      require(!(((p.up_[u] >> v) & 1) && ((p.up_[v] >> u) & 1)), "BAD_ORDER",
              "order not antisymmetric");
  for (auto& c : covers) {
    require(c.covered < n, "BAD_COVER", "covered element out of range");
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    for (std::uint32_t v : c.members)
      require(v < n, "BAD_COVER", "cover member out of range");
  }
  p.covers_ = std::move(covers);
  p.witness_ = witness ? std::move(witness) : Witness(default_witness);

  // Close the family under the witness so stability holds by construction.
  std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> seen;
  for (const auto& c : p.covers_) seen.insert({c.covered, c.members});
  for (std::size_t i = 0; i < p.covers_.size(); ++i) {
    require(p.covers_.size() <= 4096, "DESK_SCALE", "cover family closure too large");
    Cover cover = p.covers_[i];
    for (std::uint32_t u2 = 0; u2 < n; ++u2) {
      if (!p.leq(u2, cover.covered)) continue;
      WitnessResult w = p.witness_(p, cover, u2);
      if (seen.insert({w.cover.covered, w.cover.members}).second)
        p.covers_.push_back(w.cover);
    }
  }
  return p;
}

Report check_axioms(const Posite& p) {
  Report rep;
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const Cover& c = p.covers()[i];
    for (std::uint32_t v : c.members)
      if (!p.leq(v, c.covered)) {
        rep.fail("pcpl: cover member not below covered element",
                 {{"cover", std::to_string(i)},
                  {"member", p.names()[v]},
                  {"covered", p.names()[c.covered]}});
        return rep;
      }
  }
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const Cover& c = p.covers()[i];
    for (std::uint32_t u2 = 0; u2 < p.size(); ++u2) {
      if (!p.leq(u2, c.covered)) continue;
      WitnessResult w = p.call_witness(c, u2);
      if (w.cover.covered != u2) {
        rep.fail("stability: witness covers the wrong element",
                 {{"cover", std::to_string(i)}, {"smaller", p.names()[u2]}});
        return rep;
      }
      bool in_family = false;
      for (const Cover& f : p.covers())
        if (f == w.cover) {
          in_family = true;
          break;
        }
      if (!in_family) {
        rep.fail("stability: witness cover not in the family",
                 {{"cover", std::to_string(i)}, {"smaller", p.names()[u2]}});
        return rep;
      }
      if (w.refine.size() != w.cover.members.size()) {
        rep.fail("stability: refinement map has wrong arity",
                 {{"cover", std::to_string(i)}, {"smaller", p.names()[u2]}});
        return rep;
      }
      for (std::size_t k = 0; k < w.cover.members.size(); ++k) {
        bool ok = w.refine[k] < c.members.size() &&
                  p.leq(w.cover.members[k], c.members[w.refine[k]]) &&
                  p.leq(w.cover.members[k], u2);
        if (!ok) {
          rep.fail("stability: refinement map not order-correct",
                   {{"cover", std::to_string(i)},
                    {"smaller", p.names()[u2]},
                    {"member", p.names()[w.cover.members[k]]}});
          return rep;
        }
      }
    }
  }
  return rep;
}

Copresentation upset_space(const Posite& p) {
  std::vector<Pi02Relation> rels;
  for (std::uint32_t u = 0; u < p.size(); ++u)
    for (std::uint32_t v = 0; v < p.size(); ++v)
      if (u != v && p.leq(u, v))
        rels.push_back({basic1(u), basic1(v),
                        "up(" + p.names()[u] + "<=" + p.names()[v] + ")"});
  Copresentation c;
  c.domain = IndexDomain::finite_n(p.size());
  c.relations = Enumerable<Pi02Relation>(std::move(rels));
  c.provenance = "upset_space";
  c.validate();
  return c;
}

Copresentation filt_space(const Posite& p) {
  Copresentation up = upset_space(p);
  std::vector<Pi02Relation> rels;
  std::vector<BasicOpen> anything;
  for (std::uint32_t u = 0; u < p.size(); ++u) anything.push_back(BasicOpen{{u}});
  rels.push_back({OpenCode::whole_space(), OpenCode::from_basics(anything),
                  "filt-nonempty"});
  for (std::uint32_t u = 0; u < p.size(); ++u)
    for (std::uint32_t v = u + 1; v < p.size(); ++v) {
      std::vector<BasicOpen> below;
      for (std::uint32_t w = 0; w < p.size(); ++w)
        if (p.leq(w, u) && p.leq(w, v)) below.push_back(BasicOpen{{w}});
      rels.push_back({OpenCode::from_basics({BasicOpen{{u, v}}}),
                      OpenCode::from_basics(std::move(below)),
                      "filt-directed(" + p.names()[u] + "," + p.names()[v] + ")"});
    }
  Copresentation c;
  c.domain = up.domain;
  c.relations = Enumerable<Pi02Relation>::concat(
      up.relations, Enumerable<Pi02Relation>(std::move(rels)));
  c.provenance = "filt_space";
  return c;
}

Copresentation coidl_space(const Posite& p) {
  Copresentation up = upset_space(p);
  std::vector<Pi02Relation> rels;
  for (std::size_t i = 0; i < p.covers().size(); ++i) {
    const Cover& cv = p.covers()[i];
    std::vector<BasicOpen> members;
    for (std::uint32_t v : cv.members) members.push_back(BasicOpen{{v}});
    rels.push_back({basic1(cv.covered), OpenCode::from_basics(std::move(members)),
                    "coidl-cover(" + std::to_string(i) + ")"});
  }
  Copresentation c;
  c.domain = up.domain;
  c.relations = Enumerable<Pi02Relation>::concat(
      up.relations, Enumerable<Pi02Relation>(std::move(rels)));
  c.provenance = "coidl_space";
  return c;
}

Copresentation pfilt_space(const Posite& p) {
  Copresentation f = filt_space(p);
  Copresentation co = coidl_space(p);
  // Drop the duplicated up-set block from the coideal side.
  std::size_t up_count = upset_space(p).relations.size();
  std::vector<Pi02Relation> cover_rels;
  for (std::size_t i = up_count; i < co.relations.size(); ++i)
    cover_rels.push_back(co.relations.at(i));
  Copresentation c;
  c.domain = f.domain;
  c.relations = Enumerable<Pi02Relation>::concat(
      f.relations, Enumerable<Pi02Relation>(std::move(cover_rels)));
  c.provenance = "pfilt_space";
  return c;
}

namespace {

bool upward_closed(const Posite& p, std::uint64_t mask) {
  for (std::uint32_t u = 0; u < p.size(); ++u)
    if ((mask >> u) & 1)
      if (!subset(p.up_mask(u), mask)) return false;
  return true;
}

bool directed_mask(const Posite& p, std::uint64_t mask) {
  for (std::uint32_t u = 0; u < p.size(); ++u)
    for (std::uint32_t v = 0; v < p.size(); ++v) {
      if (!(((mask >> u) & 1) && ((mask >> v) & 1))) continue;
      bool found = false;
      for (std::uint32_t w = 0; w < p.size() && !found; ++w)
        found = ((mask >> w) & 1) && p.leq(w, u) && p.leq(w, v);
      if (!found) return false;
    }
  return true;
}

bool cover_inhabited(const Posite& p, std::uint64_t mask) {
  for (const Cover& c : p.covers()) {
    if (!((mask >> c.covered) & 1)) continue;
    bool hit = false;
    for (std::uint32_t v : c.members)
      if ((mask >> v) & 1) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

bool is_coideal_mask(const Posite& p, std::uint64_t mask) {
  return upward_closed(p, mask) && cover_inhabited(p, mask);
}

bool is_ideal_mask(const Posite& p, std::uint64_t mask) {
  // Downward closed and cover-closed: members inside force the covered in.
  for (std::uint32_t u = 0; u < p.size(); ++u)
    if ((mask >> u) & 1)
      for (std::uint32_t v = 0; v < p.size(); ++v)
        if (p.leq(v, u) && !((mask >> v) & 1)) return false;
  for (const Cover& c : p.covers()) {
    bool all_in = true;
    for (std::uint32_t v : c.members)
      if (!((mask >> v) & 1)) {
        all_in = false;
        break;
      }
    if (all_in && !((mask >> c.covered) & 1)) return false;
  }
  return true;
}

std::vector<std::uint64_t> brute_coideals(const Posite& p) {
  require(p.size() <= 20, "DESK_SCALE", "carrier too large for brute force");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (1ull << p.size()); ++m)
    if (is_coideal_mask(p, m)) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> brute_filters(const Posite& p) {
  require(p.size() <= 20, "DESK_SCALE", "carrier too large for brute force");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (1ull << p.size()); ++m)
    if (upward_closed(p, m) && directed_mask(p, m)) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> brute_prime_filters(const Posite& p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : brute_filters(p))
    if (cover_inhabited(p, m)) out.push_back(m);
  return out;
}

std::vector<std::uint64_t> brute_ideals(const Posite& p) {
  require(p.size() <= 20, "DESK_SCALE", "carrier too large for brute force");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (1ull << p.size()); ++m)
    if (is_ideal_mask(p, m)) out.push_back(m);
  return out;
}

BasicPosite posite_from_copres(const FiniteSpace& x,
                               const std::vector<PointSet>& basis) {
  require(basis.size() <= 16, "DESK_SCALE", "basis too large");
  {
    std::set<PointSet> uniq(basis.begin(), basis.end());
    require(uniq.size() == basis.size(), "NOT_A_BASIS",
            "basis members must denote distinct opens");
  }
  for (PointSet b : basis)
    require(x.is_open(b), "NOT_A_BASIS", "basis member is not open");
  // Every open must be a union of basis members below it.
  for (PointSet o : x.opens()) {
    PointSet u = 0;
    for (PointSet b : basis)
      if (subset(b, o)) u |= b;
    require(u == o, "NOT_A_BASIS", "family fails to generate some open");
  }

  std::uint32_t m = static_cast<std::uint32_t>(basis.size());
  // Point profiles over the basis, and their basis-hulls (intersection of the
  // basis opens containing the point).
  std::vector<std::uint64_t> profile(x.size(), 0);
  std::vector<PointSet> hull(x.size(), 0);
  for (std::uint32_t pnt = 0; pnt < x.size(); ++pnt) {
    PointSet h = x.full();
    for (std::uint32_t i = 0; i < m; ++i)
      if ((basis[i] >> pnt) & 1) {
        profile[pnt] |= 1ull << i;
        h &= basis[i];
      }
    hull[pnt] = h;
  }

  // Covers V_{s,U} for each profile relation s and basis element U inside the
  // relation's antecedent intersection.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> leq;
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = 0; b < m; ++b)
      if (a != b && subset(basis[a], basis[b])) leq.emplace_back(a, b);

  // Captures by value: the stability witness below outlives this frame.
  std::uint32_t points = x.size();
  auto cover_of = [basis, profile, hull, m, points](std::uint64_t s,
                                                    std::uint32_t u_idx) {
    Cover c;
    c.covered = u_idx;
    for (std::uint32_t v = 0; v < m; ++v) {
      bool in = false;
      for (std::uint32_t pnt = 0; pnt < points && !in; ++pnt)
        if (subset(s, profile[pnt]) && subset(basis[v], basis[u_idx] & hull[pnt]))
          in = true;
      if (in) c.members.push_back(v);
    }
    return c;
  };

  std::vector<Cover> covers;
  std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> seen;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint64_t> origin;
  for (std::uint64_t s = 0; s < (1ull << m); ++s) {
    PointSet inter = x.full();
    for (std::uint32_t i = 0; i < m; ++i)
      if ((s >> i) & 1) inter &= basis[i];
    for (std::uint32_t u = 0; u < m; ++u) {
      if (!subset(basis[u], inter)) continue;
      Cover c = cover_of(s, u);
      auto key = std::make_pair(c.covered, c.members);
      if (seen.insert(key).second) {
        covers.push_back(c);
        origin[key] = s;
      }
    }
  }

  // The proof's own stability witness: V_{s,U'} covers U'.
  auto witness = [origin, cover_of](const Posite& p, const Cover& cover,
                                    std::uint32_t smaller) -> WitnessResult {
    auto it = origin.find({cover.covered, cover.members});
    require(it != origin.end(), "BAD_COVER", "witness asked about a foreign cover");
    Cover c = cover_of(it->second, smaller);
    std::vector<std::uint32_t> refine;
    for (std::uint32_t v2 : c.members) {
      bool found = false;
      for (std::size_t k = 0; k < cover.members.size(); ++k)
        if (p.leq(v2, cover.members[k])) {
          refine.push_back(static_cast<std::uint32_t>(k));
          found = true;
          break;
        }
      require(found, "BAD_COVER", "refinement target missing");
    }
    return {c, refine};
  };

  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < m; ++i) {
    std::string nm = "U" + std::to_string(i) + "=" + "{";
    bool first = true;
    for (std::uint32_t pnt = 0; pnt < x.size(); ++pnt)
      if ((basis[i] >> pnt) & 1) {
        if (!first) nm += ",";
        nm += x.name(pnt);
        first = false;
      }
    names.push_back(nm + "}");
  }
  BasicPosite out{Posite::make(std::move(names), leq, std::move(covers), witness),
                  basis};
  // Basic-posite equation: each cover's union equals the covered open.
  for (const Cover& c : out.posite.covers()) {
    PointSet u = 0;
    for (std::uint32_t v : c.members) u |= basis[v];
    require(u == basis[c.covered], "BAD_COVER",
            "basic-posite union equation fails (internal)");
  }
  return out;
}

GenericFilterRun generic_prime_filter(const Posite& p,
                                      const std::function<bool(std::uint32_t)>& coideal,
                                      std::uint32_t w, std::uint32_t budget) {
  require(w < p.size(), "BAD_ELEMENT", "W outside the carrier");
  require(coideal(w), "ORACLE_BREACH", "W must belong to the coideal");
  std::vector<std::uint32_t> pivots{w};
  std::uint32_t pivot = w;
  std::size_t covers = p.covers().size();
  for (std::uint32_t t = 1; t <= budget; ++t) {
    for (std::size_t k1 = 1; k1 <= covers; ++k1) {
      if (t % k1 != 0) continue;
      const Cover& cover = p.covers()[k1 - 1];
      if (!p.leq(pivot, cover.covered)) continue;
      WitnessResult wr = p.call_witness(cover, pivot);
      bool moved = false;
      for (std::uint32_t v2 : wr.cover.members)
        if (coideal(v2)) {
          pivot = v2;
          pivots.push_back(pivot);
          moved = true;
          break;
        }
      require(moved, "ORACLE_BREACH",
              "coideal oracle rejected every member of a cover of the pivot");
    }
  }
  auto pv = pivots;
  std::uint32_t n = p.size();
  std::vector<std::uint64_t> ups;
  for (std::uint32_t c : pv) ups.push_back(p.up_mask(c));
  GenericFilterRun run;
  run.pivots = pivots;
  run.stream.observe = [ups, n](std::uint32_t depth) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < ups.size() && i < depth; ++i) mask |= ups[i];
    std::vector<std::uint64_t> out;
    for (std::uint32_t u = 0; u < n; ++u)
      if ((mask >> u) & 1) out.push_back(u);
    return out;
  };
  return run;
}

PfiltModel pfilt_model(const Posite& p) { return PfiltModel{denote_space(pfilt_space(p))}; }

PointSet ideal_to_open(const Posite& p, const PfiltModel& m, std::uint64_t ideal) {
  require(is_ideal_mask(p, ideal), "NOT_AN_IDEAL", "input is not an ideal");
  PointSet out = 0;
  for (std::size_t pt = 0; pt < m.den.mask_of_point.size(); ++pt)
    if (m.den.mask_of_point[pt] & ideal) out |= 1ull << pt;
  return out;
}

std::uint64_t open_to_ideal(const Posite& p, const PfiltModel& m, PointSet open_pts) {
  require(m.den.space.is_open(open_pts), "NOT_OPEN",
          "input is not open in the prime-filter space");
  std::uint64_t ideal = 0;
  for (std::uint32_t u = 0; u < p.size(); ++u) {
    bool absorbed = true;
    for (std::size_t pt = 0; pt < m.den.mask_of_point.size() && absorbed; ++pt)
      if ((m.den.mask_of_point[pt] >> u) & 1)
        absorbed = ((open_pts >> pt) & 1);
    if (absorbed) ideal |= 1ull << u;
  }
  return ideal;
}

BctResult generic_point_bct(std::uint32_t index_count,
                            const std::function<bool(std::uint64_t)>& f_hits_upset,
                            const std::vector<OpenCode>& opens, std::uint32_t rounds,
                            std::size_t generator_budget) {
  require(index_count <= 63, "DESK_SCALE", "index set too large");
  require(f_hits_upset(0), "EMPTY_F", "oracle rejects the empty stage: F is empty");
  BctResult res;
  res.stages.push_back(0);
  std::uint64_t stage = 0;
  std::size_t steps = std::min<std::size_t>(rounds, opens.size());
  for (std::size_t n = 0; n < steps; ++n) {
    const auto& gens = opens[n].generators();
    std::size_t count = gens.budget(generator_budget);
    bool extended = false;
    for (std::size_t g = 0; g < count; ++g) {
      std::uint64_t t = 0;
      bool in_range = true;
      for (std::uint64_t i : gens.at(g).indices) {
        if (i >= index_count) {
          in_range = false;
          break;
        }
        t |= 1ull << i;
      }
      if (!in_range) continue;
      if (f_hits_upset(stage | t)) {
        stage |= t;
        res.stages.push_back(stage);
        extended = true;
        break;
      }
    }
    require(extended, "DENSITY_FAILURE",
            "no generator of open " + std::to_string(n) +
                " extends the stage inside F");
  }
  res.point = stage;
  return res;
}

}  // namespace qpolis
