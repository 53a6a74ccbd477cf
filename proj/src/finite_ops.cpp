#include "qpolis/finite_ops.hpp"

#include <algorithm>

namespace qpolis {

namespace {

std::string mask_str(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < 64; ++i)
    if ((s >> i) & 1) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>> specialization(const FiniteSpace& x) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t a = 0; a < x.size(); ++a)
    for (std::uint32_t b = 0; b < x.size(); ++b)
      if (x.leq(a, b)) pairs.emplace_back(a, b);
  return pairs;
}

std::vector<PointSet> irreducible_closed_sets(const FiniteSpace& x) {
  auto closed = x.closed_sets();
  std::vector<PointSet> out;
  for (PointSet f : closed) {
    if (f == 0) continue;
    bool irreducible = true;
    for (PointSet g : closed) {
      if (!irreducible) break;
      if (g == f || !subset(g, f)) continue;
      for (PointSet h : closed) {
        if (h == f || !subset(h, f)) continue;
        if ((g | h) == f) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) out.push_back(f);
  }
  return out;
}

std::map<PointSet, std::uint32_t> sober_witness(const FiniteSpace& x) {
  std::map<PointSet, std::uint32_t> witness;
  for (PointSet f : irreducible_closed_sets(x)) {
    bool found = false;
    for (std::uint32_t p = 0; p < x.size(); ++p)
      if (x.down(p) == f) {
        witness[f] = p;
        found = true;
        break;
      }
    require(found, "WITNESS_MISSING",
            "irreducible closed set " + mask_str(f) + " has no generic point");
  }
  return witness;
}

BorelCode BorelCode::diff_union(std::uint32_t level,
                                std::vector<std::pair<BorelCode, BorelCode>> subcodes) {
  BorelCode c;
  c.level = level;
  for (auto& [a, b] : subcodes)
    c.pairs.emplace_back(std::make_shared<BorelCode>(std::move(a)),
                         std::make_shared<BorelCode>(std::move(b)));
  return c;
}

void validate_borel(const FiniteSpace& x, const BorelCode& c) {
  if (c.level == 1) {
    require(c.pairs.empty(), "BAD_CODE", "level-1 code with subcodes");
    require(x.is_open(c.open), "BAD_CODE", "level-1 payload is not an open set");
    return;
  }
  for (const auto& [a, b] : c.pairs) {
    require(a->level < c.level && b->level < c.level, "BAD_CODE",
            "subcode level does not decrease");
    validate_borel(x, *a);
    validate_borel(x, *b);
  }
}

PointSet eval_borel(const FiniteSpace& x, const BorelCode& c) {
  if (c.level == 1) return c.open;
  PointSet r = 0;
  for (const auto& [a, b] : c.pairs)
    r |= eval_borel(x, *a) & ~eval_borel(x, *b);
  return r;
}

bool sigma_level_membership(const FiniteSpace& x, PointSet a, std::uint32_t xi) {
  require(xi >= 1, "BAD_LEVEL", "xi must be positive");
  if (xi == 1) return x.is_open(a);
  // xi >= 2: A is a finite union of differences of opens iff every point of A
  // sits inside some difference U \ V contained in A.
  for (std::uint32_t p = 0; p < x.size(); ++p) {
    if (!((a >> p) & 1)) continue;
    bool covered = false;
    for (PointSet u : x.opens()) {
      if (covered) break;
      if (!((u >> p) & 1)) continue;
      for (PointSet v : x.opens()) {
        PointSet diff = u & ~v;
        if (((diff >> p) & 1) && subset(diff, a)) {
          covered = true;
          break;
        }
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_comeager(const FiniteSpace& x, PointSet a) {
  return subset(x.comeager_core(), a);
}

bool is_meager(const FiniteSpace& x, PointSet a) {
  return is_comeager(x, x.full() & ~a);
}

bool is_baire_measurable(const FiniteSpace& x, PointSet a) {
  for (PointSet u : x.opens())
    if (is_meager(x, a ^ u)) return true;
  return false;
}

PointSet cat_exists(const FiniteMap& f, PointSet a) {
  PointSet r = 0;
  for (std::uint32_t y = 0; y < f.target.size(); ++y) {
    PointSet fib = f.fiber(y);
    if (fib == 0) continue;
    std::vector<std::uint32_t> embed;
    FiniteSpace fs = subspace(f.source, fib, &embed);
    PointSet trace = 0;
    for (std::size_t i = 0; i < embed.size(); ++i)
      if ((a >> embed[i]) & 1) trace |= 1ull << i;
    if (!is_meager(fs, trace)) r |= 1ull << y;
  }
  return r;
}

PointSet cat_forall(const FiniteMap& f, PointSet a) {
  return f.target.full() & ~cat_exists(f, f.source.full() & ~a);
}

namespace {

// Per-fiber comeager cores, so that "A meets fiber(y) non-meagerly" becomes a
// single mask test: A cap core(y) nonempty.
std::vector<PointSet> fiber_cores(const FiniteMap& f) {
  std::vector<PointSet> cores(f.target.size(), 0);
  for (std::uint32_t y = 0; y < f.target.size(); ++y) {
    PointSet fib = f.fiber(y);
    if (fib == 0) continue;
    std::vector<std::uint32_t> embed;
    FiniteSpace fs = subspace(f.source, fib, &embed);
    PointSet core = fs.comeager_core();
    for (std::size_t i = 0; i < embed.size(); ++i)
      if ((core >> i) & 1) cores[y] |= 1ull << embed[i];
  }
  return cores;
}

PointSet cat_exists_fast(const FiniteMap& f, const std::vector<PointSet>& cores,
                         PointSet a) {
  PointSet r = 0;
  for (std::uint32_t y = 0; y < f.target.size(); ++y)
    if (a & cores[y]) r |= 1ull << y;
  return r;
}

}  // namespace

Report verify_bairequant_identities(const FiniteMap& f) {
  Report rep;
  require(f.is_continuous(), "NOT_CONTINUOUS", "map is not continuous");
  require(f.is_open_map(), "NOT_OPEN_MAP", "map is not open");
  auto cores = fiber_cores(f);
  std::uint64_t subsets = 1ull << f.source.size();
  // (i) for open U: exists*(U) = f(U).
  for (PointSet u : f.source.opens())
    if (cat_exists_fast(f, cores, u) != f.image(u)) {
      rep.fail("bairequant (i): exists*(U) != f(U)", {{"U", mask_str(u)}});
      return rep;
    }
  // (ii) exists* distributes over unions; binary unions realize the finite
  // content of the countable statement.
  for (PointSet a = 0; a < subsets; ++a)
    for (PointSet b = a; b < subsets; ++b)
      if (cat_exists_fast(f, cores, a | b) !=
          (cat_exists_fast(f, cores, a) | cat_exists_fast(f, cores, b))) {
        rep.fail("bairequant (ii): exists* not additive",
                 {{"A", mask_str(a)}, {"B", mask_str(b)}});
        return rep;
      }
  // (iii) weak-basis identity for exists*(U \ A), taking the full open
  // lattice as the fiberwise weak basis.
  for (PointSet u : f.source.opens())
    for (PointSet a = 0; a < subsets; ++a) {
      PointSet lhs = cat_exists_fast(f, cores, u & ~a);
      PointSet rhs = 0;
      for (PointSet w : f.source.opens())
        if (w && subset(w, u))
          rhs |= f.image(w) & ~cat_exists_fast(f, cores, w & a);
      if (lhs != rhs) {
        rep.fail("bairequant (iii): weak-basis identity fails",
                 {{"U", mask_str(u)}, {"A", mask_str(a)}});
        return rep;
      }
    }
  return rep;
}

Report verify_kuratowski_ulam(const FiniteMap& f) {
  Report rep;
  require(f.is_continuous(), "NOT_CONTINUOUS", "map is not continuous");
  require(f.is_open_map(), "NOT_OPEN_MAP", "map is not open");
  auto cores = fiber_cores(f);
  std::uint64_t subsets = 1ull << f.source.size();
  for (PointSet a = 0; a < subsets; ++a) {
    // (i) fiberwise Baire-measurability on a comeager set of y.
    PointSet good = 0;
    for (std::uint32_t y = 0; y < f.target.size(); ++y) {
      PointSet fib = f.fiber(y);
      std::vector<std::uint32_t> embed;
      FiniteSpace fs = subspace(f.source, fib, &embed);
      PointSet trace = 0;
      for (std::size_t i = 0; i < embed.size(); ++i)
        if ((a >> embed[i]) & 1) trace |= 1ull << i;
      if (is_baire_measurable(fs, trace)) good |= 1ull << y;
    }
    if (!is_comeager(f.target, good)) {
      rep.fail("kuratowski-ulam (i): fiberwise measurability not comeager",
               {{"A", mask_str(a)}});
      return rep;
    }
    // (ii) exists*/forall* Baire-measurable in the target.
    PointSet ex = cat_exists_fast(f, cores, a);
    PointSet fa = f.target.full() &
                  ~cat_exists_fast(f, cores, f.source.full() & ~a);
    if (!is_baire_measurable(f.target, ex) || !is_baire_measurable(f.target, fa)) {
      rep.fail("kuratowski-ulam (ii): quantifier image not measurable",
               {{"A", mask_str(a)}});
      return rep;
    }
    // (iii) meagerness transfers along exists*, comeagerness along forall*.
    if (is_meager(f.target, ex) != is_meager(f.source, a)) {
      rep.fail("kuratowski-ulam (iii): meager equivalence fails",
               {{"A", mask_str(a)}});
      return rep;
    }
    if (is_comeager(f.target, fa) != is_comeager(f.source, a)) {
      rep.fail("kuratowski-ulam (iii): comeager equivalence fails",
               {{"A", mask_str(a)}});
      return rep;
    }
  }
  return rep;
}

bool is_essential(const FiniteMap& f) {
  for (PointSet u : f.source.opens())
    if (!f.target.is_open(f.target.saturation(f.image(u)))) return false;
  return true;
}

Pi02TransferResult pi02_transfer(const FiniteSpace& x, PointSet y,
                                 const Pi02EmbeddingData& data,
                                 const std::vector<PointSet>& subbasis) {
  std::uint32_t ic = data.index_count;
  require(ic <= 20, "DESK_SCALE", "embedding index set too large");
  require(data.witness_opens.size() == ic, "NOT_EMBEDDING",
          "one witness open required per index");
  for (PointSet w : data.witness_opens)
    require(x.is_open(w), "NOT_EMBEDDING", "witness W_i is not open");

  // W is a subbasis of x if the generated topology equals x's topology.
  try {
    std::vector<std::string> nm(x.size());
    for (std::uint32_t p = 0; p < x.size(); ++p) nm[p] = x.name(p);
    FiniteSpace gen = FiniteSpace::from_opens(nm, subbasis);
    require(gen.opens() == x.opens(), "NOT_EMBEDDING", "");
  } catch (const Error&) {
    fail("NOT_EMBEDDING", "the given family is not a subbasis of the ambient space");
  }

  // The embedding determined by the witness opens: f(p) = {i : p in W_i}.
  std::vector<std::uint64_t> profile(x.size(), 0);
  for (std::uint32_t p = 0; p < x.size(); ++p)
    for (std::uint32_t i = 0; i < ic; ++i)
      if ((data.witness_opens[i] >> p) & 1) profile[p] |= 1ull << i;

  // f is an embedding of the subspace Y iff the witness traces generate Y's
  // subspace topology (injectivity alone leaves the image topology coarser).
  try {
    std::vector<std::uint32_t> embed;
    FiniteSpace ysub = subspace(x, y, &embed);
    std::vector<PointSet> traces;
    for (std::uint32_t i = 0; i < ic; ++i) {
      PointSet t = 0;
      for (std::size_t j = 0; j < embed.size(); ++j)
        if ((data.witness_opens[i] >> embed[j]) & 1) t |= 1ull << j;
      traces.push_back(t);
    }
    std::vector<std::string> nm;
    for (std::uint32_t p : embed) nm.push_back(x.name(p));
    FiniteSpace gen = FiniteSpace::from_opens(nm, traces);
    require(gen.opens() == ysub.opens(), "NOT_EMBEDDING", "");
  } catch (const Error&) {
    fail("NOT_EMBEDDING",
         "witness opens do not induce the subspace topology on Y");
  }

  // Injectivity on Y and image = the Pi^0_2 set within S^I.
  auto in_code = [](const std::vector<std::uint64_t>& gens, std::uint64_t z) {
    for (std::uint64_t s : gens)
      if (subset(s, z)) return true;
    return false;
  };
  std::uint64_t icount = 1ull << ic;
  std::vector<std::uint64_t> image_pts;
  for (std::uint64_t z = 0; z < icount; ++z) {
    bool in = true;
    for (const auto& [un, vn] : data.image_relations)
      if (in_code(un, z) && !in_code(vn, z)) {
        in = false;
        break;
      }
    if (in) image_pts.push_back(z);
  }
  std::vector<std::uint64_t> y_profiles;
  for (std::uint32_t p = 0; p < x.size(); ++p)
    if ((y >> p) & 1) y_profiles.push_back(profile[p]);
  {
    auto sorted = y_profiles;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "NOT_EMBEDDING", "witness opens do not separate the subspace");
    require(sorted == image_pts, "NOT_EMBEDDING",
            "image of the subspace differs from the declared Pi^0_2 set");
  }

  // A := intersection over n of (not U_n^W union V_n^W), where basic up(s)
  // becomes W_s = intersection of the witness opens named by s.
  auto w_of = [&](std::uint64_t s) {
    PointSet w = x.full();
    for (std::uint32_t i = 0; i < ic; ++i)
      if ((s >> i) & 1) w &= data.witness_opens[i];
    return w;
  };
  auto open_of = [&](const std::vector<std::uint64_t>& gens) {
    PointSet u = 0;
    for (std::uint64_t s : gens) u |= w_of(s);
    return u;
  };
  Pi02TransferResult result;
  PointSet acc = x.full();
  for (const auto& [un, vn] : data.image_relations) {
    PointSet uw = open_of(un), vw = open_of(vn);
    result.relation_pairs.emplace_back(uw, vw);
    acc &= (x.full() & ~uw) | vw;
  }
  // B_W := not (W symmetric-difference union of W_s over f^{-1}(up s) subset W),
  // one per subbasis element; rendered as the two implications W => Z, Z => W.
  for (PointSet w : subbasis) {
    PointSet z = 0;
    for (std::uint64_t s = 0; s < icount; ++s) {
      PointSet pre = 0;  // f^{-1}(up s) inside Y
      for (std::uint32_t p = 0; p < x.size(); ++p)
        if (((y >> p) & 1) && subset(s, profile[p])) pre |= 1ull << p;
      if (subset(pre, w)) z |= w_of(s);
    }
    result.relation_pairs.emplace_back(w, z);
    result.relation_pairs.emplace_back(z, w);
    acc &= ((x.full() & ~w) | z) & ((x.full() & ~z) | w);
  }
  result.computed = acc;
  require(acc == y, "TRANSFER_MISMATCH",
          "constructed set " + mask_str(acc) + " differs from Y " + mask_str(y));
  return result;
}

std::uint32_t LowerPowerspace::point_of(PointSet closed) const {
  auto it = std::lower_bound(closed_of_point.begin(), closed_of_point.end(), closed);
  require(it != closed_of_point.end() && *it == closed, "BAD_CLOSED",
          "not a closed set of the base space");
  return static_cast<std::uint32_t>(it - closed_of_point.begin());
}

PointSet LowerPowerspace::dia(PointSet u) const {
  PointSet r = 0;
  for (std::size_t i = 0; i < closed_of_point.size(); ++i)
    if (closed_of_point[i] & u) r |= 1ull << i;
  return r;
}

LowerPowerspace lower_powerspace(const FiniteSpace& x) {
  auto closed = x.closed_sets();  // sorted ascending: canonical point order
  require(closed.size() <= 64, "DESK_SCALE", "too many closed sets");
  std::vector<std::string> names;
  for (PointSet f : closed) {
    std::string nm = "{";
    bool first = true;
    for (std::uint32_t p = 0; p < x.size(); ++p)
      if ((f >> p) & 1) {
        if (!first) nm += ",";
        nm += x.name(p);
        first = false;
      }
    names.push_back(nm + "}");
  }
  std::vector<PointSet> gens;
  LowerPowerspace fx{FiniteSpace::point(), closed};
  for (PointSet u : x.opens()) gens.push_back(fx.dia(u));
  fx.space = FiniteSpace::from_opens(std::move(names), gens);
  return fx;
}

FiniteMap down_map(const FiniteSpace& x, const LowerPowerspace& fx) {
  std::vector<std::uint32_t> g(x.size());
  for (std::uint32_t p = 0; p < x.size(); ++p) g[p] = fx.point_of(x.down(p));
  return FiniteMap(x, fx.space, std::move(g));
}

}  // namespace qpolis
