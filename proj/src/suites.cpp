#include "qpolis/suites.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qpolis/catalog.hpp"
#include "qpolis/game.hpp"
#include "qpolis/metric.hpp"
#include "qpolis/posite.hpp"
#include "qpolis/powerspace.hpp"
#include "qpolis/reals.hpp"
#include "qpolis/space_builders.hpp"

namespace qpolis {

namespace {

std::vector<PointSet> minimal_basis(const FiniteSpace& x) {
  std::vector<PointSet> basis;
  for (std::uint32_t p = 0; p < x.size(); ++p) basis.push_back(x.up(p));
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

// Canonical form of a poset's up-rows under relabeling; used to dedup the
// exhaustive catalogs up to homeomorphism.
std::vector<PointSet> canonical_order(const std::vector<PointSet>& up) {
  std::uint32_t n = static_cast<std::uint32_t>(up.size());
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<PointSet> best;
  do {
    std::vector<PointSet> rows(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if ((up[i] >> j) & 1) rows[perm[i]] |= 1ull << perm[j];
    if (best.empty() || rows < best) best = rows;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FiniteSpace> iso_catalog(std::uint32_t lo, std::uint32_t hi) {
  std::vector<FiniteSpace> out;
  for (std::uint32_t n = lo; n <= hi; ++n) {
    std::set<std::vector<PointSet>> seen;
    for (const auto& up : all_posets(n))
      if (seen.insert(canonical_order(up)).second) {
        std::vector<std::string> names;
        for (std::uint32_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
        out.push_back(FiniteSpace::from_order(std::move(names), canonical_order(up)));
      }
  }
  return out;
}

Posite random_posite(Rng& rng, std::uint32_t max_elems, std::uint32_t max_covers) {
  std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(max_elems));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> leq;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.below(3) == 0) leq.emplace_back(i, j);
  std::vector<Cover> covers;
  std::uint32_t count = static_cast<std::uint32_t>(rng.below(max_covers + 1));
  // Build the order first to sample pcpl-respecting members.
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i));
  Posite order_only = Posite::make(names, leq, {});
  for (std::uint32_t c = 0; c < count; ++c) {
    Cover cover;
    cover.covered = static_cast<std::uint32_t>(rng.below(n));
    for (std::uint32_t v = 0; v < n; ++v)
      if (order_only.leq(v, cover.covered) && rng.below(2) == 0)
        cover.members.push_back(v);
    covers.push_back(std::move(cover));
  }
  return Posite::make(names, leq, std::move(covers));
}

std::uint64_t stream_mask(const PointStream& s, std::uint32_t depth) {
  std::uint64_t m = 0;
  for (std::uint64_t i : s.observe(depth)) m |= 1ull << i;
  return m;
}

}  // namespace

CriterionResult criterion_posite_extraction(const SuiteParams& p) {
  CriterionResult r{"1", "posite extraction: axioms and basic-posite equation", true, {}};
  Rng rng(p.seed);
  std::uint32_t max_pts = p.max_size ? p.max_size : 5;
  std::size_t failures = 0;
  for (int i = 0; i < 200; ++i) {
    FiniteSpace x = random_t0_space(rng, max_pts);
    BasicPosite bp = posite_from_copres(x, minimal_basis(x));
    Report rep = check_axioms(bp.posite);
    if (!rep.ok) ++failures;
    for (const Cover& c : bp.posite.covers()) {
      PointSet u = 0;
      for (std::uint32_t v : c.members) u |= bp.denotation_of[v];
      if (u != bp.denotation_of[c.covered]) ++failures;
    }
  }
  r.ok = failures == 0;
  r.details = Json{{"instances", 200}, {"failures", failures}};
  return r;
}

CriterionResult criterion_enough_points(const SuiteParams& p) {
  CriterionResult r{"2", "enough points: generic prime filter vs brute force", true, {}};
  Rng rng(p.seed + 1);
  std::size_t failures = 0, instances = 0;
  while (instances < 200) {
    Posite pos = random_posite(rng, 8, 12);
    auto coideals = brute_coideals(pos);
    std::vector<std::uint64_t> nonempty;
    for (std::uint64_t m : coideals)
      if (m) nonempty.push_back(m);
    if (nonempty.empty()) continue;
    ++instances;
    std::uint64_t a_mask = nonempty[rng.below(nonempty.size())];
    std::vector<std::uint32_t> elems;
    for (std::uint32_t u = 0; u < pos.size(); ++u)
      if ((a_mask >> u) & 1) elems.push_back(u);
    std::uint32_t w = elems[rng.below(elems.size())];
    std::uint32_t budget =
        (pos.size() + 2) * std::max<std::uint32_t>(1, static_cast<std::uint32_t>(
                                                          pos.covers().size()));
    GenericFilterRun run = generic_prime_filter(
        pos, [a_mask](std::uint32_t u) { return ((a_mask >> u) & 1) != 0; }, w,
        budget);
    std::uint64_t filt = stream_mask(run.stream, budget + 2);
    bool ok = ((filt >> w) & 1) && subset(filt, a_mask);
    auto primes = brute_prime_filters(pos);
    ok = ok && std::binary_search(primes.begin(), primes.end(), filt);
    if (!ok) ++failures;
  }
  r.ok = failures == 0;
  r.details = Json{{"instances", instances}, {"failures", failures}};
  return r;
}

CriterionResult criterion_ideals_opens(const SuiteParams& p) {
  CriterionResult r{"3", "ideals correspond to opens of the prime-filter space", true, {}};
  std::size_t failures = 0, instances = 0;
  auto check = [&](const Posite& pos) {
    ++instances;
    PfiltModel model = pfilt_model(pos);
    auto ideals = brute_ideals(pos);
    if (ideals.size() != model.den.space.opens().size()) {
      ++failures;
      return;
    }
    for (std::uint64_t ideal : ideals) {
      PointSet open = ideal_to_open(pos, model, ideal);
      if (!model.den.space.is_open(open) || open_to_ideal(pos, model, open) != ideal) {
        ++failures;
        return;
      }
    }
    for (PointSet open : model.den.space.opens())
      if (ideal_to_open(pos, model, open_to_ideal(pos, model, open)) != open) {
        ++failures;
        return;
      }
  };
  // Exhaustive up to isomorphism over carriers <= 5, with the two canonical
  // cover menus (none, and covering each element by what sits strictly below
  // it, minimal elements by themselves).
  for (std::uint32_t n = 1; n <= 5; ++n) {
    std::set<std::vector<PointSet>> seen;
    for (const auto& up : all_posets(n)) {
      if (!seen.insert(canonical_order(up)).second) continue;
      std::vector<std::string> names;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> leq;
      for (std::uint32_t i = 0; i < n; ++i) {
        names.push_back("u" + std::to_string(i));
        for (std::uint32_t j = 0; j < n; ++j)
          if (i != j && ((up[i] >> j) & 1)) leq.emplace_back(i, j);
      }
      check(Posite::make(names, leq, {}));
      std::vector<Cover> menu;
      for (std::uint32_t u = 0; u < n; ++u) {
        Cover c;
        c.covered = u;
        for (std::uint32_t v = 0; v < n; ++v)
          if (v != u && ((up[v] >> u) & 1)) c.members.push_back(v);
        if (c.members.empty()) c.members.push_back(u);
        menu.push_back(std::move(c));
      }
      check(Posite::make(names, leq, std::move(menu)));
    }
  }
  Rng rng(p.seed + 2);
  for (int i = 0; i < 100; ++i) check(random_posite(rng, 6, 8));
  r.ok = failures == 0;
  r.details = Json{{"instances", instances}, {"failures", failures}};
  return r;
}

CriterionResult criterion_powerspace(const SuiteParams& p) {
  CriterionResult r{"4", "powerspace: coideals = closed sets, homeomorphically", true, {}};
  std::uint32_t max_pts = p.max_size ? p.max_size : 5;
  std::size_t failures = 0, instances = 0;
  for (std::uint32_t n = 1; n <= max_pts; ++n)
    for (const FiniteSpace& x : all_t0_spaces(n)) {
      ++instances;
      PowerspaceHandle h = powerspace(x);
      auto coideals = denote(h.copres);
      auto closed = x.closed_sets();
      if (coideals.size() != closed.size()) {
        ++failures;
        continue;
      }
      // f_U is a bijection matching the brute-forced coideal denotation.
      std::vector<std::uint64_t> mapped;
      for (PointSet f : closed) mapped.push_back(closed_to_coideal(h, f));
      auto sorted = mapped;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != coideals) {
        ++failures;
        continue;
      }
      bool round = true;
      for (PointSet f : closed)
        round = round && coideal_to_closed(h, closed_to_coideal(h, f)) == f;
      if (!round) {
        ++failures;
        continue;
      }
      // Homeomorphism: the open lattices correspond point-for-point.
      LowerPowerspace fx = lower_powerspace(x);
      DenotedSpace den = denote_space(h.copres);
      std::vector<std::uint32_t> to_den(fx.space.size());
      for (std::uint32_t pt = 0; pt < fx.space.size(); ++pt) {
        std::uint64_t mask = closed_to_coideal(h, fx.closed_of_point[pt]);
        std::size_t at = std::lower_bound(den.mask_of_point.begin(),
                                          den.mask_of_point.end(), mask) -
                         den.mask_of_point.begin();
        to_den[pt] = static_cast<std::uint32_t>(at);
      }
      if (fx.space.opens().size() != den.space.opens().size()) {
        ++failures;
        continue;
      }
      bool lattice = true;
      for (PointSet u : fx.space.opens()) {
        PointSet img = 0;
        for (std::uint32_t pt = 0; pt < fx.space.size(); ++pt)
          if ((u >> pt) & 1) img |= 1ull << to_den[pt];
        if (!den.space.is_open(img)) lattice = false;
      }
      if (!lattice) {
        ++failures;
        continue;
      }
      // down_copres = irreducible closed sets = image of the down map.
      Copresentation with_down = pi02_subspace(h.copres, down_copres(h));
      auto down_den = denote(with_down);
      std::vector<std::uint64_t> irr;
      for (PointSet f : irreducible_closed_sets(x))
        irr.push_back(closed_to_coideal(h, f));
      std::sort(irr.begin(), irr.end());
      FiniteMap dm = down_map(x, fx);
      std::vector<std::uint64_t> dm_img;
      for (std::uint32_t pt = 0; pt < x.size(); ++pt)
        dm_img.push_back(closed_to_coideal(h, fx.closed_of_point[dm.graph[pt]]));
      std::sort(dm_img.begin(), dm_img.end());
      dm_img.erase(std::unique(dm_img.begin(), dm_img.end()), dm_img.end());
      if (down_den != irr || down_den != dm_img) ++failures;
    }
  r.ok = failures == 0;
  r.details = Json{{"instances", instances}, {"failures", failures}};
  return r;
}

CriterionResult criterion_sobriety(const SuiteParams& p) {
  CriterionResult r{"5", "sobriety: irreducible closed sets biject with points", true, {}};
  std::uint32_t max_pts = p.max_size ? p.max_size : 5;
  std::size_t failures = 0, instances = 0;
  for (std::uint32_t n = 0; n <= max_pts; ++n)
    for (const FiniteSpace& x : all_t0_spaces(n)) {
      ++instances;
      auto witness = sober_witness(x);
      if (witness.size() != x.size()) {
        ++failures;
        continue;
      }
      std::set<std::uint32_t> points;
      for (auto& [f, pt] : witness) {
        if (x.down(pt) != f) ++failures;
        points.insert(pt);
      }
      if (points.size() != x.size()) ++failures;
    }
  r.ok = failures == 0;
  r.details = Json{{"instances", instances}, {"failures", failures}};
  return r;
}

namespace {

// Density of the open (given as reachability into F cap U) inside the closed
// down-set F: from every stage in F some superset stays in F and hits U.
bool dense_in(std::uint32_t index_count, const std::vector<char>& in_f,
              const std::vector<char>& in_u) {
  std::uint64_t total = 1ull << index_count;
  std::vector<char> reach(total, 0);
  for (std::uint64_t s = total; s-- > 0;) {
    if (in_f[s] && in_u[s]) {
      reach[s] = 1;
      continue;
    }
    for (std::uint32_t i = 0; i < index_count && !reach[s]; ++i)
      if (!((s >> i) & 1) && reach[s | (1ull << i)]) reach[s] = 1;
  }
  for (std::uint64_t s = 0; s < total; ++s)
    if (in_f[s] && !reach[s]) return false;
  return true;
}

}  // namespace

CriterionResult criterion_baire(const SuiteParams& p) {
  CriterionResult r{"6", "Baire category: generic point lands in F and every dense open",
                    true, {}};
  Rng rng(p.seed + 3);
  std::size_t failures = 0, instances = 0;
  while (instances < 100) {
    std::uint32_t ic = 4 + static_cast<std::uint32_t>(rng.below(7));  // 4..10
    std::uint64_t total = 1ull << ic;
    std::uint32_t root_count = 1 + static_cast<std::uint32_t>(rng.below(4));
    std::vector<std::uint64_t> roots;
    for (std::uint32_t i = 0; i < root_count; ++i) roots.push_back(rng.next() & (total - 1));
    std::vector<char> in_f(total, 0);
    for (std::uint64_t z = 0; z < total; ++z)
      for (std::uint64_t root : roots)
        if (subset(z, root)) in_f[z] = 1;
    std::uint64_t common = total - 1;
    for (std::uint64_t root : roots) common &= root;
    // Dense opens: basics inside every root, plus composite candidates kept
    // only when the density check passes.
    std::vector<OpenCode> opens;
    std::vector<std::vector<char>> in_u;
    std::uint32_t want = 1 + static_cast<std::uint32_t>(rng.below(20));
    std::uint32_t guard = 0;
    while (opens.size() < want && guard++ < 200) {
      std::vector<BasicOpen> gens;
      std::uint32_t parts = 1 + static_cast<std::uint32_t>(rng.below(3));
      for (std::uint32_t g = 0; g < parts; ++g) {
        std::uint64_t t = rng.next() & (parts == 1 ? common : (total - 1));
        BasicOpen b;
        for (std::uint32_t i = 0; i < ic; ++i)
          if ((t >> i) & 1) b.indices.push_back(i);
        gens.push_back(std::move(b));
      }
      OpenCode code = OpenCode::from_basics(gens);
      std::vector<char> u(total, 0);
      for (std::uint64_t z = 0; z < total; ++z) u[z] = code.contains_point(z);
      if (!dense_in(ic, in_f, u)) continue;
      opens.push_back(std::move(code));
      in_u.push_back(std::move(u));
    }
    if (opens.empty()) continue;
    ++instances;
    BctResult res = generic_point_bct(
        ic, [&in_f](std::uint64_t s) { return in_f[s] != 0; }, opens,
        static_cast<std::uint32_t>(opens.size()));
    bool ok = in_f[res.point] != 0;
    for (std::size_t n = 0; n < opens.size(); ++n) ok = ok && in_u[n][res.point];
    // Brute-force cross-check that the intersection really is nonempty.
    bool nonempty = false;
    for (std::uint64_t z = 0; z < total && !nonempty; ++z) {
      if (!in_f[z]) continue;
      bool all = true;
      for (std::size_t n = 0; n < opens.size() && all; ++n) all = in_u[n][z];
      nonempty = all;
    }
    if (!ok || !nonempty) ++failures;
  }
  r.ok = failures == 0;
  r.details = Json{{"instances", instances}, {"failures", failures}};
  return r;
}

CriterionResult criterion_pi02_transfer(const SuiteParams& p) {
  CriterionResult r{"7", "Pi02 transfer: constructed set equals the subspace", true, {}};
  std::size_t failures = 0, instances = 0;
  for (const FiniteSpace& x : iso_catalog(1, p.max_size ? p.max_size : 4)) {
    auto subbasis = minimal_basis(x);
    for (PointSet y = 0; y < (1ull << x.size()); ++y) {
      ++instances;
      // Embed the subspace into S^Y via its own minimal basis traces.
      std::vector<std::uint32_t> pts;
      for (std::uint32_t q = 0; q < x.size(); ++q)
        if ((y >> q) & 1) pts.push_back(q);
      Pi02EmbeddingData data;
      data.index_count = static_cast<std::uint32_t>(pts.size());
      for (std::uint32_t q : pts) data.witness_opens.push_back(x.up(q));
      std::vector<std::uint64_t> profile(pts.size(), 0);
      for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (x.leq(pts[i], pts[a])) profile[a] |= 1ull << i;
      for (std::uint64_t s = 0; s < (1ull << pts.size()); ++s) {
        std::vector<std::uint64_t> consequent;
        std::set<std::uint64_t> seen;
        for (std::size_t a = 0; a < pts.size(); ++a)
          if (subset(s, profile[a]) && seen.insert(profile[a]).second)
            consequent.push_back(profile[a]);
        data.image_relations.push_back({{s}, consequent});
      }
      try {
        Pi02TransferResult res = pi02_transfer(x, y, data, subbasis);
        if (res.computed != y) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  r.ok = failures == 0;
  r.details = Json{{"instances", instances}, {"failures", failures}};
  return r;
}

CriterionResult criterion_kuratowski(const SuiteParams& p) {
  CriterionResult r{"8", "category quantifiers and Kuratowski-Ulam identities", true, {}};
  std::size_t failures = 0, maps = 0;
  auto catalog = iso_catalog(1, p.max_size ? p.max_size : 4);
  for (const FiniteSpace& x : catalog)
    for (const FiniteSpace& y : catalog)
      for (const FiniteMap& f : all_maps(x, y, MapFilter::ContinuousOpen)) {
        ++maps;
        if (!verify_bairequant_identities(f).ok) ++failures;
        if (!verify_kuratowski_ulam(f).ok) ++failures;
      }
  r.ok = failures == 0;
  r.details = Json{{"continuous_open_maps", maps}, {"failures", failures}};
  return r;
}

CriterionResult criterion_reals(const SuiteParams& p) {
  CriterionResult r{"9", "reals: cut streams satisfy the Dedekind relations", true, {}};
  Copresentation reals = reals_dedekind();
  Rng rng(p.seed + 4);
  std::size_t failures = 0;
  std::vector<Rat> sample;
  for (int i = 0; i < 1000; ++i) {
    long num = static_cast<long>(rng.below(2001)) - 1000;
    long den = 1 + static_cast<long>(rng.below(50));
    Rat q = rat(num, den);
    sample.push_back(q);
    CheckReport rep = check_relations(rational_cut_stream(q), reals, p.fuel);
    if (!rep.clean()) ++failures;
  }
  // Canned irrationals (and 1/3) via certified approximations.
  auto sqrt2 = [](std::uint32_t n) {
    // Continued-fraction convergents of sqrt(2): error < 1/(q_k q_{k+1}).
    mpz_class pk = 1, qk = 1, pk1 = 3, qk1 = 2;
    while (qk * qk1 < n) {
      mpz_class pn = 2 * pk1 + pk, qn = 2 * qk1 + qk;
      pk = pk1;
      qk = qk1;
      pk1 = pn;
      qk1 = qn;
    }
    return Rat(pk1, qk1);
  };
  auto golden = [](std::uint32_t n) {
    mpz_class a = 1, b = 1;  // consecutive Fibonacci numbers
    while (b * b < n) {
      mpz_class c = a + b;
      a = b;
      b = c;
    }
    return Rat(a + b, b);
  };
  auto euler = [](std::uint32_t n) {
    Rat sum = 1;
    Rat term = 1;
    for (unsigned long k = 1; k <= n + 2; ++k) {
      term /= k;
      sum += term;
    }
    return sum;
  };
  auto pi_machin = [](std::uint32_t n) {
    // pi = 16 atan(1/5) - 4 atan(1/239); alternating tails bound the error.
    auto atan_inv = [](unsigned long x, std::uint32_t terms) {
      Rat sum = 0;
      Rat power = Rat(1, x);
      Rat xx(static_cast<unsigned long>(x) * x);
      for (std::uint32_t k = 0; k < terms; ++k) {
        Rat term = power / (2 * k + 1);
        sum += (k % 2 == 0) ? term : -term;
        power /= xx;
      }
      return sum;
    };
    std::uint32_t terms = 4;
    while (true) {
      Rat err = Rat(16, 5) / (2 * terms + 1) + Rat(4, 239) / (2 * terms + 1);
      if (err < Rat(1, n + 1)) break;
      ++terms;
    }
    return 16 * atan_inv(5, terms) - 4 * atan_inv(239, terms);
  };
  auto third = [](std::uint32_t) { return Rat(1, 3); };
  std::vector<std::function<Rat(std::uint32_t)>> irr{sqrt2, golden, euler, pi_machin,
                                                     third};
  for (auto& fn : irr) {
    CheckReport rep = check_relations(real_to_stream(fn), reals, p.fuel);
    if (!rep.clean()) ++failures;
  }
  // Separation of distinct rationals within the documented fuel: the bound is
  // one past the enumeration index of the first rational distinguishing them.
  std::size_t separation_checks = 0;
  for (std::size_t i = 0; i + 1 < sample.size() && separation_checks < 100; i += 10) {
    Rat a = sample[i], b = sample[i + 1];
    if (a == b) continue;
    ++separation_checks;
    std::uint32_t doc_fuel = 0;
    for (std::uint64_t j = 0;; ++j) {
      Rat q = rational_at(j);
      if ((q < a) != (q < b) || (q > a) != (q > b)) {
        doc_fuel = static_cast<std::uint32_t>(j) + 1;
        break;
      }
    }
    if (stream_mask(rational_cut_stream(a), doc_fuel) ==
        stream_mask(rational_cut_stream(b), doc_fuel))
      ++failures;
  }
  // The disjointness counterexample is definitely violated.
  CheckReport bad = check_relations(conflicting_cut_stream(Rat(1, 2)), reals, p.fuel);
  bool violation_seen = bad.violations > 0;
  if (!violation_seen) ++failures;
  r.ok = failures == 0;
  r.details = Json{{"rationals", 1000},
                   {"irrationals", 5},
                   {"separation_checks", separation_checks},
                   {"counterexample_violations", bad.violations},
                   {"failures", failures}};
  return r;
}

CriterionResult criterion_completion(const SuiteParams& p) {
  CriterionResult r{"10", "metric completion: grid streams and cauchy recovery", true, {}};
  MetricData grid = dyadic_grid(64);
  Copresentation comp = metric_completion(grid);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    PointStream s = metric_grid_stream(grid, grid.coords[i]);
    CheckReport rep = check_relations(s, comp, p.fuel);
    if (!rep.clean()) ++failures;
    CauchyResult c = cauchy_limit(s, grid, 16, 2000);
    if (abs(c.value - grid.coords[i]) > Rat(1, 16)) ++failures;
  }
  r.ok = failures == 0;
  r.details = Json{{"grid_points", grid.size()}, {"failures", failures}};
  return r;
}

CriterionResult criterion_games(const SuiteParams& p) {
  CriterionResult r{"11", "Choquet games: direct and composed strategies win", true, {}};
  Rng rng(p.seed + 5);
  std::size_t failures = 0;
  auto expect_ii = [&](const FiniteSpace& space, const GameHistory& h) {
    if (winner_convergent(space, h) != Verdict::IIWins) ++failures;
    if (winner_convergent(space, h) == Verdict::IIWins &&
        winner_strong(space, h) != Verdict::IIWins)
      ++failures;  // convergent win must imply strong win
  };
  for (int i = 0; i < 100; ++i) {
    FiniteSpace x = random_t0_space(rng, 8);
    StrategyII ii = strat_finite(x);
    GameHistory h = play(x, strat_i_random(p.seed * 1000 + i), ii, x.size() + 3);
    if (!history_legal(x, h) && !h.empty_space) ++failures;
    expect_ii(x, h);
  }
  // Products of up to 3 factors.
  for (int i = 0; i < 30; ++i) {
    std::size_t k = 2 + rng.below(2);
    std::vector<FiniteSpace> factors;
    std::vector<StrategyII> strats;
    for (std::size_t j = 0; j < k; ++j) {
      factors.push_back(random_t0_space(rng, 3));
      strats.push_back(strat_finite(factors.back()));
    }
    ProductSpace prod = product_space(factors);
    StrategyII ii = strat_product(factors, prod, strats);
    std::uint32_t rounds = prod.space.size() + 4;
    GameHistory h = play(prod.space, strat_i_random(p.seed * 2000 + i), ii, rounds);
    expect_ii(prod.space, h);
  }
  // Pi02 subspaces of random ambient spaces.
  for (int i = 0; i < 30; ++i) {
    FiniteSpace amb = random_t0_space(rng, 5);
    std::vector<std::pair<PointSet, PointSet>> rels;
    std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.below(2));
    for (std::uint32_t c = 0; c < count; ++c) {
      PointSet a = amb.opens()[rng.below(amb.opens().size())];
      PointSet b = amb.opens()[rng.below(amb.opens().size())];
      rels.emplace_back(a, b);
    }
    Pi02Game g = pi02_game(amb, rels);
    StrategyII ii = strat_pi02(g, strat_finite(amb));
    GameHistory h = play(g.sub, strat_i_random(p.seed * 3000 + i), ii,
                         g.sub.size() + 3);
    expect_ii(g.sub, h);
  }
  // Open images of random spaces.
  for (int i = 0; i < 30; ++i) {
    FiniteSpace x = random_t0_space(rng, 4);
    FiniteMap best = FiniteMap::identity(x);
    for (int attempt = 0; attempt < 200; ++attempt) {
      std::uint32_t m = 1 + static_cast<std::uint32_t>(rng.below(x.size()));
      FiniteSpace y = random_t0_space(rng, m);
      std::vector<std::uint32_t> g(x.size());
      for (auto& v : g) v = static_cast<std::uint32_t>(rng.below(y.size()));
      FiniteMap f(x, y, g);
      if (f.is_continuous() && f.is_open_map() && f.is_surjective()) {
        best = std::move(f);
        break;
      }
    }
    StrategyII ii = strat_open_image(best, strat_finite(best.source));
    GameHistory h = play(best.target, strat_i_random(p.seed * 4000 + i), ii,
                         best.target.size() + 3);
    expect_ii(best.target, h);
  }
  // Normalized strategies: still winning, and point-independent across pasts.
  for (int i = 0; i < 20; ++i) {
    FiniteSpace x = random_t0_space(rng, 5);
    auto basis = minimal_basis(x);
    StrategyII norm = normalize_strategy(x, strat_finite(x), basis);
    GameHistory h = play(x, strat_i_random(p.seed * 5000 + i), norm, x.size() + 3);
    expect_ii(x, h);
    // Replies agree whenever opens and the current point agree, however the
    // earlier points are rewritten.
    for (std::size_t k = 0; k < h.rounds.size(); ++k) {
      GameHistory probe;
      probe.rounds.assign(h.rounds.begin(), h.rounds.begin() + k + 1);
      probe.rounds.back().has_ii = false;
      probe.rounds.back().ii = 0;
      GameHistory variant = probe;
      Rng vr(p.seed * 7000 + i * 37 + k);
      for (std::size_t j = 0; j < k; ++j) {
        PointSet candidates = variant.rounds[j].i.open & variant.rounds[j].ii;
        std::vector<std::uint32_t> pts;
        for (std::uint32_t q = 0; q < x.size(); ++q)
          if ((candidates >> q) & 1) pts.push_back(q);
        variant.rounds[j].i.point = pts[vr.below(pts.size())];
      }
      if (norm.move(x, probe) != norm.move(x, variant)) ++failures;
    }
  }
  r.ok = failures == 0;
  r.details = Json{{"failures", failures}};
  return r;
}

CriterionResult criterion_open_surjection(const SuiteParams& p) {
  CriterionResult r{"12", "open surjections: three-condition set equals the image", true, {}};
  std::size_t failures = 0, maps = 0;
  auto catalog = iso_catalog(1, p.max_size ? p.max_size : 4);
  for (const FiniteSpace& x : catalog)
    for (const FiniteSpace& y : catalog)
      for (const FiniteMap& f : all_maps(x, y, MapFilter::OpenSurjection)) {
        ++maps;
        OpenSurjEmbedding e = open_surj_embedding(f);
        if (!e.report.ok) ++failures;
      }
  r.ok = failures == 0;
  r.details = Json{{"open_surjections", maps}, {"failures", failures}};
  return r;
}

std::vector<std::string> suite_names() {
  return {"oracle", "posite", "powerspace", "baire", "game", "reals", "completion"};
}

namespace {

std::vector<CriterionResult> suite_criteria(const std::string& name,
                                            const SuiteParams& p) {
  if (name == "oracle")
    return {criterion_sobriety(p), criterion_pi02_transfer(p), criterion_kuratowski(p),
            criterion_open_surjection(p)};
  if (name == "posite")
    return {criterion_posite_extraction(p), criterion_enough_points(p),
            criterion_ideals_opens(p)};
  if (name == "powerspace") return {criterion_powerspace(p)};
  if (name == "baire") return {criterion_baire(p)};
  if (name == "game") return {criterion_games(p)};
  if (name == "reals") return {criterion_reals(p)};
  if (name == "completion") return {criterion_completion(p)};
  fail("UNKNOWN_SUITE", "no suite named '" + name + "'");
}

}  // namespace

Json run_suite(const std::string& name, const SuiteParams& p) {
  auto results = suite_criteria(name, p);
  Json j;
  j["schema"] = "qpolis/v1/suite-report";
  j["suite"] = name;
  j["manifest"] = Json{{"seed", p.seed},
                       {"max_size", p.max_size},
                       {"fuel", p.fuel},
                       {"rounds", p.rounds}};
  bool ok = true;
  Json arr = Json::array();
  for (const auto& c : results) {
    Json jc;
    jc["criterion"] = c.id;
    jc["title"] = c.title;
    jc["ok"] = c.ok;
    jc["details"] = c.details;
    arr.push_back(jc);
    ok &= c.ok;
  }
  j["criteria"] = arr;
  j["ok"] = ok;
  return j;
}

std::vector<CriterionResult> run_all_criteria(const SuiteParams& p) {
  std::vector<CriterionResult> out{
      criterion_posite_extraction(p), criterion_enough_points(p),
      criterion_ideals_opens(p),      criterion_powerspace(p),
      criterion_sobriety(p),          criterion_baire(p),
      criterion_pi02_transfer(p),     criterion_kuratowski(p),
      criterion_reals(p),             criterion_completion(p),
      criterion_games(p),             criterion_open_surjection(p)};
  // Criterion 13: determinism. Every suite rerun with the same parameters
  // must serialize byte-identically.
  CriterionResult det{"13", "determinism: reruns are byte-identical", true, {}};
  Json sizes = Json::object();
  for (const std::string& name : suite_names()) {
    std::string a = run_suite(name, p).dump();
    std::string b = run_suite(name, p).dump();
    if (a != b) det.ok = false;
    sizes[name] = digest(a);
  }
  det.details = Json{{"digests", sizes}};
  out.push_back(det);
  return out;
}

}  // namespace qpolis
