#include "qpolis/powerspace.hpp"

#include <algorithm>

namespace qpolis {

namespace {

std::vector<PointSet> minimal_basis(const FiniteSpace& x) {
  std::vector<PointSet> basis;
  for (std::uint32_t p = 0; p < x.size(); ++p) basis.push_back(x.up(p));
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

OpenCode basic1(std::uint64_t idx) {
  return OpenCode::from_basics({BasicOpen{{idx}}});
}

}  // namespace

PowerspaceHandle powerspace(const FiniteSpace& x) {
  return powerspace(x, minimal_basis(x));
}

PowerspaceHandle powerspace(const FiniteSpace& x, const std::vector<PointSet>& basis) {
  BasicPosite base = posite_from_copres(x, basis);
  Copresentation copres = coidl_space(base.posite);
  return PowerspaceHandle{x, std::move(base), std::move(copres)};
}

std::uint64_t closed_to_coideal(const PowerspaceHandle& h, PointSet closed) {
  std::uint64_t mask = 0;
  for (std::size_t u = 0; u < h.base.denotation_of.size(); ++u)
    if (h.base.denotation_of[u] & closed) mask |= 1ull << u;
  return mask;
}

PointSet coideal_to_closed(const PowerspaceHandle& h, std::uint64_t coideal) {
  PointSet missed = 0;
  for (std::size_t u = 0; u < h.base.denotation_of.size(); ++u)
    if (!((coideal >> u) & 1)) missed |= h.base.denotation_of[u];
  return h.x.full() & ~missed;
}

OpenCode dia_code(const PowerspaceHandle& h, PointSet open_set) {
  std::vector<BasicOpen> gens;
  for (std::size_t u = 0; u < h.base.denotation_of.size(); ++u)
    if (subset(h.base.denotation_of[u], open_set))
      gens.push_back(BasicOpen{{static_cast<std::uint64_t>(u)}});
  return OpenCode::from_basics(std::move(gens));
}

std::vector<Pi02Relation> down_copres(const PowerspaceHandle& h) {
  std::vector<Pi02Relation> rels;
  rels.push_back({OpenCode::whole_space(), dia_code(h, h.x.full()), "down-nonempty"});
  std::size_t m = h.base.denotation_of.size();
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) {
      PointSet inter = h.base.denotation_of[u] & h.base.denotation_of[v];
      rels.push_back({OpenCode::from_basics({BasicOpen{
                          {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v)}}}),
                      dia_code(h, inter),
                      "down-meet(" + std::to_string(u) + "," + std::to_string(v) + ")"});
    }
  return rels;
}

EssentialReport essential_check_via_powerspace(const FiniteMap& f) {
  require(f.is_continuous(), "NOT_CONTINUOUS", "map is not continuous");
  EssentialReport out;
  LowerPowerspace fx = lower_powerspace(f.source);
  std::vector<std::uint32_t> g(f.target.size());
  for (std::uint32_t y = 0; y < f.target.size(); ++y)
    g[y] = fx.point_of(f.preimage(f.target.down(y)));
  FiniteMap fiber_closure(f.target, fx.space, std::move(g));
  out.map_continuous = fiber_closure.is_continuous();
  out.essential = is_essential(f);
  if (out.essential != out.map_continuous)
    out.report.fail("essential iff fiber-closure map continuous fails",
                    {{"essential", out.essential ? "true" : "false"}});
  // The lemma's identity: preimage of Dia U is the saturation of f(U).
  for (PointSet u : f.source.opens()) {
    PointSet lhs = fiber_closure.preimage(fx.dia(u));
    PointSet rhs = f.target.saturation(f.image(u));
    if (lhs != rhs) {
      out.report.fail("preimage of Dia U differs from saturation of f(U)",
                      {{"U", std::to_string(u)}});
      break;
    }
  }
  return out;
}

Report openmap_fiber_closure_check(const FiniteMap& f, bool allow_non_open) {
  require(f.is_continuous(), "NOT_CONTINUOUS", "map is not continuous");
  if (!allow_non_open)
    require(f.is_open_map(), "NOT_OPEN_MAP", "map is not open");
  Report rep;
  for (std::uint32_t y = 0; y < f.target.size(); ++y) {
    PointSet lhs = f.preimage(f.target.down(y));
    PointSet rhs = f.source.closure(f.fiber(y));
    if (lhs != rhs)
      rep.fail("fiber closure identity fails",
               {{"y", f.target.name(y)},
                {"preimage_of_closure", std::to_string(lhs)},
                {"closure_of_fiber", std::to_string(rhs)}});
  }
  return rep;
}

OpenSurjEmbedding open_surj_embedding(const FiniteMap& f) {
  require(f.is_continuous(), "NOT_CONTINUOUS", "map is not continuous");
  require(f.is_open_map(), "NOT_OPEN_MAP", "map is not open");
  require(f.is_surjective(), "NOT_SURJECTIVE", "map is not surjective");

  OpenSurjEmbedding out;
  PowerspaceHandle h = powerspace(f.source);

  for (std::uint32_t y = 0; y < f.target.size(); ++y)
    out.image.push_back(closed_to_coideal(h, f.source.closure(f.fiber(y))));

  // Injectivity and the (*) identity: the embedding's preimage of Dia U is
  // exactly f(U), for every open U of the source.
  {
    auto sorted = out.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      out.report.fail("fiber-closure map is not injective");
  }
  for (PointSet u : f.source.opens()) {
    PointSet expect = f.image(u);
    PointSet got = 0;
    for (std::uint32_t y = 0; y < f.target.size(); ++y) {
      PointSet closed = f.source.closure(f.fiber(y));
      if (closed & u) got |= 1ull << y;
    }
    if (got != expect) {
      out.report.fail("(*) identity fails: preimage of Dia U != f(U)",
                      {{"U", std::to_string(u)}});
      break;
    }
  }

  // The theorem's three conditions over the coideal carrier.
  std::size_t m = h.base.denotation_of.size();
  out.conditions.push_back(
      {OpenCode::whole_space(), dia_code(h, f.source.full()), "surj-nonempty"});
  for (std::size_t u = 0; u < m; ++u) {
    PointSet sat_u = f.preimage(f.image(h.base.denotation_of[u]));
    for (std::size_t v = 0; v < m; ++v) {
      out.conditions.push_back(
          {OpenCode::from_basics({BasicOpen{{static_cast<std::uint64_t>(u),
                                             static_cast<std::uint64_t>(v)}}}),
           dia_code(h, sat_u & h.base.denotation_of[v]),
           "surj-density(" + std::to_string(u) + "," + std::to_string(v) + ")"});
    }
    out.conditions.push_back({dia_code(h, sat_u), basic1(u),
                              "surj-reflect(" + std::to_string(u) + ")"});
  }

  // Evaluate the conditions on every coideal and compare with the image.
  auto coideals = denote(h.copres);
  for (std::uint64_t a : coideals) {
    bool in = true;
    for (const auto& rel : out.conditions)
      if (rel.antecedent.contains_point(a) && !rel.consequent.contains_point(a)) {
        in = false;
        break;
      }
    if (in) out.condition_set.push_back(a);
  }
  auto expected = out.image;
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  if (out.condition_set != expected)
    out.report.fail("three-condition set differs from the embedding's image",
                    {{"conditions", std::to_string(out.condition_set.size())},
                     {"image", std::to_string(expected.size())}});
  return out;
}

}  // namespace qpolis
