#include "qpolis/finite_space.hpp"

#include <algorithm>
#include <map>

namespace qpolis {

namespace {

// Up-sets of the preorder described by rows (rows[x] = {y : x <= y}).
// Points are processed greater-first so that when a point is added, all
// points above it are already placed.
std::vector<PointSet> all_up_sets(const std::vector<PointSet>& rows) {
  std::uint32_t n = static_cast<std::uint32_t>(rows.size());
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return popcount(rows[a]) < popcount(rows[b]);
  });
  std::vector<PointSet> sets{0};
  for (std::uint32_t p : order) {
    PointSet above = rows[p] & ~(1ull << p);
    std::size_t count = sets.size();
    require(count <= (1u << 21), "DESK_SCALE",
            "open-set lattice too large to materialize");
    for (std::size_t i = 0; i < count; ++i)
      if (subset(above, sets[i])) sets.push_back(sets[i] | (1ull << p));
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::vector<PointSet> preorder_rows(std::uint32_t n, const std::vector<PointSet>& gens) {
  std::vector<PointSet> rows(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    PointSet r = n == 64 ? ~0ull : (1ull << n) - 1;
    for (PointSet g : gens)
      if ((g >> x) & 1) r &= g;
    rows[x] = r | (1ull << x);
  }
  return rows;
}

}  // namespace

void FiniteSpace::finish() {
  std::uint32_t n = size();
  down_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      if ((up_[y] >> x) & 1) down_[x] |= 1ull << y;
  opens_ = all_up_sets(up_);
}

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> point_names,
                                    const std::vector<PointSet>& generators) {
  std::uint32_t n = static_cast<std::uint32_t>(point_names.size());
  require(n <= 64, "DESK_SCALE", "more than 64 points");
  PointSet full = n == 64 ? ~0ull : (1ull << n) - 1;
  for (PointSet g : generators)
    require(subset(g, full), "BAD_OPEN", "open mentions a point out of range");
  auto rows = preorder_rows(n, generators);
  // Two points are topologically indistinguishable iff their minimal
  // neighborhoods coincide.
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < x; ++y)
      require(rows[x] != rows[y], "NOT_T0",
              "points '" + point_names[y] + "' and '" + point_names[x] +
                  "' lie in exactly the same opens");
  FiniteSpace s;
  s.names_ = std::move(point_names);
  s.up_ = std::move(rows);
  s.finish();
  return s;
}

FiniteSpace FiniteSpace::t0_quotient(const std::vector<std::string>& point_names,
                                     const std::vector<PointSet>& generators,
                                     std::vector<std::uint32_t>* class_of) {
  std::uint32_t n = static_cast<std::uint32_t>(point_names.size());
  require(n <= 64, "DESK_SCALE", "more than 64 points");
  auto rows = preorder_rows(n, generators);
  // x ~ y iff x <= y and y <= x.
  std::vector<std::uint32_t> rep(n);
  std::vector<std::uint32_t> classes;
  for (std::uint32_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::uint32_t c : classes)
      if (((rows[x] >> c) & 1) && ((rows[c] >> x) & 1)) {
        rep[x] = c;
        found = true;
        break;
      }
    if (!found) {
      rep[x] = x;
      classes.push_back(x);
    }
  }
  std::vector<std::string> qnames;
  std::map<std::uint32_t, std::uint32_t> idx;
  for (std::uint32_t c : classes) {
    idx[c] = static_cast<std::uint32_t>(qnames.size());
    qnames.push_back(point_names[c]);
  }
  if (class_of) {
    class_of->resize(n);
    for (std::uint32_t x = 0; x < n; ++x) (*class_of)[x] = idx[rep[x]];
  }
  std::vector<PointSet> qgens;
  for (PointSet g : generators) {
    PointSet q = 0;
    for (std::uint32_t x = 0; x < n; ++x)
      if ((g >> x) & 1) q |= 1ull << idx[rep[x]];
    qgens.push_back(q);
  }
  return from_opens(std::move(qnames), qgens);
}

FiniteSpace FiniteSpace::from_order(std::vector<std::string> point_names,
                                    std::vector<PointSet> up_rows) {
  std::uint32_t n = static_cast<std::uint32_t>(point_names.size());
  require(n <= 64, "DESK_SCALE", "more than 64 points");
  require(up_rows.size() == n, "BAD_ORDER", "row count mismatch");
  for (std::uint32_t x = 0; x < n; ++x) {
    require((up_rows[x] >> x) & 1, "BAD_ORDER", "order not reflexive");
    for (std::uint32_t y = 0; y < n; ++y)
      if ((up_rows[x] >> y) & 1) {
        require(subset(up_rows[y], up_rows[x]), "BAD_ORDER", "order not transitive");
        require(x == y || !((up_rows[y] >> x) & 1), "BAD_ORDER",
                "order not antisymmetric");
      }
  }
  FiniteSpace s;
  s.names_ = std::move(point_names);
  s.up_ = std::move(up_rows);
  s.finish();
  return s;
}

FiniteSpace FiniteSpace::sierpinski() {
  return from_opens({"0", "1"}, {0b10});
}

FiniteSpace FiniteSpace::point() { return from_opens({"pt"}, {}); }

FiniteSpace FiniteSpace::empty() { return from_opens({}, {}); }

FiniteSpace FiniteSpace::discrete(std::uint32_t n) {
  std::vector<std::string> names;
  std::vector<PointSet> gens;
  for (std::uint32_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    gens.push_back(1ull << i);
  }
  return from_opens(std::move(names), gens);
}

FiniteSpace FiniteSpace::chain(std::uint32_t n) {
  std::vector<std::string> names;
  std::vector<PointSet> rows(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    names.push_back("c" + std::to_string(i));
    for (std::uint32_t j = i; j < n; ++j) rows[i] |= 1ull << j;
  }
  return from_order(std::move(names), std::move(rows));
}

bool FiniteSpace::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::vector<PointSet> cs;
  cs.reserve(opens_.size());
  for (PointSet u : opens_) cs.push_back(full() & ~u);
  std::sort(cs.begin(), cs.end());
  return cs;
}

PointSet FiniteSpace::saturation(PointSet a) const {
  PointSet r = 0;
  for (std::uint32_t x = 0; x < size(); ++x)
    if ((a >> x) & 1) r |= up_[x];
  return r;
}

PointSet FiniteSpace::closure(PointSet a) const {
  PointSet r = 0;
  for (std::uint32_t x = 0; x < size(); ++x)
    if ((a >> x) & 1) r |= down_[x];
  return r;
}

PointSet FiniteSpace::interior(PointSet a) const {
  PointSet r = 0;
  for (std::uint32_t x = 0; x < size(); ++x)
    if (subset(up_[x], a)) r |= 1ull << x;
  return r;
}

PointSet FiniteSpace::comeager_core() const {
  PointSet core = full();
  for (PointSet u : opens_)
    if (is_dense(u)) core &= u;
  return core;
}

FiniteMap::FiniteMap(FiniteSpace src, FiniteSpace tgt, std::vector<std::uint32_t> g)
    : source(std::move(src)), target(std::move(tgt)), graph(std::move(g)) {
  require(graph.size() == source.size(), "BAD_MAP", "graph size mismatch");
  for (std::uint32_t y : graph)
    require(y < target.size(), "BAD_MAP", "graph value out of range");
}

PointSet FiniteMap::image(PointSet a) const {
  PointSet r = 0;
  for (std::uint32_t x = 0; x < source.size(); ++x)
    if ((a >> x) & 1) r |= 1ull << graph[x];
  return r;
}

PointSet FiniteMap::preimage(PointSet b) const {
  PointSet r = 0;
  for (std::uint32_t x = 0; x < source.size(); ++x)
    if ((b >> graph[x]) & 1) r |= 1ull << x;
  return r;
}

PointSet FiniteMap::fiber(std::uint32_t y) const { return preimage(1ull << y); }

bool FiniteMap::is_continuous() const {
  for (PointSet v : target.opens())
    if (!source.is_open(preimage(v))) return false;
  return true;
}

bool FiniteMap::is_open_map() const {
  for (PointSet u : source.opens())
    if (!target.is_open(image(u))) return false;
  return true;
}

bool FiniteMap::is_surjective() const { return image(source.full()) == target.full(); }

bool FiniteMap::is_injective() const {
  return popcount(image(source.full())) == static_cast<int>(source.size());
}

FiniteMap FiniteMap::identity(const FiniteSpace& x) {
  std::vector<std::uint32_t> g(x.size());
  for (std::uint32_t i = 0; i < x.size(); ++i) g[i] = i;
  return FiniteMap(x, x, std::move(g));
}

std::uint32_t ProductSpace::encode(const std::vector<std::uint32_t>& tuple) const {
  std::uint32_t p = 0;
  for (std::size_t k = radices.size(); k-- > 0;) p = p * radices[k] + tuple[k];
  return p;
}

std::vector<std::uint32_t> ProductSpace::decode(std::uint32_t point) const {
  std::vector<std::uint32_t> t(radices.size());
  for (std::size_t k = 0; k < radices.size(); ++k) {
    t[k] = point % radices[k];
    point /= radices[k];
  }
  return t;
}

FiniteMap ProductSpace::projection(const std::vector<FiniteSpace>& factors,
                                   std::size_t k) const {
  std::vector<std::uint32_t> g(space.size());
  for (std::uint32_t p = 0; p < space.size(); ++p) g[p] = decode(p)[k];
  return FiniteMap(space, factors[k], std::move(g));
}

ProductSpace product_space(const std::vector<FiniteSpace>& factors) {
  std::uint64_t total = 1;
  std::vector<std::uint32_t> radices;
  for (const auto& f : factors) {
    radices.push_back(f.size());
    total *= f.size();
    require(total <= 64, "DESK_SCALE", "product space too large");
  }
  std::uint32_t n = static_cast<std::uint32_t>(total);
  std::vector<std::string> names(n);
  std::vector<PointSet> rows(n, 0);
  std::vector<std::vector<std::uint32_t>> tuples(n);
  for (std::uint32_t p = 0; p < n; ++p) {
    std::uint32_t v = p;
    std::vector<std::uint32_t> t(radices.size());
    for (std::size_t k = 0; k < radices.size(); ++k) {
      t[k] = v % radices[k];
      v /= radices[k];
    }
    tuples[p] = t;
    std::string nm = "(";
    for (std::size_t k = 0; k < t.size(); ++k)
      nm += (k ? "," : "") + factors[k].name(t[k]);
    names[p] = nm + ")";
  }
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t q = 0; q < n; ++q) {
      bool le = true;
      for (std::size_t k = 0; le && k < radices.size(); ++k)
        le = factors[k].leq(tuples[p][k], tuples[q][k]);
      if (le) rows[p] |= 1ull << q;
    }
  return ProductSpace{FiniteSpace::from_order(std::move(names), std::move(rows)),
                      std::move(radices)};
}

FiniteSpace subspace(const FiniteSpace& x, PointSet sub,
                     std::vector<std::uint32_t>* embed) {
  std::vector<std::uint32_t> pts;
  for (std::uint32_t p = 0; p < x.size(); ++p)
    if ((sub >> p) & 1) pts.push_back(p);
  if (embed) *embed = pts;
  std::vector<std::string> names;
  for (std::uint32_t p : pts) names.push_back(x.name(p));
  std::vector<PointSet> rows(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (x.leq(pts[i], pts[j])) rows[i] |= 1ull << j;
  return FiniteSpace::from_order(std::move(names), std::move(rows));
}

}  // namespace qpolis
