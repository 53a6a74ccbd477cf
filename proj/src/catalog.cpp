#include "qpolis/catalog.hpp"

#include <algorithm>

namespace qpolis {

std::vector<std::vector<PointSet>> all_posets(std::uint32_t n) {
  require(n <= 5, "DESK_SCALE", "poset enumeration capped at 5 elements");
  std::vector<std::vector<PointSet>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Enumerate strict relations as bitmasks over ordered pairs (i<j in either
  // direction), keep those that are transitive and acyclic.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::uint64_t total = 1ull << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<PointSet> up(n);
    for (std::uint32_t i = 0; i < n; ++i) up[i] = 1ull << i;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) up[slots[s].first] |= 1ull << slots[s].second;
    bool ok = true;
    for (std::uint32_t i = 0; ok && i < n; ++i)
      for (std::uint32_t j = 0; ok && j < n; ++j) {
        if (i == j || !((up[i] >> j) & 1)) continue;
        if ((up[j] >> i) & 1) ok = false;          // antisymmetry
        else if (!subset(up[j], up[i])) ok = false;  // transitivity
      }
    if (ok) out.push_back(std::move(up));
  }
  return out;
}

std::vector<FiniteSpace> all_t0_spaces(std::uint32_t n) {
  std::vector<FiniteSpace> out;
  for (auto& rows : all_posets(n)) {
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    out.push_back(FiniteSpace::from_order(std::move(names), std::move(rows)));
  }
  return out;
}

std::vector<FiniteSpace> t0_spaces_up_to(std::uint32_t max_points) {
  std::vector<FiniteSpace> out;
  for (std::uint32_t n = 0; n <= max_points; ++n)
    for (auto& s : all_t0_spaces(n)) out.push_back(std::move(s));
  return out;
}

FiniteSpace random_t0_space(Rng& rng, std::uint32_t max_points, bool allow_empty) {
  std::uint32_t lo = allow_empty ? 0 : 1;
  std::uint32_t n = lo + static_cast<std::uint32_t>(rng.below(max_points - lo + 1));
  std::vector<PointSet> up(n);
  for (std::uint32_t i = 0; i < n; ++i) up[i] = 1ull << i;
  // Random DAG on a fixed linear order, then transitive closure.
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.below(3) == 0) up[i] |= 1ull << j;
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t i = 0; i < n; ++i)
      if ((up[i] >> k) & 1) up[i] |= up[k];
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return FiniteSpace::from_order(std::move(names), std::move(up));
}

std::vector<FiniteMap> all_maps(const FiniteSpace& x, const FiniteSpace& y,
                                MapFilter filter) {
  std::vector<FiniteMap> out;
  if (x.size() == 0) {
    FiniteMap m(x, y, {});
    bool keep = true;
    if (filter == MapFilter::ContinuousOpen || filter == MapFilter::OpenSurjection)
      keep = m.is_continuous() && m.is_open_map();
    if (filter == MapFilter::OpenSurjection) keep = keep && m.is_surjective();
    if (keep) out.push_back(std::move(m));
    return out;
  }
  if (y.size() == 0) return out;
  std::vector<std::uint32_t> g(x.size(), 0);
  while (true) {
    FiniteMap m(x, y, g);
    bool keep = true;
    if (filter == MapFilter::ContinuousOpen || filter == MapFilter::OpenSurjection)
      keep = m.is_continuous() && m.is_open_map();
    if (filter == MapFilter::OpenSurjection) keep = keep && m.is_surjective();
    if (keep) out.push_back(std::move(m));
    std::size_t k = 0;
    while (k < g.size() && ++g[k] == y.size()) g[k++] = 0;
    if (k == g.size()) break;
  }
  return out;
}

}  // namespace qpolis
