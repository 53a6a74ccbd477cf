#include "qpolis/copres.hpp"

#include <algorithm>
#include <map>

#include "qpolis/rat.hpp"

namespace qpolis {

BasicOpen BasicOpen::merged(const BasicOpen& other) const {
  BasicOpen out;
  out.indices.reserve(indices.size() + other.indices.size());
  std::merge(indices.begin(), indices.end(), other.indices.begin(),
             other.indices.end(), std::back_inserter(out.indices));
  out.indices.erase(std::unique(out.indices.begin(), out.indices.end()),
                    out.indices.end());
  return out;
}

bool BasicOpen::contains_point(std::uint64_t mask) const {
  for (std::uint64_t i : indices)
    if (i >= 64 || !((mask >> i) & 1)) return false;
  return true;
}

BasicOpen BasicOpen::remapped(const std::function<std::uint64_t(std::uint64_t)>& f) const {
  BasicOpen out;
  out.indices.reserve(indices.size());
  for (std::uint64_t i : indices) out.indices.push_back(f(i));
  std::sort(out.indices.begin(), out.indices.end());
  out.indices.erase(std::unique(out.indices.begin(), out.indices.end()),
                    out.indices.end());
  return out;
}

OpenCode OpenCode::intersect(const OpenCode& other) const {
  if (empty_code_p() || other.empty_code_p()) return empty_code();
  const auto& a = gens_;
  const auto& b = other.gens_;
  if (a.finite() && b.finite()) {
    std::vector<BasicOpen> out;
    out.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        out.push_back(a.at(i).merged(b.at(j)));
    return from_basics(std::move(out));
  }
  return OpenCode(std::function<BasicOpen(std::size_t)>([a, b](std::size_t n) {
    std::uint64_t i, j;
    diag_unpair(n, i, j);
    std::size_t ia = a.finite() ? i % a.size() : i;
    std::size_t jb = b.finite() ? j % b.size() : j;
    return a.at(ia).merged(b.at(jb));
  }));
}

OpenCode OpenCode::unite(const OpenCode& other) const {
  return OpenCode(Enumerable<BasicOpen>::concat(gens_, other.gens_));
}

OpenCode OpenCode::remapped(std::function<std::uint64_t(std::uint64_t)> f) const {
  return OpenCode(gens_.map(
      [f](const BasicOpen& b) { return b.remapped(f); }));
}

bool OpenCode::contains_point(std::uint64_t mask) const {
  require(gens_.finite(), "INFINITE_ENUMERATION",
          "point membership needs a finite open code");
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_.at(i).contains_point(mask)) return true;
  return false;
}

bool Copresentation::fully_finite() const {
  if (!domain.is_finite || !relations.finite()) return false;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto& r = relations.at(i);
    if (!r.antecedent.generators().finite() || !r.consequent.generators().finite())
      return false;
  }
  return true;
}

void Copresentation::validate(std::size_t budget) const {
  auto check_code = [&](const OpenCode& c) {
    const auto& g = c.generators();
    std::size_t n = g.budget(budget);
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint64_t idx : g.at(i).indices)
        require(!domain.is_finite || idx < domain.count, "BAD_INDEX",
                "relation mentions index " + std::to_string(idx) +
                    " outside the domain");
  };
  std::size_t n = relations.budget(budget);
  for (std::size_t i = 0; i < n; ++i) {
    check_code(relations.at(i).antecedent);
    check_code(relations.at(i).consequent);
  }
}

std::vector<std::uint64_t> denote(const Copresentation& c) {
  require(c.fully_finite(), "INFINITE_ENUMERATION",
          "brute-force denotation needs a fully finite copresentation");
  require(c.domain.count <= 20, "DESK_SCALE", "index set too large for brute force");
  std::vector<std::uint64_t> out;
  std::uint64_t total = 1ull << c.domain.count;
  for (std::uint64_t z = 0; z < total; ++z) {
    bool in = true;
    for (std::size_t r = 0; in && r < c.relations.size(); ++r) {
      const auto& rel = c.relations.at(r);
      if (rel.antecedent.contains_point(z) && !rel.consequent.contains_point(z))
        in = false;
    }
    if (in) out.push_back(z);
  }
  return out;
}

DenotedSpace denote_space(const Copresentation& c) {
  auto masks = denote(c);
  require(masks.size() <= 64, "DESK_SCALE", "denotation too large");
  std::vector<std::string> names;
  for (std::uint64_t m : masks) {
    std::string nm = "<";
    for (std::uint32_t i = 0; i < c.domain.count; ++i) nm += ((m >> i) & 1) ? '1' : '0';
    names.push_back(nm + ">");
  }
  std::vector<PointSet> gens(c.domain.count, 0);
  for (std::size_t p = 0; p < masks.size(); ++p)
    for (std::uint32_t i = 0; i < c.domain.count; ++i)
      if ((masks[p] >> i) & 1) gens[i] |= 1ull << p;
  DenotedSpace ds{FiniteSpace::t0_quotient(names, gens), masks, gens};
  // For honest copresentations of T0 spaces the quotient identifies nothing.
  return ds;
}

bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.size() != b.size()) return false;
  if (a.opens().size() != b.opens().size()) return false;
  std::uint32_t n = a.size();
  // Homeomorphisms of finite T0 spaces are order isomorphisms.
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::uint32_t i = 0; ok && i < n; ++i)
      for (std::uint32_t j = 0; ok && j < n; ++j)
        if (a.leq(i, j) != b.leq(perm[i], perm[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace qpolis
