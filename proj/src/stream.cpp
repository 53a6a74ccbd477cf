#include "qpolis/stream.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "qpolis/error.hpp"
#include "qpolis/reals.hpp"

namespace qpolis {

bool PointStream::sees(std::uint64_t idx, std::uint32_t depth) const {
  auto obs = observe(depth);
  return std::binary_search(obs.begin(), obs.end(), idx);
}

namespace {

// Minimal depth <= fuel at which all of `need` is observed; streams are
// monotone, so binary search on depth is sound.
std::optional<std::uint32_t> confirm_depth(const PointStream& p,
                                           const std::vector<std::uint64_t>& need,
                                           std::uint32_t fuel) {
  auto has_all = [&](std::uint32_t d) {
    auto obs = p.observe(d);
    for (std::uint64_t i : need)
      if (!std::binary_search(obs.begin(), obs.end(), i)) return false;
    return true;
  };
  if (!has_all(fuel)) return std::nullopt;
  std::uint32_t lo = 0, hi = fuel;
  while (lo < hi) {
    std::uint32_t mid = lo + (hi - lo) / 2;
    if (has_all(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

// Least depth at which some generator (index < fuel) of the code is fully
// observed; nullopt when none is confirmed within fuel.
std::optional<std::uint32_t> code_confirm_depth(const PointStream& p,
                                                const OpenCode& code,
                                                std::uint32_t fuel) {
  const auto& gens = code.generators();
  std::optional<std::uint32_t> best;
  std::size_t n = gens.budget(fuel);
  for (std::size_t g = 0; g < n; ++g) {
    auto d = confirm_depth(p, gens.at(g).indices, fuel);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

}  // namespace

BasicProbe in_basic(const PointStream& p, const BasicOpen& s, std::uint32_t fuel) {
  auto d = confirm_depth(p, s.indices, fuel);
  if (!d) return {false, 0};
  return {true, *d};
}

CheckReport check_relations(const PointStream& p, const Copresentation& c,
                            std::uint32_t fuel) {
  CheckReport report;
  std::size_t n = c.relations.budget(fuel);
  for (std::size_t r = 0; r < n; ++r) {
    Pi02Relation rel = c.relations.at(r);
    RelationCheck check;
    check.index = r;
    check.label = rel.label;
    auto ante = code_confirm_depth(p, rel.antecedent, fuel);
    if (!ante) {
      check.status = RelStatus::SatisfiedSoFar;  // antecedent unconfirmed
    } else {
      auto cons = code_confirm_depth(p, rel.consequent, fuel);
      if (cons) {
        check.status = RelStatus::SatisfiedSoFar;
        check.depth = std::max(*ante, *cons);
      } else if (rel.consequent.empty_code_p()) {
        check.status = RelStatus::Violated;
        check.depth = *ante;
        ++report.violations;
      } else {
        check.status = RelStatus::Pending;
        check.depth = *ante;
        ++report.pending;
      }
    }
    report.relations.push_back(std::move(check));
  }
  return report;
}

PointStream rational_cut_stream(const Rat& r) {
  return PointStream{[r](std::uint32_t depth) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t j = 0; j < depth; ++j) {
      Rat q = rational_at(j);
      if (q < r) out.push_back(dedekind_left_index(j));
      if (q > r) out.push_back(dedekind_right_index(j));
    }
    std::sort(out.begin(), out.end());
    return out;
  }};
}

PointStream real_to_stream(std::function<Rat(std::uint32_t)> approx) {
  auto cache = std::make_shared<std::vector<Rat>>();  // cache[n-1] = approx(n)
  return PointStream{[approx, cache](std::uint32_t depth) {
    while (cache->size() < depth) cache->push_back(approx(static_cast<std::uint32_t>(cache->size()) + 1));
    std::vector<std::uint64_t> out;
    for (std::uint64_t j = 0; j < depth; ++j) {
      Rat q = rational_at(j);
      for (std::uint32_t n = 1; n <= depth; ++n) {
        const Rat& a = (*cache)[n - 1];
        Rat delta(1, n);
        if (q < a - delta) {
          out.push_back(dedekind_left_index(j));
          break;
        }
        if (q > a + delta) {
          out.push_back(dedekind_right_index(j));
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }};
}

PointStream conflicting_cut_stream(const Rat& q) {
  std::uint64_t j = rational_index(q);
  return PointStream{[j](std::uint32_t depth) {
    std::vector<std::uint64_t> out;
    if (depth > 0) {
      out.push_back(dedekind_left_index(j));
      out.push_back(dedekind_right_index(j));
      std::sort(out.begin(), out.end());
    }
    return out;
  }};
}

PointStream baire_to_spower(std::function<std::uint64_t(std::uint64_t)> q) {
  return PointStream{[q](std::uint32_t depth) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 0; t < depth; ++t) {
      if (q(t) == 0) continue;
      std::uint64_t i, k;
      diag_unpair(t, i, k);
      out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }};
}

std::vector<std::uint64_t> spower_cylinder_image(const std::vector<std::uint64_t>& prefix,
                                                 std::uint32_t m) {
  require(m <= 20, "DESK_SCALE", "too many output indices");
  // Output indices already forced by nonzero prefix entries.
  std::uint64_t forced = 0;
  for (std::uint64_t t = 0; t < prefix.size(); ++t) {
    if (prefix[t] == 0) continue;
    std::uint64_t i, k;
    diag_unpair(t, i, k);
    if (i < m) forced |= 1ull << i;
  }
  // Any extension can switch any substream on and nothing off, so the image
  // truncated to indices < m is the up-set of the forced mask. Enumerated
  // explicitly: this is what the brute-force comparison in tests recomputes
  // by extending the prefix.
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 0; z < (1ull << m); ++z)
    if (subset(forced, z)) out.push_back(z);
  return out;
}

PointStream metric_point_stream(const MetricData& d,
                                std::function<Rat(std::uint32_t)> approx) {
  struct Cache {
    std::vector<Rat> approx;                       // approx[n-1]
    std::map<std::uint64_t, std::uint32_t> fired;  // ball -> emission depth
    std::map<std::uint64_t, std::uint32_t> tried;  // ball -> n checked so far
  };
  auto cache = std::make_shared<Cache>();
  MetricData data = d;
  return PointStream{[data, approx, cache](std::uint32_t depth) {
    while (cache->approx.size() < depth)
      cache->approx.push_back(approx(static_cast<std::uint32_t>(cache->approx.size()) + 1));
    std::vector<std::uint64_t> out;
    for (std::uint64_t b = 0; b < depth; ++b) {
      auto hit = cache->fired.find(b);
      if (hit != cache->fired.end()) {
        if (hit->second <= depth) out.push_back(b);
        continue;
      }
      Ball ball = ball_of_index(data, b);
      std::uint32_t& tried = cache->tried[b];
      for (std::uint32_t n = tried + 1; n <= depth; ++n) {
        if (abs(data.coords[ball.center] - cache->approx[n - 1]) + Rat(1, n) <
            ball.radius) {
          cache->fired[b] = std::max<std::uint32_t>(static_cast<std::uint32_t>(b) + 1, n);
          out.push_back(b);
          break;
        }
      }
      tried = std::max(tried, depth);
    }
    std::sort(out.begin(), out.end());
    return out;
  }};
}

PointStream metric_grid_stream(const MetricData& d, const Rat& x) {
  return metric_point_stream(d, [x](std::uint32_t) { return x; });
}

CauchyResult cauchy_limit(const PointStream& p, const MetricData& d, std::uint32_t n,
                          std::uint32_t fuel) {
  require(n >= 1, "BAD_PRECISION", "n must be positive");
  Rat bound(1, 2 * static_cast<unsigned long>(n));
  auto obs = p.observe(fuel);
  const std::uint64_t* best = nullptr;
  for (const std::uint64_t& b : obs) {
    Ball ball = ball_of_index(d, b);
    if (ball.radius <= bound) {
      best = &b;
      break;  // observation order = index order: first is canonical
    }
  }
  require(best != nullptr, "INSUFFICIENT_OBSERVATIONS",
          "no ball of radius <= 1/" + std::to_string(2 * n) + " observed at fuel " +
              std::to_string(fuel));
  Ball ball = ball_of_index(d, *best);
  auto depth = confirm_depth(p, {*best}, fuel);
  return CauchyResult{ball.center, d.coords[ball.center], ball.radius,
                      depth ? *depth : fuel};
}

}  // namespace qpolis
