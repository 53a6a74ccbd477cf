#include "qpolis/metric.hpp"

#include "qpolis/error.hpp"

namespace qpolis {

MetricData dyadic_grid(std::uint32_t denom) {
  MetricData d;
  for (std::uint32_t k = 0; k <= denom; ++k) d.coords.push_back(Rat(k, denom));
  return d;
}

bool formally_included(const MetricData& d, const Ball& inner, const Ball& outer) {
  return d.dist(outer.center, inner.center) + inner.radius <= outer.radius;
}

namespace {

// Positive rationals with the dyadic radii pulled forward: even slots walk the
// Stern-Brocot tree, odd slot m yields 1/2^((m+1)/2). Duplicates are harmless;
// what matters is that small radii appear at small indices.
Rat radius_at(std::uint64_t m) {
  if (m % 2 == 0) return stern_brocot(m / 2);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>((m + 1) / 2));
  return Rat(mpz_class(1), den);
}

}  // namespace

Ball ball_of_index(const MetricData& d, std::uint64_t idx) {
  std::size_t n = d.size();
  return Ball{static_cast<std::size_t>(idx % n), radius_at(idx / n)};
}

namespace {

OpenCode basic1(std::uint64_t idx) {
  return OpenCode::from_basics({BasicOpen{{idx}}});
}

std::string ball_str(const MetricData& d, const Ball& b) {
  return "B(" + rat_str(d.coords[b.center]) + "," + rat_str(b.radius) + ")";
}

void check_metric_axioms(const MetricData& d) {
  std::size_t n = d.size();
  require(n > 0, "METRIC_VIOLATION", "empty point set");
  std::size_t cap = n <= 100 ? n : 100;  // exhaustive at grid scale
  for (std::size_t i = 0; i < cap; ++i) {
    require(d.dist(i, i) == 0, "METRIC_VIOLATION", "d(x,x) != 0");
    for (std::size_t j = 0; j < cap; ++j) {
      require(d.dist(i, j) == d.dist(j, i), "METRIC_VIOLATION", "asymmetric metric");
      require(i == j || d.dist(i, j) > 0, "METRIC_VIOLATION",
              "distinct points at distance 0");
      for (std::size_t k = 0; k < cap; ++k)
        require(d.dist(i, k) <= d.dist(i, j) + d.dist(j, k), "METRIC_VIOLATION",
                "triangle inequality fails");
    }
  }
}

}  // namespace

Copresentation metric_completion(const MetricData& d) {
  check_metric_axioms(d);
  MetricData data = d;

  // Upward closure under formal inclusion: observed inner ball forces the
  // outer one. The m-th relation is the m-th diagonal pair of ball indices
  // related by strict formal inclusion.
  Enumerable<Pi02Relation> upward(std::function<Pi02Relation(std::size_t)>(
      [data](std::size_t m) {
        std::uint64_t seen = 0;
        for (std::uint64_t t = 0;; ++t) {
          std::uint64_t i, j;
          diag_unpair(t, i, j);
          if (i == j) continue;
          Ball bi = ball_of_index(data, i), bj = ball_of_index(data, j);
          if (!formally_included(data, bi, bj)) continue;
          if (seen++ == m)
            return Pi02Relation{basic1(i), basic1(j),
                                "upward(" + ball_str(data, bi) + " in " +
                                    ball_str(data, bj) + ")"};
        }
      }));

  // Directedness: two observed balls admit a common formally-included
  // observed ball. The consequent scans ball indices lazily.
  Enumerable<Pi02Relation> directed(std::function<Pi02Relation(std::size_t)>(
      [data](std::size_t m) {
        std::uint64_t i, j;
        diag_unpair(m, i, j);
        Ball bi = ball_of_index(data, i), bj = ball_of_index(data, j);
        OpenCode common(std::function<BasicOpen(std::size_t)>(
            [data, bi, bj](std::size_t g) {
              std::uint64_t seen = 0;
              for (std::uint64_t k = 0;; ++k) {
                Ball bk = ball_of_index(data, k);
                if (formally_included(data, bk, bi) &&
                    formally_included(data, bk, bj)) {
                  if (seen++ == g) return BasicOpen{{k}};
                }
              }
            }));
        return Pi02Relation{basic1(i).intersect(basic1(j)), common,
                            "directed(" + ball_str(data, bi) + "," +
                                ball_str(data, bj) + ")"};
      }));

  // Arbitrarily small balls: for each n >= 1 some observed radius < 1/(2n).
  Enumerable<Pi02Relation> small(std::function<Pi02Relation(std::size_t)>(
      [data](std::size_t m) {
        Rat bound(1, 2 * (static_cast<unsigned long>(m) + 1));
        OpenCode tiny(std::function<BasicOpen(std::size_t)>(
            [data, bound](std::size_t g) {
              std::uint64_t seen = 0;
              for (std::uint64_t k = 0;; ++k)
                if (ball_of_index(data, k).radius < bound) {
                  if (seen++ == g) return BasicOpen{{k}};
                }
            }));
        return Pi02Relation{OpenCode::whole_space(), tiny,
                            "small-diameter(n=" + std::to_string(m + 1) + ")"};
      }));

  // Regularity: every observed ball contains an observed ball with slack,
  // rendering "[V]_{1/n} inside U" as d(a,b) + s < r.
  Enumerable<Pi02Relation> regular(std::function<Pi02Relation(std::size_t)>(
      [data](std::size_t m) {
        Ball bm = ball_of_index(data, m);
        OpenCode inner(std::function<BasicOpen(std::size_t)>(
            [data, bm, m](std::size_t g) {
              std::uint64_t seen = 0;
              for (std::uint64_t k = 0;; ++k) {
                Ball bk = ball_of_index(data, k);
                if (data.dist(bm.center, bk.center) + bk.radius < bm.radius) {
                  if (seen++ == g) return BasicOpen{{k}};
                }
              }
            }));
        return Pi02Relation{basic1(m), inner, "regular(" + ball_str(data, bm) + ")"};
      }));

  Copresentation c;
  c.domain = IndexDomain::countable();
  c.relations =
      Enumerable<Pi02Relation>::round_robin({upward, directed, small, regular});
  c.provenance = "metric_completion";
  return c;
}

}  // namespace qpolis
