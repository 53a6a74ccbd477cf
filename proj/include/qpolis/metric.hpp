#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qpolis/copres.hpp"
#include "qpolis/rat.hpp"

namespace qpolis {

/// Countable dense set with an exact rational metric. The 1-D constructor
/// covers the grid-based tests; dist may be any metric oracle.
struct MetricData {
  std::vector<Rat> coords;  // labels double as positions on the line

  std::size_t size() const { return coords.size(); }
  Rat dist(std::size_t i, std::size_t j) const { return abs(coords[i] - coords[j]); }
};

/// {k/denom : 0 <= k <= denom} in [0,1].
MetricData dyadic_grid(std::uint32_t denom);

/// Formal ball: a center index into D and an exact positive radius.
struct Ball {
  std::size_t center;
  Rat radius;
};

/// Formal inclusion B(b,s) inside B(a,r): d(a,b) + s <= r. Strictly stronger
/// than semantic inclusion but decidable from the metric oracle.
bool formally_included(const MetricData& d, const Ball& inner, const Ball& outer);

/// Fixed enumeration of formal balls: index k names center k mod |D| with the
/// (k div |D|)-th positive rational as radius.
Ball ball_of_index(const MetricData& d, std::uint64_t idx);

/// Copresentation of the metric completion of D over the formal-ball
/// subbasis. Relation families, round-robin interleaved:
///   upward closure and directedness of the observed balls under formal
///   inclusion, arbitrarily small observed balls (radius < 1/2n for each n),
///   and regularity: every observed ball formally-strictly contains another
///   observed one. METRIC_VIOLATION if the oracle fails the metric axioms on
///   the inspected triples.
Copresentation metric_completion(const MetricData& d);

}  // namespace qpolis
