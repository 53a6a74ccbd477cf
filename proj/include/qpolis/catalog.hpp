#pragma once

#include <cstdint>
#include <vector>

#include "qpolis/finite_space.hpp"
#include "qpolis/rng.hpp"

namespace qpolis {

/// All labeled partial orders on n elements as up-row masks (n <= 5).
std::vector<std::vector<PointSet>> all_posets(std::uint32_t n);

/// All labeled T0 spaces on exactly n points (finite T0 topologies are the
/// up-set lattices of labeled posets).
std::vector<FiniteSpace> all_t0_spaces(std::uint32_t n);

/// All labeled T0 spaces with 0..max_points points.
std::vector<FiniteSpace> t0_spaces_up_to(std::uint32_t max_points);

/// Seeded random T0 space with at most max_points points.
FiniteSpace random_t0_space(Rng& rng, std::uint32_t max_points,
                            bool allow_empty = false);

enum class MapFilter { All, ContinuousOpen, OpenSurjection };

/// Every total map x -> y passing the filter.
std::vector<FiniteMap> all_maps(const FiniteSpace& x, const FiniteSpace& y,
                                MapFilter filter = MapFilter::All);

}  // namespace qpolis
