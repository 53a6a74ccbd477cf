#pragma once

#include "qpolis/copres.hpp"
#include "qpolis/rat.hpp"

namespace qpolis {

/// The real line as a countable copresentation over the Dedekind-cut
/// subbasis {L_q, R_q : q rational}: index 2j is L of the j-th rational in
/// the fixed enumeration, 2j+1 is R of it. Relation families: nonemptiness
/// of both halves, downward/upward closure, roundedness on both sides,
/// disjointness (empty consequent) and locatedness, interleaved round-robin
/// so every family is exercised at small fuel.
Copresentation reals_dedekind();

std::uint64_t dedekind_left_index(std::uint64_t rational_j);
std::uint64_t dedekind_right_index(std::uint64_t rational_j);

OpenCode reals_true_code();

}  // namespace qpolis
