#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qpolis/enumerable.hpp"
#include "qpolis/finite_space.hpp"

namespace qpolis {

/// Finite set of subbasis indices, denoting the basic open up(s) of S^I.
/// The empty set denotes the whole space.
struct BasicOpen {
  std::vector<std::uint64_t> indices;  // sorted, unique

  static BasicOpen whole() { return {}; }
  BasicOpen merged(const BasicOpen& other) const;
  bool contains_point(std::uint64_t mask) const;  // finite-index mask membership
  BasicOpen remapped(const std::function<std::uint64_t(std::uint64_t)>& f) const;
};

/// Union of an enumerable family of basic opens. A code with no generators
/// denotes the empty set and encodes "false" consequents; only that
/// syntactic shape is treated as definitely empty.
class OpenCode {
 public:
  OpenCode() = default;
  explicit OpenCode(Enumerable<BasicOpen> gens) : gens_(std::move(gens)) {}
  explicit OpenCode(std::function<BasicOpen(std::size_t)> gen)
      : gens_(Enumerable<BasicOpen>(std::move(gen))) {}

  static OpenCode empty_code() { return OpenCode(); }
  static OpenCode whole_space() {
    return from_basics({BasicOpen::whole()});
  }
  static OpenCode from_basics(std::vector<BasicOpen> bs) {
    return OpenCode(Enumerable<BasicOpen>(std::move(bs)));
  }

  const Enumerable<BasicOpen>& generators() const { return gens_; }
  bool empty_code_p() const { return gens_.empty_code(); }

  /// Distributes generators: (union of up s) cap (union of up t) =
  /// union of up(s cup t); enumerable sides interleave diagonally.
  OpenCode intersect(const OpenCode& other) const;
  OpenCode unite(const OpenCode& other) const;
  OpenCode remapped(std::function<std::uint64_t(std::uint64_t)> f) const;

  /// Membership of a point of a finite-index model given as a bitmask.
  bool contains_point(std::uint64_t mask) const;

 private:
  Enumerable<BasicOpen> gens_;
};

struct Pi02Relation {
  OpenCode antecedent;  // U_n
  OpenCode consequent;  // V_n
  std::string label;

  Pi02Relation remapped(const std::function<std::uint64_t(std::uint64_t)>& f) const {
    return {antecedent.remapped(f), consequent.remapped(f), label};
  }
};

struct IndexDomain {
  bool is_finite = true;
  std::uint32_t count = 0;

  static IndexDomain finite_n(std::uint32_t n) { return {true, n}; }
  static IndexDomain countable() { return {false, 0}; }
};

/// Countable copresentation: a subbasis index set plus an enumerable list of
/// Pi^0_2 relations between open codes. When the index set and all families
/// are finite, the denoted subset of S^I is computable by brute force.
struct Copresentation {
  IndexDomain domain;
  Enumerable<Pi02Relation> relations;
  std::string provenance;

  bool fully_finite() const;

  /// Checks that all indices mentioned are in range. For countable families
  /// the first `budget` relations are inspected.
  void validate(std::size_t budget = 64) const;
};

// --- brute-force denotation (finite instances only) -------------------------

/// All points of S^n satisfying every relation, as index bitmasks in
/// ascending order. Requires a fully finite copresentation with n <= 20.
std::vector<std::uint64_t> denote(const Copresentation& c);

/// The denotation as a finite space: points are the denoted masks (ascending
/// order), topology generated by the traces of the subbasic up{i}. Points
/// with identical subbasis profiles are identified (the denotation is then
/// the T0 quotient; for honest copresentations of T0 spaces this is a no-op).
struct DenotedSpace {
  FiniteSpace space;
  std::vector<std::uint64_t> mask_of_point;
  std::vector<PointSet> subbasic_traces;  // one per index, as point-sets
};

DenotedSpace denote_space(const Copresentation& c);

/// True when the two finite spaces are homeomorphic (exhaustive search over
/// order isomorphisms; both sides must be small).
bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace qpolis
