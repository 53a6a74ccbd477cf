#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpolis/error.hpp"

namespace qpolis {

/// Subset of a finite space's points, one bit per point. Spaces are capped at
/// 64 points; every brute-force check in this library runs at that scale.
using PointSet = std::uint64_t;

inline int popcount(PointSet s) { return __builtin_popcountll(s); }
inline bool subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

/// A finite T0 topological space given by its full open-set lattice.
///
/// Construction takes any generating family, adds the empty and full sets and
/// closes the family under binary union and intersection eagerly. Since a
/// finite topology is determined by its specialization preorder (the minimal
/// neighborhood of x is the intersection of the finitely many opens
/// containing x), the closure equals the family of all up-sets of the induced
/// preorder, which is how it is computed. Opens are kept in canonical numeric
/// bit-set order.
///
/// Non-T0 inputs are rejected unless `t0_quotient` is used, which identifies
/// topologically indistinguishable points instead.
class FiniteSpace {
 public:
  static FiniteSpace from_opens(std::vector<std::string> point_names,
                                const std::vector<PointSet>& generators);

  /// Like from_opens but quotients indistinguishable points; `class_of`, when
  /// non-null, receives old-point -> new-point indices.
  static FiniteSpace t0_quotient(const std::vector<std::string>& point_names,
                                 const std::vector<PointSet>& generators,
                                 std::vector<std::uint32_t>* class_of = nullptr);

  /// Space with the given partial order's up-sets as opens. `up_rows[x]` is
  /// the bitmask of points y with x <= y (must include x itself).
  static FiniteSpace from_order(std::vector<std::string> point_names,
                                std::vector<PointSet> up_rows);

  static FiniteSpace sierpinski();         // 0 < 1, {1} open
  static FiniteSpace point();              // one-point space
  static FiniteSpace empty();              // zero points
  static FiniteSpace discrete(std::uint32_t n);
  static FiniteSpace chain(std::uint32_t n);  // 0 < 1 < ... < n-1

  std::uint32_t size() const { return static_cast<std::uint32_t>(up_.size()); }
  PointSet full() const { return size() == 64 ? ~0ull : (1ull << size()) - 1; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::uint32_t x) const { return names_[x]; }

  const std::vector<PointSet>& opens() const { return opens_; }
  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const { return is_open(full() & ~s); }
  std::vector<PointSet> closed_sets() const;

  /// Minimal open neighborhood of x; equals the saturation of {x}.
  PointSet up(std::uint32_t x) const { return up_[x]; }
  PointSet down(std::uint32_t x) const { return down_[x]; }
  bool leq(std::uint32_t x, std::uint32_t y) const { return (up_[x] >> y) & 1; }

  /// Upward closure = intersection of all opens containing A.
  PointSet saturation(PointSet a) const;
  /// Downward closure = smallest closed superset of A.
  PointSet closure(PointSet a) const;
  PointSet interior(PointSet a) const;
  bool is_dense(PointSet a) const { return closure(a) == full(); }

  /// Intersection of all dense opens; A is comeager iff it contains this.
  PointSet comeager_core() const;

  bool operator==(const FiniteSpace& other) const {
    return names_ == other.names_ && up_ == other.up_;
  }

 private:
  FiniteSpace() = default;
  void finish();  // derive opens_ and down_ from up_

  std::vector<std::string> names_;
  std::vector<PointSet> up_;     // up_[x] = minimal neighborhood of x
  std::vector<PointSet> down_;   // down_[x] = closure of {x}
  std::vector<PointSet> opens_;  // ascending numeric order
};

/// Total function between finite spaces. Continuity and openness are
/// checkable properties, not construction invariants.
struct FiniteMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::uint32_t> graph;  // graph[x] = f(x)

  FiniteMap(FiniteSpace src, FiniteSpace tgt, std::vector<std::uint32_t> g);

  PointSet image(PointSet a) const;
  PointSet preimage(PointSet b) const;
  PointSet fiber(std::uint32_t y) const;

  bool is_continuous() const;
  bool is_open_map() const;
  bool is_surjective() const;
  bool is_injective() const;

  static FiniteMap identity(const FiniteSpace& x);
};

/// Product of finitely many spaces: points are tuples in mixed-radix
/// encoding, opens are the up-sets of the product order (the product
/// topology, since finite). Kept small enough for brute force.
struct ProductSpace {
  FiniteSpace space;
  std::vector<std::uint32_t> radices;

  std::uint32_t encode(const std::vector<std::uint32_t>& tuple) const;
  std::vector<std::uint32_t> decode(std::uint32_t point) const;
  /// Projection onto factor k as a FiniteMap (continuous, open, surjective).
  FiniteMap projection(const std::vector<FiniteSpace>& factors, std::size_t k) const;
};

ProductSpace product_space(const std::vector<FiniteSpace>& factors);

/// Subspace on the points of `sub` with the trace topology; `embed`, when
/// non-null, receives subspace-point -> ambient-point indices.
FiniteSpace subspace(const FiniteSpace& x, PointSet sub,
                     std::vector<std::uint32_t>* embed = nullptr);

}  // namespace qpolis
