#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qpolis/copres.hpp"

namespace qpolis {

using IndexMap = std::function<std::uint64_t(std::uint64_t)>;

// --- Sierpinski powers -------------------------------------------------------

Copresentation sierpinski();                       // one generic open
Copresentation sierpinski_power(std::uint32_t n);  // n generic opens
Copresentation sierpinski_power_countable();

// --- products, lifts, unions -------------------------------------------------

/// Finite list of factors, each with a finite or countable index set. When
/// all factors are finite the combined index set uses contiguous offsets;
/// otherwise factor i's index j lands at i + K*j (K = number of factors).
struct ProductResult {
  Copresentation space;
  std::vector<IndexMap> embed;  // factor-local index -> product index
};

ProductResult product(const std::vector<Copresentation>& factors);

/// X_bot: a fresh flag index marks "defined"; every original observation
/// implies the flag, and the original relations are guarded by it. The
/// all-zero point is the adjoined bottom.
struct LiftResult {
  Copresentation space;
  std::uint64_t flag;
  IndexMap embed;
};

LiftResult lift(const Copresentation& c);

/// Embedding into the product of lifts: some flag must be set, and two flags
/// never are (the exclusion relations have the empty code as consequent).
struct DisjointUnionResult {
  Copresentation space;
  std::vector<std::uint64_t> flags;
  std::vector<IndexMap> embed;
};

DisjointUnionResult disjoint_union(const std::vector<Copresentation>& pieces);

// --- gluing --------------------------------------------------------------------

/// Overlap data for one unordered pair of pieces: the open codes denoting the
/// overlap inside each piece, plus a shared overlap subbasis rendered as a
/// basic open on each side. Pairs without data are treated as disjoint.
struct OverlapData {
  std::size_t piece_a = 0, piece_b = 0;
  OpenCode in_a, in_b;
  std::vector<std::pair<BasicOpen, BasicOpen>> shared;  // (render in a, render in b)
};

struct GlueResult {
  Copresentation space;
  std::vector<std::uint64_t> flags;
  std::vector<IndexMap> embed;
};

/// Local gluing along open overlaps. All compatibility conditions are
/// rendered with open antecedents:
///   both pieces defined        => the point lies in the overlap (each side);
///   point in overlap (side a)  => the other piece is defined;
///   shared basic seen in a, b defined => the same basic is seen in b.
/// Coherence of the overlap data (profile bijection, order isomorphism,
/// triple cocycle) is verified on finite pieces; INCOHERENT_OVERLAP otherwise.
GlueResult glue(const std::vector<Copresentation>& pieces,
                const std::vector<OverlapData>& overlaps);

// --- subspaces and topology changes ---------------------------------------------

Copresentation pi02_subspace(const Copresentation& c,
                             const std::vector<Pi02Relation>& rels);

/// Sigma^0_2 code over a copresentation: union of differences of open codes.
struct Sigma02Code {
  Enumerable<std::pair<OpenCode, OpenCode>> diffs;

  static Sigma02Code open_set(const OpenCode& u);
  static Sigma02Code closed_complement(const OpenCode& u);  // X \ U
  bool contains_point(std::uint64_t mask) const;            // finite models
};

struct AdjoinResult {
  Copresentation space;
  std::vector<std::uint64_t> flags;  // one fresh index per adjoined set
  IndexMap embed;
};

/// Adjoins each Delta^0_2 set (given as a complementary pair of Sigma^0_2
/// codes) as a new open, via the proof's flag embedding. Complementarity is
/// checked by brute force when everything is finite; NOT_COMPLEMENTARY if the
/// two codes fail to partition the denotation.
AdjoinResult adjoin_delta02(
    const Copresentation& c,
    const std::vector<std::pair<Sigma02Code, Sigma02Code>>& pairs);

/// A finer topology on the same underlying space, with the base subbasis
/// translated into its indices (same opens under the translation).
struct FinerTopology {
  Copresentation space;
  std::vector<std::uint64_t> base_translation;  // base index -> finer index
};

struct JoinResult {
  Copresentation space;
  IndexMap base_embed;
  std::vector<IndexMap> finer_embed;
};

/// Topology generated by the base and the finer topologies: the product of
/// all copies cut down by diagonal relations identifying every base index
/// across copies. BAD_TRANSLATION when a finer copy's base trace fails to
/// biject with the base denotation (finite scale).
JoinResult join_topologies(const Copresentation& base,
                           const std::vector<FinerTopology>& finers);

// --- Sigma^0_xi refinement -------------------------------------------------------

/// Syntactic Sigma^0_xi code over a copresentation, finite levels.
struct SigmaCode {
  std::uint32_t level = 1;
  OpenCode open;  // level-1 payload
  std::vector<std::pair<std::shared_ptr<SigmaCode>, std::shared_ptr<SigmaCode>>> subs;

  static SigmaCode level1(OpenCode u);
  static SigmaCode diff_union(std::uint32_t level,
                              std::vector<std::pair<SigmaCode, SigmaCode>> pairs);
};

struct RefineResult {
  Copresentation space;
  std::vector<std::uint64_t> base_translation;
  std::vector<OpenCode> renderings;  // each input code as an open of the result
};

/// Finer quasi-Polish topology in which every input code denotes an open,
/// staying within the level-xi sets of the base. Requires a finite base
/// index set (the construction is verified by brute force).
RefineResult sigma_refine(const Copresentation& c, const std::vector<SigmaCode>& codes);

// --- canonical embedding ----------------------------------------------------------

/// e_U(x) = {U in the family : x in U} as index masks, one per point.
/// NOT_SUBBASIS if the family does not generate the topology.
std::vector<std::uint64_t> canonical_embedding(const FiniteSpace& x,
                                               const std::vector<PointSet>& subbasis);

/// Canonical copresentation of a finite T0 space over the given subbasis:
/// one relation (up s => union of point profiles above s) per index subset.
Copresentation finite_space_copres(const FiniteSpace& x,
                                   const std::vector<PointSet>& subbasis);

}  // namespace qpolis
