#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpolis/finite_space.hpp"

namespace qpolis {

/// Outcome of an exhaustive verifier. Failures are recorded in canonical
/// order, so the first entry is the smallest witness under the numeric
/// ordering of opens and point-sets.
struct Failure {
  std::string what;
  std::vector<std::pair<std::string, std::string>> data;
};

struct Report {
  bool ok = true;
  std::vector<Failure> failures;

  void fail(std::string what,
            std::vector<std::pair<std::string, std::string>> data = {}) {
    ok = false;
    failures.push_back({std::move(what), std::move(data)});
  }
};

// --- specialization, closure, sobriety ------------------------------------

std::vector<std::pair<std::uint32_t, std::uint32_t>> specialization(const FiniteSpace& x);

inline PointSet closure(const FiniteSpace& x, PointSet a) { return x.closure(a); }
inline PointSet saturation(const FiniteSpace& x, PointSet a) { return x.saturation(a); }

/// Nonempty closed sets that are not the union of two proper closed subsets.
std::vector<PointSet> irreducible_closed_sets(const FiniteSpace& x);

/// Maps each irreducible closed set to its unique generic point. Throws
/// WITNESS_MISSING if some irreducible closed set has no generic point
/// (impossible for finite T0 input; would signal a bug).
std::map<PointSet, std::uint32_t> sober_witness(const FiniteSpace& x);

// --- Selivanov Borel codes -------------------------------------------------

/// Syntactic Sigma^0_xi code over a finite space: level 1 holds an open set,
/// higher levels hold pairs (A_n, B_n) of codes at strictly lower levels and
/// denote the union of the differences A_n \ B_n.
struct BorelCode {
  std::uint32_t level = 1;
  PointSet open = 0;  // level 1 payload
  std::vector<std::pair<std::shared_ptr<BorelCode>, std::shared_ptr<BorelCode>>> pairs;

  static BorelCode opn(PointSet u) { return BorelCode{1, u, {}}; }
  static BorelCode diff_union(
      std::uint32_t level,
      std::vector<std::pair<BorelCode, BorelCode>> subcodes);
};

/// Checks level monotonicity and that level-1 payloads are opens of x.
void validate_borel(const FiniteSpace& x, const BorelCode& c);

PointSet eval_borel(const FiniteSpace& x, const BorelCode& c);

/// Decides whether A is Sigma^0_xi over x, xi in {1,2}. Higher xi answer via
/// the xi=2 result: the finite hierarchy collapses at level 2.
bool sigma_level_membership(const FiniteSpace& x, PointSet a, std::uint32_t xi);

// --- Baire category ---------------------------------------------------------

/// Finite semantics: comeager iff A contains the intersection of all dense
/// opens (finite lattices realize every countable intersection).
bool is_comeager(const FiniteSpace& x, PointSet a);
bool is_meager(const FiniteSpace& x, PointSet a);
/// A = U symmetric-difference M with U open and M meager, by exhaustive search.
bool is_baire_measurable(const FiniteSpace& x, PointSet a);

/// Category quantifiers along f, fibers carrying the subspace topology:
/// cat_exists = {y : A meets fiber(y) non-meagerly}, cat_forall dual.
PointSet cat_exists(const FiniteMap& f, PointSet a);
PointSet cat_forall(const FiniteMap& f, PointSet a);

/// Identities (i)-(iii) of the category-quantifier proposition, exhaustively
/// over all opens U, all subsets A (pairs for the countable union case) and
/// the full open lattice as weak basis. Requires f continuous open.
Report verify_bairequant_identities(const FiniteMap& f);

/// Kuratowski-Ulam clauses (i)-(iii) for every subset A. Requires f
/// continuous open.
Report verify_kuratowski_ulam(const FiniteMap& f);

// --- essential maps ----------------------------------------------------------

/// True iff the saturation of f(U) is open for every open U of the source.
bool is_essential(const FiniteMap& f);

// --- Pi^0_2 transfer (subspace theorem) --------------------------------------

/// Data of an embedding f of the subspace Y into S^I with Pi^0_2 image:
/// witness_opens[i] is an open W_i of the ambient space with W_i cap Y =
/// f^{-1}(up{i}); image_relations are pairs (U_n, V_n) of opens of S^I, each
/// given as a list of basic-open index masks over I.
struct Pi02EmbeddingData {
  std::uint32_t index_count = 0;
  std::vector<PointSet> witness_opens;
  std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>>
      image_relations;
};

/// The subspace theorem's explicit construction: returns the set
/// A cap intersection of B_W over the subbasis, as Pi^0_2 data over the
/// ambient space (pairs of opens read as implications), plus the computed
/// point-set, verified equal to y.
struct Pi02TransferResult {
  std::vector<std::pair<PointSet, PointSet>> relation_pairs;
  PointSet computed = 0;
};

Pi02TransferResult pi02_transfer(const FiniteSpace& x, PointSet y,
                                 const Pi02EmbeddingData& data,
                                 const std::vector<PointSet>& subbasis);

// --- lower powerspace (finite oracle side) -----------------------------------

/// F(X) materialized as a finite space: one point per closed set of X, opens
/// generated by the subbasic Dia U = {F : F cap U nonempty}.
struct LowerPowerspace {
  FiniteSpace space;
  std::vector<PointSet> closed_of_point;  // point index -> closed set of X

  std::uint32_t point_of(PointSet closed) const;
  /// Dia U as a point-set of the powerspace.
  PointSet dia(PointSet u) const;
};

LowerPowerspace lower_powerspace(const FiniteSpace& x);

/// The canonical embedding x -> closure{x} into lower_powerspace(x).
FiniteMap down_map(const FiniteSpace& x, const LowerPowerspace& fx);

}  // namespace qpolis
