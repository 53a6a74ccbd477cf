#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpolis/copres.hpp"
#include "qpolis/finite_ops.hpp"
#include "qpolis/stream.hpp"

namespace qpolis {

/// One covering relation: members cover the element `covered`.
struct Cover {
  std::vector<std::uint32_t> members;  // ascending, unique
  std::uint32_t covered = 0;

  bool operator==(const Cover& o) const {
    return covered == o.covered && members == o.members;
  }
};

/// Output of a stability witness: a cover of the smaller element together
/// with a refinement map sending each member (by position) to a member of
/// the original cover above it.
struct WitnessResult {
  Cover cover;
  std::vector<std::uint32_t> refine;  // refine[k] = position in the original cover
};

/// Countable posite with a finite carrier: a poset plus covering relations
/// satisfying the pointwise condition (members lie below what they cover)
/// and stability (covers refine to covers of smaller elements).
///
/// Stability is carried constructively: the witness computes refinements,
/// and covers it produces beyond the declared list are added to the family
/// at construction (the family is the witness-closure of the declared
/// covers). The default witness searches the family for the least-index
/// refining cover and otherwise returns the maximal refinement
/// {V' <= U' : V' below some member}.
class Posite {
 public:
  using Witness =
      std::function<WitnessResult(const Posite&, const Cover&, std::uint32_t)>;

  static Posite make(std::vector<std::string> names,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& leq,
                     std::vector<Cover> covers, Witness witness = nullptr);

  std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  bool leq(std::uint32_t u, std::uint32_t v) const { return (up_[u] >> v) & 1; }
  std::uint64_t up_mask(std::uint32_t u) const { return up_[u]; }
  const std::vector<Cover>& covers() const { return covers_; }

  WitnessResult call_witness(const Cover& cover, std::uint32_t smaller) const {
    return witness_(*this, cover, smaller);
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> up_;  // up_[u] = {v : u <= v}
  std::vector<Cover> covers_;
  Witness witness_;
};

/// Exhaustive validation of the posite axioms and witness correctness.
Report check_axioms(const Posite& p);

// --- the four derived spaces -------------------------------------------------

Copresentation upset_space(const Posite& p);
Copresentation filt_space(const Posite& p);
Copresentation coidl_space(const Posite& p);
Copresentation pfilt_space(const Posite& p);

/// Set-theoretic prime filters, computed directly from the definitions
/// (nonempty upward-closed directed cover-inhabited subsets).
std::vector<std::uint64_t> brute_prime_filters(const Posite& p);
std::vector<std::uint64_t> brute_coideals(const Posite& p);
std::vector<std::uint64_t> brute_filters(const Posite& p);
std::vector<std::uint64_t> brute_ideals(const Posite& p);

bool is_coideal_mask(const Posite& p, std::uint64_t mask);
bool is_ideal_mask(const Posite& p, std::uint64_t mask);

// --- posite extraction from a copresented finite space -------------------------

struct BasicPosite {
  Posite posite;
  std::vector<PointSet> denotation_of;  // carrier element -> open of the space
};

/// The countable basic posite of the proof, built from the canonical Pi^0_2
/// image presentation of e_U(X): covers V_{i,U} for each profile relation i
/// and basis element U below the relation's antecedent intersection. The
/// emitted family satisfies the basic-posite equation (each cover's union
/// equals the covered open) and is stability-closed by construction.
/// NOT_A_BASIS if the family fails to be a basis of distinct opens.
BasicPosite posite_from_copres(const FiniteSpace& x, const std::vector<PointSet>& basis);

// --- generic points -------------------------------------------------------------

struct GenericFilterRun {
  PointStream stream;                 // enumerates the prime filter
  std::vector<std::uint32_t> pivots;  // descending chain, pivots[0] = W
};

/// The prime-ideal-theorem constructor: a fair schedule (cover k visited at
/// every step divisible by k, 1-based, ascending within a step) drives a
/// descending pivot chain through the coideal oracle; the output stream
/// enumerates the upward closure of the pivots, a prime filter X with
/// W in X subset of A. ORACLE_BREACH when the oracle rejects a whole cover
/// of the current pivot, contradicting the coideal contract.
GenericFilterRun generic_prime_filter(const Posite& p,
                                      const std::function<bool(std::uint32_t)>& coideal,
                                      std::uint32_t w, std::uint32_t budget);

// --- ideals vs opens of the copresented space -----------------------------------

/// The brute-forced denotation of pfilt_space with its trace topology.
struct PfiltModel {
  DenotedSpace den;
};

PfiltModel pfilt_model(const Posite& p);

/// Forward half of the spatiality bijection: an ideal to the open set of
/// prime filters it generates. NOT_AN_IDEAL on invalid input.
PointSet ideal_to_open(const Posite& p, const PfiltModel& m, std::uint64_t ideal);

/// Backward half: an open set of prime filters to the ideal of elements whose
/// basic trace it absorbs. NOT_OPEN on invalid input.
std::uint64_t open_to_ideal(const Posite& p, const PfiltModel& m, PointSet open_pts);

// --- Baire-category generic point ------------------------------------------------

struct BctResult {
  std::uint64_t point = 0;             // union of the finite stages
  std::vector<std::uint64_t> stages;   // s_0 subset s_1 subset ...
};

/// The Baire-category point builder over S^I, I finite: grows finite stages
/// s_n, extending by the least-indexed generator of each dense open that the
/// closed-set oracle accepts. EMPTY_F when the oracle rejects the empty
/// stage; DENSITY_FAILURE (reporting n) when an open admits no acceptable
/// generator.
BctResult generic_point_bct(std::uint32_t index_count,
                            const std::function<bool(std::uint64_t)>& f_hits_upset,
                            const std::vector<OpenCode>& opens, std::uint32_t rounds,
                            std::size_t generator_budget = 4096);

}  // namespace qpolis
