#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpolis/copres.hpp"
#include "qpolis/metric.hpp"
#include "qpolis/rat.hpp"

namespace qpolis {

/// A point of S^I observed positively and incrementally: observe(d) is the
/// finite set of subbasic indices seen within d steps, cumulative in d. The
/// denoted point is the union over all depths. Negative information is never
/// asserted.
struct PointStream {
  std::function<std::vector<std::uint64_t>(std::uint32_t)> observe;

  bool sees(std::uint64_t idx, std::uint32_t depth) const;
};

/// Minimal depth <= fuel at which the stream has seen every index of s.
struct BasicProbe {
  bool confirmed = false;
  std::uint32_t depth = 0;
};

BasicProbe in_basic(const PointStream& p, const BasicOpen& s, std::uint32_t fuel);

enum class RelStatus { SatisfiedSoFar, Pending, Violated };

/// Per-relation verdicts. Violated is permanent: it requires a confirmed
/// antecedent against a syntactically empty consequent. Pending may later
/// become satisfied when more of the consequent enumeration is explored.
struct RelationCheck {
  std::size_t index = 0;
  std::string label;
  RelStatus status = RelStatus::SatisfiedSoFar;
  std::uint32_t depth = 0;  // witnessing depth
};

struct CheckReport {
  std::vector<RelationCheck> relations;
  std::size_t violations = 0;
  std::size_t pending = 0;

  bool clean() const { return violations == 0; }
};

/// Checks the first `fuel` relations with observation depth `fuel` and
/// generator searches bounded by `fuel`. Deterministic given (stream, fuel).
CheckReport check_relations(const PointStream& p, const Copresentation& c,
                            std::uint32_t fuel);

// --- concrete streams --------------------------------------------------------

/// Stream of the Dedekind cut of an exactly known rational.
PointStream rational_cut_stream(const Rat& r);

/// Stream of the cut of x given approximations with |approx(n) - x| <= 1/n
/// for n >= 1: emits L_q once q < approx(n) - 1/n for some inspected n, R_q
/// dually. Incorrect approximations are not detected here; they surface as
/// relation violations under check_relations.
PointStream real_to_stream(std::function<Rat(std::uint32_t)> approx);

/// Stream violating disjointness: it asserts both L_q and R_q.
PointStream conflicting_cut_stream(const Rat& q);

/// The continuous open surjection N^N -> S^N, coordinatewise: with the fixed
/// diagonal pairing splitting the input into substreams, output index i is
/// observed exactly when a nonzero entry of substream i has been read.
PointStream baire_to_spower(std::function<std::uint64_t(std::uint64_t)> q);

/// Image of the depth-k cylinder prefix under baire_to_spower, truncated to
/// output indices < m, computed by brute force over extensions.
std::vector<std::uint64_t> spower_cylinder_image(const std::vector<std::uint64_t>& prefix,
                                                 std::uint32_t m);

/// Canonical stream over metric_completion(d): emits a formal ball once the
/// approximations certify the denoted point lies in it.
PointStream metric_point_stream(const MetricData& d,
                                std::function<Rat(std::uint32_t)> approx);

/// Stream of a known grid point (exact approximations).
PointStream metric_grid_stream(const MetricData& d, const Rat& x);

struct CauchyResult {
  std::size_t center = 0;
  Rat value;
  Rat radius;
  std::uint32_t depth = 0;
};

/// First observed ball of radius <= 1/(2n); its center is within 1/n of the
/// limit. INSUFFICIENT_OBSERVATIONS when fuel runs out first.
CauchyResult cauchy_limit(const PointStream& p, const MetricData& d, std::uint32_t n,
                          std::uint32_t fuel);

}  // namespace qpolis
