#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpolis/json_io.hpp"

namespace qpolis {

struct SuiteParams {
  std::uint64_t seed = 7;
  std::uint32_t max_size = 0;  // 0: per-suite default
  std::uint32_t fuel = 50;
  std::uint32_t rounds = 12;
};

/// One acceptance criterion: a deterministic function of (seed, budgets).
/// Reports never embed wall-clock data, so reruns are byte-identical.
struct CriterionResult {
  std::string id;
  std::string title;
  bool ok = false;
  Json details;
};

CriterionResult criterion_posite_extraction(const SuiteParams& p);   // 1
CriterionResult criterion_enough_points(const SuiteParams& p);       // 2
CriterionResult criterion_ideals_opens(const SuiteParams& p);        // 3
CriterionResult criterion_powerspace(const SuiteParams& p);          // 4
CriterionResult criterion_sobriety(const SuiteParams& p);            // 5
CriterionResult criterion_baire(const SuiteParams& p);               // 6
CriterionResult criterion_pi02_transfer(const SuiteParams& p);       // 7
CriterionResult criterion_kuratowski(const SuiteParams& p);          // 8
CriterionResult criterion_reals(const SuiteParams& p);               // 9
CriterionResult criterion_completion(const SuiteParams& p);          // 10
CriterionResult criterion_games(const SuiteParams& p);               // 11
CriterionResult criterion_open_surjection(const SuiteParams& p);     // 12

std::vector<std::string> suite_names();

/// Runs a named suite (oracle, posite, powerspace, baire, game, reals,
/// completion) and returns its canonical JSON report. UNKNOWN_SUITE for
/// anything else.
Json run_suite(const std::string& name, const SuiteParams& p);

/// All thirteen criteria in order (13 is determinism: every suite rerun with
/// the same seed must serialize identically).
std::vector<CriterionResult> run_all_criteria(const SuiteParams& p);

}  // namespace qpolis
