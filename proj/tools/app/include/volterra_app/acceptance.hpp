#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "volterra_app/report.hpp"

namespace volterra::app {

inline constexpr std::uint64_t kDefaultSeed = 20261016;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// One-line summary of the decisive numbers.
  std::string detail;
  double seconds = 0.0;
  ReportTable table;
};

struct AcceptanceOptions {
  std::filesystem::path corpus = VOLTERRA_DEFAULT_CORPUS;
  std::uint64_t seed = kDefaultSeed;
  /// Criterion ids to run; empty runs all eleven.
  std::vector<int> only;
};

inline constexpr int kCriterionCount = 11;

/// Runs the acceptance criteria in order, reporting each result as soon as it is known.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3  log-term absence: ... (1.2 s)".
std::string criterion_line(const CriterionResult& r);

}  // namespace volterra::app
