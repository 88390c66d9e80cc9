#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crownlab/crown.hpp"
#include "crownlab/solvers.hpp"

namespace crownlab {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  double elapsed_ms = 0;
};

struct BatteryOptions {
  std::uint64_t seed = 0;
  /// Random independent sets per position for the transform identities.
  int random_sets = 100;
  /// n+k caps for the expensive checks; a check past its cap is skipped.
  int solver_max_nk = 10;
  int cover_max_nk = 10;
  int enumeration_max_nk = 9;
  Limits limits;
};

struct BatteryReport {
  int n = 0;
  int k = 0;
  std::vector<CheckResult> checks;

  /// No check failed (skipped checks are allowed).
  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

/// Every formula and construction check that applies to S_n^k.
BatteryReport verify_battery(const Crown& crown, const BatteryOptions& options = {});

/// Seeded random independent set: pairs visited in shuffled order, each kept
/// with a per-set probability when it has no neighbor already kept.
PairSet random_independent_set(const CritGraph& graph, std::mt19937_64& rng);

}  // namespace crownlab
