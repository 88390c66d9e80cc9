#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crownlab/critpairs.hpp"
#include "crownlab/graph_search.hpp"

namespace crownlab {

/// Instance-size guards for the exact solvers. Exceeding one raises
/// ResourceError; nothing is raised silently.
struct Limits {
  int max_vertices = 2000;
  int maxrev_max_nk = 12;
  int inr_max_nk = 10;
  int cover_max_nk = 9;
  int hyperedge_max_nk = 9;
  int hyperedge_max_size = 5;
  /// Lifts every n+k guard (the vertex guard and closure width still apply).
  bool override_guards = false;

  /// Defaults, with every n+k guard replaced by CROWNLAB_GUARD_MAX_NK when
  /// that variable holds a positive integer.
  static Limits from_environment();
};

struct SolveReport {
  std::string quantity;
  int n = 0;
  int k = 0;
  /// Empty when the quantity does not exist (max INR for n > 2k).
  std::optional<long long> value;
  std::optional<PairSet> witness;
  std::vector<PairSet> cover;
  std::vector<int> coloring;
  double elapsed_ms = 0;
  std::uint64_t nodes = 0;
};

SolveReport max_independent_set(const CritGraph& graph, const Limits& limits = {});
SolveReport chromatic_number(const CritGraph& graph, const Limits& limits = {});
SolveReport max_reversible_set(const Crown& crown, const Limits& limits = {});
SolveReport max_inr_set(const Crown& crown, const Limits& limits = {});
SolveReport min_reversible_cover(const Crown& crown, const Limits& limits = {});

/// Minimal non-reversible sets (hyperedges) with at most max_size pairs, by
/// size then pair order.
std::vector<PairSet> enumerate_min_nonreversible(const Crown& crown, int max_size,
                                                 const Limits& limits = {});

/// Calls `visit` once per maximal reversible set.
void for_each_maximal_reversible(const Crown& crown,
                                 const std::function<void(const PairSet&)>& visit,
                                 const Limits& limits = {});

/// Exact test for a partition of Inc(A,B) into at most d reversible sets.
std::optional<std::vector<PairSet>> reversible_partition(const Crown& crown, int d,
                                                         SearchStats& stats);

/// Closed forms used across the library and tests.
int alpha_formula(int k);
int dimension_formula(int n, int k);

}  // namespace crownlab
