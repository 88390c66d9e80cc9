#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "crownlab/critpairs.hpp"

namespace crownlab {

/// A total order on A ∪ B, bottom to top.
struct LinearExtension {
  std::vector<Element> order;

  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

/// Every element appears once and every a_i < b_j of the crown is respected.
bool is_linear_extension(const Crown& crown, const LinearExtension& l);
/// L reverses (a,b) when b is placed below a.
bool reverses(const Crown& crown, const LinearExtension& l, CritPair p);
bool reverses_all(const LinearExtension& l, const PairSet& s);

/// Pairs (x_1,y_1), ..., (x_m,y_m) with x_a < y_{a-1} cyclically.
struct AltCycle {
  std::vector<CritPair> pairs;

  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const AltCycle&, const AltCycle&) = default;
};

bool is_alternating_cycle(const Crown& crown, const AltCycle& c);
/// Throws DomainError unless c has at least two distinct critical pairs and
/// satisfies the alternating property.
void validate_cycle(const Crown& crown, const AltCycle& c);
/// x_a < y_b exactly when b = a-1. Throws DomainError for an invalid cycle.
bool is_strict(const Crown& crown, const AltCycle& c);
/// Removes chords until the cycle is strict; the result uses a subset of the
/// original pairs.
AltCycle make_strict(const Crown& crown, AltCycle c);

enum class Sac3Class { Disjoint, Overlap };

/// Which circular arrangement a strict 3-cycle has. Throws DomainError unless
/// c is strict of size 3.
Sac3Class classify_sac3(const Crown& crown, const AltCycle& c);

/// Either a reversing linear extension or a strict alternating cycle inside S.
struct Certificate {
  std::optional<LinearExtension> extension;
  std::optional<AltCycle> cycle;

  bool reversible() const { return extension.has_value(); }
};

/// Both outcomes are re-verified before being returned.
Certificate reversibility_certificate(const PairSet& s);
bool is_reversible(const PairSet& s);
/// Throws DomainError if S is not reversible.
LinearExtension reversing_extension(const PairSet& s);

/// Reachability in the order generated by the crown plus y < x for every
/// (x,y) in R. Element a_i is node i-1 and b_j is node n+k+j-1. Throws
/// DomainError if R is not reversible.
std::vector<DynBitset> reversal_closure(const PairSet& r);

/// The first pair outside R (in pair order) whose addition keeps R reversible.
std::optional<CritPair> addable_pair(const PairSet& r);
bool is_maximal_reversible(const PairSet& r);

/// Blocks of a reversing extension of a maximal reversible set, read bottom to
/// top as (A_{s+1}, B_s, A_s, ..., A_1, B_0). Blocks are never empty.
struct BlockStructure {
  int s = 0;
  /// a_blocks[i-1] is A_i for i in 1..s+1; b_blocks[j] is B_j for j in 0..s.
  std::vector<std::vector<int>> a_blocks;
  std::vector<std::vector<int>> b_blocks;

  const std::vector<int>& A(int i) const { return a_blocks.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& B(int j) const { return b_blocks.at(static_cast<std::size_t>(j)); }
};

/// Throws DomainError if R is not reversible, or is reversible but not
/// maximal (the message names an addable pair).
BlockStructure block_structure(const PairSet& r);
bool is_admissible(const Crown& crown, const BlockStructure& bs);
bool satisfies_maximality(const Crown& crown, const BlockStructure& bs);

/// A(R) ordered A_1 first (largest B-set), ties by index.
std::vector<int> consistent_labeling(const PairSet& r);

struct CycleQuery {
  int min_size = 2;
  int max_size = 2;
  /// When >= 0, only cycles whose first pair has a position in `within` at
  /// most this value (pairs are numbered in pair order) are reported.
  int max_start = -1;
};

/// Calls `visit` once per strict alternating cycle whose pairs all lie in
/// `within` and whose size is in [min_size, max_size]. Each cycle starts at
/// its smallest pair. Returning false from `visit` stops the enumeration.
void for_each_strict_cycle(const PairSet& within, const CycleQuery& query,
                           const std::function<bool(const AltCycle&)>& visit);

}  // namespace crownlab
