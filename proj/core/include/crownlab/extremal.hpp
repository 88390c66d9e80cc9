#pragma once

#include <optional>
#include <vector>

#include "crownlab/critpairs.hpp"
#include "crownlab/reversibility.hpp"

namespace crownlab {

/// The standard strict 3-cycle: for n <= k
/// {(a_1,b_1),(a_2,b_{k+1}),(a_{k+2},b_{k+2})}; for k < n <= 2k
/// {(a_1,b_{2k+1-n}),(a_{k+1},b_{k+1}),(a_{2k+1},b_{2k+1})}.
/// Throws DomainError when n > 2k.
AltCycle sac3(const Crown& crown);

/// All pairs contained in some pair of `tops`.
PairSet down_closure(const Crown& crown, const std::vector<CritPair>& tops);

/// Pairs of an odd cycle with 2t+1 entries and the arc size s_a of each.
struct MatchingCycleSpec {
  int t = 1;
  std::vector<int> sizes;
};

/// Throws DomainError unless k < n <= 2k, there are 2t+1 sizes in [1,k+1],
/// t(n-k) <= k and the sizes sum to k+2t+1-t(n-k).
void validate_spec(const Crown& crown, const MatchingCycleSpec& spec);

/// The cycle with x_1 = a_1 whose pair sizes are `spec.sizes`, laid out so
/// that both Matching Conditions hold.
AltCycle matching_cycle(const Crown& crown, const MatchingCycleSpec& spec);

/// Both Matching Conditions for t = (|C|-1)/2; false for lists that are not
/// alternating cycles. Throws DomainError for an even length or fewer than 3
/// pairs.
bool check_matching_conditions(const Crown& crown, const AltCycle& c);

/// D(C_0). Throws DomainError if the Matching Conditions fail.
PairSet downset_of_cycle(const Crown& crown, const AltCycle& c);

/// Inclusion-maximal pairs of S ordered by the index of their minimal.
std::vector<CritPair> maximal_pairs(const PairSet& s);

/// If S is maximal independent, non-reversible, contains a strict 3-cycle with
/// the Disjoint Property and equals D(Max(S)) for a cycle Max(S) meeting the
/// Matching Conditions, returns that cycle. Requires k < n <= 2k; returns
/// nullopt otherwise.
std::optional<AltCycle> minr_d3_certify(const PairSet& s);

/// The labeled largest independent non-reversible set (anchored at a_1).
/// Throws DomainError when n > 2k.
PairSet inr_extremal(const Crown& crown);

/// Closed-form size of inr_extremal.
int inr_extremal_size(int n, int k);

}  // namespace crownlab
