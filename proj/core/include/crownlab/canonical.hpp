#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crownlab/critpairs.hpp"

namespace crownlab {

/// Largest k for which enumerate_canonical will run.
inline constexpr int kCanonicalEnumerationMaxK = 20;

/// Every prefix of `seq` (a list of A-indices) is a cyclic block of A.
/// Throws DomainError on repeated or out-of-range indices.
bool is_h_contiguous(const Crown& crown, const std::vector<int>& seq);

/// Compact form of an h-contiguous sequence: the base x_1 and one character
/// per later element, 'L' when x_{i+2} becomes the first element of the block
/// so far and 'T' when it becomes the last.
struct SigmaCode {
  int base = 1;
  std::string pattern;

  friend bool operator==(const SigmaCode&, const SigmaCode&) = default;
};

std::vector<int> decode_sigma(const Crown& crown, const SigmaCode& code);
/// Throws DomainError unless seq is h-contiguous.
SigmaCode encode_sigma(const Crown& crown, const std::vector<int>& seq);

/// T(sigma) for an h-contiguous sequence of length exactly k+1.
PairSet canonical_set(const Crown& crown, const std::vector<int>& sigma);

/// All (n+k)2^k canonical sets, base ascending, then the pattern read as a
/// binary counter ('T' = 1, first character least significant). Throws
/// ResourceError when k exceeds kCanonicalEnumerationMaxK.
void for_each_canonical(const Crown& crown,
                        const std::function<void(const std::vector<int>&, const PairSet&)>& visit);
std::vector<PairSet> enumerate_canonical(const Crown& crown);

/// The unique sigma with T(sigma) = R, or nullopt when R is not canonical.
/// Throws DomainError unless R is maximal reversible.
std::optional<std::vector<int>> recover_sigma(const PairSet& r);

enum class Portion { Initial, Terminal };

struct PortionInfo {
  Portion kind = Portion::Initial;
  int length = 0;
};

/// Whether B(x,T) is an initial or terminal run of I(x). A full I(x) counts
/// as initial. Throws DomainError if x is not in A(T) or B(x,T) is neither.
PortionInfo portion_info(const PairSet& t, int x);

/// For 3 <= n <= k and 1 <= i <= k+1-n: T((a_1,...,a_{k+1})) with the
/// neighbors of (a_{i+n}, b_i) swapped out for that pair.
PairSet noncanonical_extremal(const Crown& crown, int i);

}  // namespace crownlab
