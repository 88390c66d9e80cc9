#pragma once

#include <string>
#include <vector>

#include "crownlab/critpairs.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/reversibility.hpp"

namespace crownlab {

enum class BlockingKind { Contraction, Expansion };

/// ((a,b),(x,y)) with a = a_i, y = b_i and x < b.
bool is_contraction_blocking_pair(const Crown& crown, int i, CritPair first, CritPair last);
/// ((a,b),(x,y)) with a = a_i, y = b_{i+k} and x < b.
bool is_expansion_blocking_pair(const Crown& crown, int i, CritPair first, CritPair last);

struct BlockingPairReport {
  BlockingKind kind;
  int position;
  PairSet first_set;
  PairSet last_set;
};

/// FCBP/LCBP (contraction) or FEBP/LEBP (expansion) at position i. Throws
/// DomainError unless S is independent.
BlockingPairReport blocking_pairs(const PairSet& s, BlockingKind kind, int i);

enum class TransformKind { DFCL, DLCF, DFEL, DLEF };

std::string to_string(TransformKind kind);
/// Accepts "dfcl", "DFCL", etc.
TransformKind parse_transform_kind(const std::string& text);

struct TransformStep {
  TransformKind op;
  int position;
  std::vector<CritPair> removed;
  std::vector<CritPair> added;
};

struct TransformOutcome {
  PairSet result;
  TransformStep step;
};

/// One transform step. Throws DomainError unless S is independent.
TransformOutcome apply_transform(const PairSet& s, TransformKind kind, int i);
PairSet transform(const PairSet& s, TransformKind kind, int i);

enum class FanDirection { Forward, Backward };

/// Forward alpha-fan {(x_a, w) : x_a <= w <= y_a}; backward alpha-fan
/// {(z, y_a) : x_a <= z <= y_a}; alpha is 1-based. Throws DomainError unless
/// C is a strict 3-cycle.
PairSet fan(const Crown& crown, const AltCycle& c, int alpha, FanDirection direction);

struct GapReport {
  int gaps[3];
  int spread;
};

/// Gap sizes |(y_a, x_{a+1})| and spread max_a (g_a - g_{a+1} - g_{a+2}).
/// Throws DomainError unless C is a strict 3-cycle with the Disjoint Property.
GapReport spread(const Crown& crown, const AltCycle& c);

/// Raised by saturate_fans when the procedure cannot continue; carries the
/// steps taken so far.
class StepTraceError : public Error {
 public:
  StepTraceError(const std::string& what, std::vector<TransformStep> trace)
      : Error(what), trace_(std::move(trace)) {}
  const std::vector<TransformStep>& trace() const { return trace_; }

 private:
  std::vector<TransformStep> trace_;
};

struct FanSaturation {
  PairSet result;
  std::vector<TransformStep> trace;
};

/// Repeatedly contracts S until it contains the requested fan of C at each of
/// the three corners (alpha = 1, 2, 3 in turn). Forward fans grow by DFCL and
/// backward fans by DLCF at the blocking position nearest the missing pair.
FanSaturation saturate_fans(const PairSet& s, const AltCycle& c, const FanDirection (&f)[3]);

}  // namespace crownlab
