#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "crownlab/battery.hpp"
#include "crownlab/canonical.hpp"
#include "crownlab/critpairs.hpp"
#include "crownlab/reversibility.hpp"
#include "crownlab/solvers.hpp"
#include "crownlab/transforms.hpp"

namespace crownlab {

using nlohmann::json;

json crown_to_json(const Crown& crown);
/// Reads {"n":..,"k":..}.
Crown crown_from_json(const json& j);

json pair_to_json(CritPair p);
json pairs_to_json(const std::vector<CritPair>& pairs);
/// {"n":3,"k":3,"pairs":[[1,1],[2,4],[5,5]]}
json pairset_to_json(const PairSet& s);
/// Accepts the object form; throws DomainError on malformed input or
/// comparable pairs.
PairSet pairset_from_json(const json& j);
/// Pair lists given either as [[a,b],...] or as [["a1","b1"],...].
std::vector<CritPair> pairs_from_json(const Crown& crown, const json& j);

/// Array of element strings, bottom to top.
json extension_to_json(const LinearExtension& l);
LinearExtension extension_from_json(const Crown& crown, const json& j);

/// {"pairs":[[1,1],[2,4],[5,5]]} in cycle order.
json cycle_to_json(const AltCycle& c);
/// Accepts {"pairs":[...]} or a bare pair list.
AltCycle cycle_from_json(const Crown& crown, const json& j);

/// {"base":8,"pattern":"TLTLT","indices":[8,9,7,1,6,2]}
json sigma_to_json(const Crown& crown, const std::vector<int>& sigma);
/// Accepts {"base","pattern"}, {"indices":[...]}, or a bare list of indices
/// or "a8"-style strings.
std::vector<int> sigma_from_json(const Crown& crown, const json& j);

json step_to_json(const TransformStep& step);
json report_to_json(const SolveReport& r);
json battery_to_json(const BatteryReport& r);

/// "p edge V E" followed by one "e i j" line per edge (1-based, i < j).
std::string to_dimacs(const CritGraph& graph);
/// {"n","k","vertices":[[a,b],...]}; DIMACS vertex v is vertices[v-1].
json dimacs_sidecar(const CritGraph& graph);

}  // namespace crownlab
