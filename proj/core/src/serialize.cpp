#include "crownlab/serialize.hpp"

#include <sstream>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

int int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw DomainError(std::string("expected integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

int element_index(const json& j, Role role) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    const Element e = Element::parse(j.get<std::string>());
    if (e.role != role)
      throw DomainError("element " + e.to_string() + " has the wrong role for this position");
    return e.index;
  }
  throw DomainError("expected an index or an element name like \"a3\"");
}

}  // namespace

json crown_to_json(const Crown& crown) { return {{"n", crown.n()}, {"k", crown.k()}}; }

Crown crown_from_json(const json& j) { return Crown(int_field(j, "n"), int_field(j, "k")); }

json pair_to_json(CritPair p) { return json::array({p.a, p.b}); }

json pairs_to_json(const std::vector<CritPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back(pair_to_json(p));
  return out;
}

json pairset_to_json(const PairSet& s) {
  json out = crown_to_json(s.crown());
  out["pairs"] = pairs_to_json(s.pairs());
  return out;
}

std::vector<CritPair> pairs_from_json(const Crown& crown, const json& j) {
  if (!j.is_array()) throw DomainError("expected a list of pairs");
  std::vector<CritPair> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw DomainError("each pair must be a two-element list [a, b]");
    out.push_back(make_pair(crown, element_index(item[0], Role::Min),
                            element_index(item[1], Role::Max)));
  }
  return out;
}

PairSet pairset_from_json(const json& j) {
  const Crown crown = crown_from_json(j);
  if (!j.contains("pairs")) throw DomainError("pair-set file needs a \"pairs\" list");
  const auto pairs = pairs_from_json(crown, j.at("pairs"));
  return PairSet(crown, std::span<const CritPair>(pairs));
}

json extension_to_json(const LinearExtension& l) {
  json out = json::array();
  for (const auto& e : l.order) out.push_back(e.to_string());
  return out;
}

LinearExtension extension_from_json(const Crown& crown, const json& j) {
  if (!j.is_array()) throw DomainError("expected a list of element names");
  LinearExtension l;
  for (const auto& item : j) {
    if (!item.is_string()) throw DomainError("extension entries must be element names");
    const Element e = Element::parse(item.get<std::string>());
    l.order.push_back(e.role == Role::Min ? crown.a(e.index) : crown.b(e.index));
  }
  return l;
}

json cycle_to_json(const AltCycle& c) { return {{"pairs", pairs_to_json(c.pairs)}}; }

AltCycle cycle_from_json(const Crown& crown, const json& j) {
  const json& list = j.is_object() ? j.at("pairs") : j;
  return AltCycle{pairs_from_json(crown, list)};
}

json sigma_to_json(const Crown& crown, const std::vector<int>& sigma) {
  const SigmaCode code = encode_sigma(crown, sigma);
  return {{"base", code.base}, {"pattern", code.pattern}, {"indices", sigma}};
}

std::vector<int> sigma_from_json(const Crown& crown, const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (j.contains("indices")) {
      list = &j.at("indices");
    } else {
      if (!j.contains("pattern") || !j.at("pattern").is_string())
        throw DomainError("sigma object needs \"base\" and \"pattern\"");
      return decode_sigma(crown, {int_field(j, "base"), j.at("pattern").get<std::string>()});
    }
  }
  if (!list->is_array()) throw DomainError("sigma must be an object or a list");
  std::vector<int> out;
  for (const auto& item : *list) out.push_back(element_index(item, Role::Min));
  return out;
}

json step_to_json(const TransformStep& step) {
  return {{"op", to_string(step.op)},
          {"position", step.position},
          {"removed", pairs_to_json(step.removed)},
          {"added", pairs_to_json(step.added)}};
}

json report_to_json(const SolveReport& r) {
  json out = {{"quantity", r.quantity}, {"n", r.n}, {"k", r.k}};
  out["value"] = r.value ? json(*r.value) : json(nullptr);
  if (!r.cover.empty()) {
    json parts = json::array();
    for (const auto& part : r.cover) parts.push_back(pairs_to_json(part.pairs()));
    out["witness"] = parts;
  } else if (!r.coloring.empty()) {
    out["witness"] = r.coloring;
  } else if (r.witness) {
    out["witness"] = pairs_to_json(r.witness->pairs());
  } else {
    out["witness"] = nullptr;
  }
  out["elapsed_ms"] = r.elapsed_ms;
  out["nodes"] = r.nodes;
  return out;
}

json battery_to_json(const BatteryReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"detail", c.detail},
                      {"elapsed_ms", c.elapsed_ms}});
  return {{"n", r.n}, {"k", r.k}, {"all_pass", r.all_pass()}, {"checks", checks}};
}

std::string to_dimacs(const CritGraph& graph) {
  std::ostringstream out;
  out << "p edge " << graph.size() << ' ' << graph.edge_count() << '\n';
  for (int u = 0; u < graph.size(); ++u)
    graph.neighbors(u).for_each([&](std::size_t v) {
      if (static_cast<int>(v) > u) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    });
  return out.str();
}

json dimacs_sidecar(const CritGraph& graph) {
  json vertices = json::array();
  for (int v = 0; v < graph.size(); ++v) vertices.push_back(pair_to_json(graph.vertex(v)));
  json out = crown_to_json(graph.crown());
  out["vertices"] = vertices;
  return out;
}

}  // namespace crownlab
