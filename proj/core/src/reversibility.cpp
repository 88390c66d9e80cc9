#include "crownlab/reversibility.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

int node_of(const Crown& crown, Element e) {
  return e.role == Role::Min ? e.index - 1 : crown.circle() + e.index - 1;
}

Element element_of(const Crown& crown, int node) {
  const int n = crown.circle();
  return node < n ? crown.a(node + 1) : crown.b(node - n + 1);
}

std::string pair_text(CritPair p) {
  return "(a" + std::to_string(p.a) + ",b" + std::to_string(p.b) + ")";
}

// Kahn's algorithm on the crown order plus y -> x for every (x,y) in S,
// always emitting the smallest ready node (all a's before b's, then by
// index). Returns nullopt if the relation has a cycle.
std::optional<std::vector<int>> topological_order(const PairSet& s) {
  const Crown& crown = s.crown();
  const int n = crown.circle();
  const int total = 2 * n;
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(total));
  std::vector<int> indegree(static_cast<std::size_t>(total), 0);
  auto add = [&](int from, int to) {
    succ[from].push_back(to);
    ++indegree[to];
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (crown.below(i, j)) add(i - 1, n + j - 1);
  s.for_each([&](CritPair p) { add(n + p.b - 1, p.a - 1); });

  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < total; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(total));
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != total) return std::nullopt;
  return order;
}

// Arc p -> q in the auxiliary digraph when q's minimal is below p's maximal.
bool arc(const Crown& crown, CritPair p, CritPair q) { return crown.below(q.a, p.b); }

std::optional<AltCycle> shortest_cycle(const Crown& crown, const std::vector<CritPair>& members) {
  const int m = static_cast<int>(members.size());
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      if (u != v && arc(crown, members[u], members[v])) out[u].push_back(v);

  std::vector<int> best;
  for (int start = 0; start < m; ++start) {
    std::vector<int> dist(static_cast<std::size_t>(m), -1);
    std::vector<int> parent(static_cast<std::size_t>(m), -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    int closing = -1;
    while (!queue.empty() && closing < 0) {
      const int u = queue.front();
      queue.pop_front();
      if (!best.empty() && dist[u] + 1 >= static_cast<int>(best.size())) break;
      for (int v : out[u]) {
        if (v == start) {
          closing = u;
          break;
        }
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (closing < 0) continue;
    std::vector<int> cycle;
    for (int v = closing; v >= 0; v = parent[v]) cycle.push_back(v);
    std::reverse(cycle.begin(), cycle.end());
    if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
  }
  if (best.empty()) return std::nullopt;
  AltCycle c;
  for (int v : best) c.pairs.push_back(members[v]);
  return c;
}

}  // namespace

bool is_linear_extension(const Crown& crown, const LinearExtension& l) {
  const int n = crown.circle();
  if (static_cast<int>(l.order.size()) != 2 * n) return false;
  std::vector<int> position(static_cast<std::size_t>(2 * n), -1);
  for (std::size_t p = 0; p < l.order.size(); ++p) {
    const Element e = l.order[p];
    if (e.index < 1 || e.index > n) return false;
    const int v = node_of(crown, e);
    if (position[v] >= 0) return false;
    position[v] = static_cast<int>(p);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (crown.below(i, j) && position[i - 1] > position[n + j - 1]) return false;
  return true;
}

bool reverses(const Crown& crown, const LinearExtension& l, CritPair p) {
  const auto a = std::find(l.order.begin(), l.order.end(), crown.a(p.a));
  const auto b = std::find(l.order.begin(), l.order.end(), crown.b(p.b));
  return a != l.order.end() && b != l.order.end() && b < a;
}

bool reverses_all(const LinearExtension& l, const PairSet& s) {
  const Crown& crown = s.crown();
  std::vector<int> position(static_cast<std::size_t>(2 * crown.circle()), -1);
  for (std::size_t p = 0; p < l.order.size(); ++p)
    position[node_of(crown, l.order[p])] = static_cast<int>(p);
  bool ok = true;
  s.for_each([&](CritPair p) {
    const int pa = position[node_of(crown, crown.a(p.a))];
    const int pb = position[node_of(crown, crown.b(p.b))];
    if (pa < 0 || pb < 0 || pb > pa) ok = false;
  });
  return ok;
}

bool is_alternating_cycle(const Crown& crown, const AltCycle& c) {
  const std::size_t m = c.pairs.size();
  if (m < 2) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_critical(crown, c.pairs[i])) return false;
    for (std::size_t j = i + 1; j < m; ++j)
      if (c.pairs[i] == c.pairs[j]) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const CritPair& prev = c.pairs[(i + m - 1) % m];
    if (!crown.below(c.pairs[i].a, prev.b)) return false;
  }
  return true;
}

void validate_cycle(const Crown& crown, const AltCycle& c) {
  if (c.pairs.size() < 2)
    throw DomainError("an alternating cycle needs at least 2 pairs, got " +
                      std::to_string(c.pairs.size()));
  if (!is_alternating_cycle(crown, c))
    throw DomainError("pairs do not form an alternating cycle (need distinct critical pairs "
                      "with x_a < y_{a-1} cyclically)");
}

bool is_strict(const Crown& crown, const AltCycle& c) {
  validate_cycle(crown, c);
  const std::size_t m = c.pairs.size();
  std::set<int> xs;
  std::set<int> ys;
  for (const auto& p : c.pairs) {
    xs.insert(p.a);
    ys.insert(p.b);
  }
  if (xs.size() != m || ys.size() != m) return false;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const bool expected = b == (a + m - 1) % m;
      if (crown.below(c.pairs[a].a, c.pairs[b].b) != expected) return false;
    }
  return true;
}

AltCycle make_strict(const Crown& crown, AltCycle c) {
  validate_cycle(crown, c);
  while (true) {
    const std::size_t m = c.pairs.size();
    bool shortened = false;
    for (std::size_t a = 0; a < m && !shortened; ++a)
      for (std::size_t b = 0; b < m && !shortened; ++b) {
        if (b == (a + m - 1) % m || !crown.below(c.pairs[a].a, c.pairs[b].b)) continue;
        // The chord y_b -> x_a closes the shorter cycle a, a+1, ..., b.
        AltCycle shorter;
        for (std::size_t t = a;; t = (t + 1) % m) {
          shorter.pairs.push_back(c.pairs[t]);
          if (t == b) break;
        }
        c = std::move(shorter);
        shortened = true;
      }
    if (!shortened) return c;
  }
}

Sac3Class classify_sac3(const Crown& crown, const AltCycle& c) {
  if (c.pairs.size() != 3)
    throw DomainError("classify_sac3 needs a cycle of size 3, got " +
                      std::to_string(c.pairs.size()));
  if (!is_strict(crown, c)) throw DomainError("classify_sac3 needs a strict cycle");
  const auto& [x1, y1] = c.pairs[0];
  const auto& [x2, y2] = c.pairs[1];
  const auto& [x3, y3] = c.pairs[2];
  auto o = [&](int v) { return crown.offset(x1, v); };
  if (o(y1) < o(x2) && o(x2) <= o(y2) && o(y2) < o(x3) && o(x3) <= o(y3))
    return Sac3Class::Disjoint;
  if (o(y2) < o(x3) && o(x3) <= o(y1) && o(y1) < o(x2) && o(x2) <= o(y3))
    return Sac3Class::Overlap;
  throw InternalError("strict 3-cycle matches neither circular arrangement");
}

Certificate reversibility_certificate(const PairSet& s) {
  const Crown& crown = s.crown();
  Certificate cert;
  if (auto order = topological_order(s)) {
    LinearExtension l;
    for (int v : *order) l.order.push_back(element_of(crown, v));
    if (!is_linear_extension(crown, l) || !reverses_all(l, s))
      throw InternalError("constructed extension failed verification");
    cert.extension = std::move(l);
    return cert;
  }
  auto cycle = shortest_cycle(crown, s.pairs());
  if (!cycle) throw InternalError("order relation is cyclic but no alternating cycle was found");
  AltCycle strict = make_strict(crown, std::move(*cycle));
  if (!is_strict(crown, strict)) throw InternalError("extracted cycle is not strict");
  for (const auto& p : strict.pairs)
    if (!s.contains(p)) throw InternalError("extracted cycle leaves the input set");
  cert.cycle = std::move(strict);
  return cert;
}

bool is_reversible(const PairSet& s) {
  const Crown& crown = s.crown();
  const auto members = s.pairs();
  const std::size_t m = members.size();
  std::vector<int> indegree(m, 0);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (u != v && arc(crown, members[u], members[v])) ++indegree[v];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < m; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t u = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t v = 0; v < m; ++v)
      if (u != v && arc(crown, members[u], members[v]) && --indegree[v] == 0) ready.push_back(v);
  }
  return seen == m;
}

LinearExtension reversing_extension(const PairSet& s) {
  auto cert = reversibility_certificate(s);
  if (!cert.reversible()) throw DomainError("set is not reversible");
  return std::move(*cert.extension);
}

std::vector<DynBitset> reversal_closure(const PairSet& r) {
  const Crown& crown = r.crown();
  const auto order = topological_order(r);
  if (!order) throw DomainError("set is not reversible");
  const int n = crown.circle();
  const auto total = static_cast<std::size_t>(2 * n);
  std::vector<DynBitset> reach(total, DynBitset(total));
  std::vector<std::vector<int>> below_b(static_cast<std::size_t>(n));
  r.for_each([&](CritPair p) { below_b[p.b - 1].push_back(p.a - 1); });
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    const int v = *it;
    reach[v].set(static_cast<std::size_t>(v));
    if (v < n) {
      for (int j = 1; j <= n; ++j)
        if (crown.below(v + 1, j)) reach[v] |= reach[n + j - 1];
    } else {
      for (int a : below_b[v - n]) reach[v] |= reach[a];
    }
  }
  return reach;
}

std::optional<CritPair> addable_pair(const PairSet& r) {
  const Crown& crown = r.crown();
  const auto reach = reversal_closure(r);
  const int n = crown.circle();
  for (int id = 0; id < crown.pair_count(); ++id) {
    if (r.contains_id(id)) continue;
    const CritPair p = pair_at(crown, id);
    // Adding b < a closes a cycle exactly when a already reaches b.
    if (!reach[p.a - 1].test(static_cast<std::size_t>(n + p.b - 1))) return p;
  }
  return std::nullopt;
}

bool is_maximal_reversible(const PairSet& r) {
  return is_reversible(r) && !addable_pair(r).has_value();
}

BlockStructure block_structure(const PairSet& r) {
  if (!is_reversible(r)) throw DomainError("block_structure needs a reversible set");
  if (auto extra = addable_pair(r))
    throw DomainError("block_structure needs a maximal reversible set; " + pair_text(*extra) +
                      " can be added");
  const LinearExtension l = reversing_extension(r);
  std::vector<std::pair<Role, std::vector<int>>> runs;
  for (const Element& e : l.order) {
    if (runs.empty() || runs.back().first != e.role) runs.push_back({e.role, {}});
    runs.back().second.push_back(e.index);
  }
  if (runs.size() % 2 != 0 || runs.front().first != Role::Min || runs.back().first != Role::Max)
    throw InternalError("reversing extension does not alternate from an A-block to a B-block");
  BlockStructure bs;
  bs.s = static_cast<int>(runs.size() / 2) - 1;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    std::sort(it->second.begin(), it->second.end());
    (it->first == Role::Min ? bs.a_blocks : bs.b_blocks).push_back(std::move(it->second));
  }
  return bs;
}

namespace {

std::vector<int> block_of(const Crown& crown, const std::vector<std::vector<int>>& blocks,
                          int first_label) {
  std::vector<int> label(static_cast<std::size_t>(crown.circle() + 1), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int v : blocks[i]) label[v] = static_cast<int>(i) + first_label;
  return label;
}

}  // namespace

bool is_admissible(const Crown& crown, const BlockStructure& bs) {
  const auto a_label = block_of(crown, bs.a_blocks, 1);
  const auto b_label = block_of(crown, bs.b_blocks, 0);
  const int n = crown.circle();
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      if (a_label[x] < 0 || b_label[y] < 0) return false;
      if (crown.below(x, y) && !(b_label[y] < a_label[x])) return false;
    }
  return true;
}

bool satisfies_maximality(const Crown& crown, const BlockStructure& bs) {
  for (int i = 0; i <= bs.s; ++i)
    for (int x : bs.A(i + 1))
      for (int y : bs.B(i))
        if (!crown.below(x, y)) return false;
  return true;
}

std::vector<int> consistent_labeling(const PairSet& r) {
  const BlockStructure bs = block_structure(r);
  const Projections proj = projections(r);
  std::vector<int> out;
  for (int i = 1; i <= bs.s; ++i) {
    std::vector<int> block = bs.A(i);
    std::stable_sort(block.begin(), block.end(), [&](int x, int y) {
      return proj.b_of[x].size() > proj.b_of[y].size();
    });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

namespace {

class StrictCycleWalk {
 public:
  StrictCycleWalk(const PairSet& within, const CycleQuery& query,
                  const std::function<bool(const AltCycle&)>& visit)
      : crown_(within.crown()), members_(within.pairs()), query_(query), visit_(visit) {
    const std::size_t m = members_.size();
    arcs_.assign(m, DynBitset(m));
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v)
        if (u != v && arc(crown_, members_[u], members_[v])) arcs_[u].set(v);
  }

  void run() {
    if (query_.max_size < 2 || query_.max_size < query_.min_size) return;
    std::size_t starts = members_.size();
    if (query_.max_start >= 0)
      starts = std::min(starts, static_cast<std::size_t>(query_.max_start) + 1);
    for (std::size_t s = 0; s < starts && !stopped_; ++s) {
      path_ = {s};
      extend();
    }
  }

 private:
  bool arc_at(std::size_t u, std::size_t v) const { return arcs_[u].test(v); }

  void extend() {
    const std::size_t start = path_.front();
    const std::size_t last = path_.back();
    const std::size_t j = path_.size() - 1;
    for (std::size_t w = start + 1; w < members_.size() && !stopped_; ++w) {
      if (!arc_at(last, w)) continue;
      if (std::find(path_.begin(), path_.end(), w) != path_.end()) continue;
      bool chord = false;
      for (std::size_t i = 0; i < j && !chord; ++i) chord = arc_at(path_[i], w);
      for (std::size_t i = 1; i <= j && !chord; ++i) chord = arc_at(w, path_[i]);
      if (chord) continue;
      path_.push_back(w);
      if (arc_at(w, start)) {
        if (static_cast<int>(path_.size()) >= query_.min_size) {
          AltCycle c;
          for (std::size_t v : path_) c.pairs.push_back(members_[v]);
          if (!visit_(c)) stopped_ = true;
        }
      } else if (static_cast<int>(path_.size()) < query_.max_size) {
        extend();
      }
      path_.pop_back();
    }
  }

  const Crown& crown_;
  std::vector<CritPair> members_;
  CycleQuery query_;
  const std::function<bool(const AltCycle&)>& visit_;
  std::vector<DynBitset> arcs_;
  std::vector<std::size_t> path_;
  bool stopped_ = false;
};

}  // namespace

void for_each_strict_cycle(const PairSet& within, const CycleQuery& query,
                           const std::function<bool(const AltCycle&)>& visit) {
  StrictCycleWalk(within, query, visit).run();
}

}  // namespace crownlab
