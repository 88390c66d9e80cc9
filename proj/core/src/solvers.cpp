#include "crownlab/solvers.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <string>

#include "crownlab/canonical.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/reversibility.hpp"

namespace crownlab {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv("CROWNLAB_GUARD_MAX_NK")) {
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) {
      const int cap = static_cast<int>(std::min<long>(v, 1000));
      limits.maxrev_max_nk = limits.inr_max_nk = limits.cover_max_nk = limits.hyperedge_max_nk =
          cap;
    }
  }
  return limits;
}

int alpha_formula(int k) { return (k + 1) * (k + 2) / 2; }
int dimension_formula(int n, int k) { return (2 * (n + k) + k + 1) / (k + 2); }

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SolveReport new_report(std::string quantity, int n, int k) {
  SolveReport r;
  r.quantity = std::move(quantity);
  r.n = n;
  r.k = k;
  return r;
}

void guard_nk(const Crown& crown, int cap, const Limits& limits, const std::string& what) {
  if (!limits.override_guards && crown.circle() > cap)
    throw ResourceError(what + " is limited to n+k <= " + std::to_string(cap) + " (got " +
                        std::to_string(crown.circle()) +
                        "); use --guard-override or CROWNLAB_GUARD_MAX_NK");
}

void guard_vertices(int vertices, const Limits& limits) {
  if (vertices > limits.max_vertices)
    throw ResourceError("graph has " + std::to_string(vertices) + " vertices, above the limit of " +
                        std::to_string(limits.max_vertices));
}

// Reachability over the 2(n+k) elements for the crown order plus reversal
// edges, one word per element. a_i is bit i-1, b_j is bit n+k+j-1.
class Reach {
 public:
  explicit Reach(const Crown& crown) : n_(crown.circle()) {
    if (2 * n_ > 64) throw ResourceError("reversal closure is limited to n+k <= 32");
    for (int v = 0; v < 2 * n_; ++v) rows_[v] = bit(v);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (crown.below(i, j)) rows_[i - 1] |= bit(n_ + j - 1);
  }

  bool can_add(CritPair p) const { return !(rows_[p.a - 1] & bit(n_ + p.b - 1)); }

  // Adds b < a; callers ensure can_add(p) unless building an over-approximation.
  void add(CritPair p) {
    const std::uint64_t target = bit(n_ + p.b - 1);
    const std::uint64_t gained = rows_[p.a - 1];
    for (int v = 0; v < 2 * n_; ++v)
      if (rows_[v] & target) rows_[v] |= gained;
  }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  int n_;
  std::array<std::uint64_t, 64> rows_{};
};

PairSet set_of(const Crown& crown, const std::vector<int>& ids) {
  PairSet s(crown);
  for (int id : ids) s.insert(pair_at(crown, id));
  return s;
}

class MaxReversibleSearch {
 public:
  MaxReversibleSearch(const CritGraph& graph, int incumbent, SearchStats& stats)
      : graph_(graph), best_size_(incumbent), stats_(stats) {}

  void run() {
    const Crown& crown = graph_.crown();
    std::vector<int> chosen;
    expand(Reach(crown), chosen, DynBitset(static_cast<std::size_t>(graph_.size()), true));
  }

  bool improved() const { return improved_; }
  const std::vector<int>& best() const { return best_; }

 private:
  void expand(const Reach& state, std::vector<int>& chosen, DynBitset p) {
    ++stats_.nodes;
    std::vector<int> order;
    std::vector<int> bound;
    DynBitset rest = p;
    int cliques = 0;
    while (rest.any()) {
      ++cliques;
      DynBitset open = rest;
      for (auto v = open.find_first(); v != DynBitset::npos; v = open.find_first()) {
        order.push_back(static_cast<int>(v));
        bound.push_back(cliques);
        rest.reset(v);
        open &= graph_.neighbors(static_cast<int>(v));
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(chosen.size()) + bound[i] <= best_size_) return;
      const int v = order[i];
      Reach next_state = state;
      next_state.add(graph_.vertex(v));
      chosen.push_back(v);
      DynBitset next = p;
      next.subtract(graph_.neighbors(v));
      next.reset(static_cast<std::size_t>(v));
      DynBitset feasible = next;
      next.for_each([&](std::size_t u) {
        if (!next_state.can_add(graph_.vertex(static_cast<int>(u)))) feasible.reset(u);
      });
      if (feasible.none()) {
        if (static_cast<int>(chosen.size()) > best_size_) {
          best_size_ = static_cast<int>(chosen.size());
          best_ = chosen;
          improved_ = true;
        }
      } else {
        expand(next_state, chosen, std::move(feasible));
      }
      chosen.pop_back();
      p.reset(static_cast<std::size_t>(v));
    }
  }

  const CritGraph& graph_;
  int best_size_;
  SearchStats& stats_;
  std::vector<int> best_;
  bool improved_ = false;
};

}  // namespace

SolveReport max_independent_set(const CritGraph& graph, const Limits& limits) {
  guard_vertices(graph.size(), limits);
  const auto start = Clock::now();
  SearchStats stats;
  const auto best = maximum_independent_set(graph.adjacency(), stats);
  PairSet witness = set_of(graph.crown(), best);
  if (!is_independent(witness)) throw InternalError("independent set witness failed verification");
  SolveReport r = new_report("alpha", graph.crown().n(), graph.crown().k());
  r.value = static_cast<long long>(best.size());
  r.witness = std::move(witness);
  r.nodes = stats.nodes;
  r.elapsed_ms = ms_since(start);
  return r;
}

SolveReport chromatic_number(const CritGraph& graph, const Limits& limits) {
  guard_vertices(graph.size(), limits);
  const auto start = Clock::now();
  SearchStats stats;
  const int lower = static_cast<int>(maximum_clique(graph.adjacency(), stats).size());
  SolveReport r = new_report("chi", graph.crown().n(), graph.crown().k());
  for (int colors = std::max(lower, 1);; ++colors) {
    if (auto coloring = find_coloring(graph.adjacency(), colors, stats)) {
      if (!is_proper_coloring(graph.adjacency(), *coloring))
        throw InternalError("coloring witness failed verification");
      r.value = colors;
      r.coloring = std::move(*coloring);
      break;
    }
  }
  r.nodes = stats.nodes;
  r.elapsed_ms = ms_since(start);
  return r;
}

SolveReport max_reversible_set(const Crown& crown, const Limits& limits) {
  guard_nk(crown, limits.maxrev_max_nk, limits, "max_reversible_set");
  const auto start = Clock::now();
  const CritGraph graph(crown);
  guard_vertices(graph.size(), limits);
  std::vector<int> sigma;
  for (int i = 1; i <= crown.k() + 1; ++i) sigma.push_back(i);
  // A canonical set is a valid starting incumbent; the search then proves or
  // improves it.
  PairSet witness = canonical_set(crown, sigma);
  SearchStats stats;
  MaxReversibleSearch search(graph, static_cast<int>(witness.size()), stats);
  search.run();
  if (search.improved()) witness = set_of(crown, search.best());
  if (!is_reversible(witness)) throw InternalError("reversible witness failed verification");
  SolveReport r = new_report("maxrev", crown.n(), crown.k());
  r.value = static_cast<long long>(witness.size());
  r.witness = std::move(witness);
  r.nodes = stats.nodes;
  r.elapsed_ms = ms_since(start);
  return r;
}

SolveReport max_inr_set(const Crown& crown, const Limits& limits) {
  guard_nk(crown, limits.inr_max_nk, limits, "max_inr_set");
  const auto start = Clock::now();
  const CritGraph graph(crown);
  guard_vertices(graph.size(), limits);
  const PairSet all = PairSet::universe(crown);
  SearchStats stats;
  int best_size = 0;
  std::optional<PairSet> best;
  // Every non-reversible independent set contains a strict cycle of size at
  // least 3; rotating by tau puts a pair with minimal a_1 on that cycle.
  const int a1_pairs_end = crown.k();
  for_each_strict_cycle(all, {3, crown.pair_count(), a1_pairs_end}, [&](const AltCycle& c) {
    ++stats.nodes;
    DynBitset residual(static_cast<std::size_t>(graph.size()), true);
    std::vector<int> ids;
    for (const CritPair& p : c.pairs) {
      const int id = pair_id(crown, p);
      ids.push_back(id);
      residual.reset(static_cast<std::size_t>(id));
      residual.subtract(graph.neighbors(id));
    }
    const int size_c = static_cast<int>(c.pairs.size());
    const int need = best ? best_size - size_c : -1;
    std::vector<int> extra;
    if (residual.any())
      if (auto found = maximum_independent_set(graph.adjacency(), residual, std::max(need, 0), stats))
        extra = std::move(*found);
    if (!best || size_c + static_cast<int>(extra.size()) > best_size) {
      ids.insert(ids.end(), extra.begin(), extra.end());
      best = set_of(crown, ids);
      best_size = static_cast<int>(best->size());
    }
    return true;
  });
  SolveReport r = new_report("maxinr", crown.n(), crown.k());
  if (best) {
    if (!is_independent(*best) || is_reversible(*best))
      throw InternalError("independent non-reversible witness failed verification");
    r.value = best_size;
    r.witness = std::move(best);
  }
  r.nodes = stats.nodes;
  r.elapsed_ms = ms_since(start);
  return r;
}

namespace {

// Exact cover of the pair universe by at most `depth` members of `sets`.
class SetCoverSearch {
 public:
  SetCoverSearch(const std::vector<DynBitset>& sets, std::size_t universe, SearchStats& stats)
      : sets_(sets), stats_(stats), containing_(universe) {
    for (std::size_t s = 0; s < sets.size(); ++s) {
      sets[s].for_each([&](std::size_t e) { containing_[e].push_back(static_cast<int>(s)); });
      largest_ = std::max(largest_, sets[s].count());
    }
  }

  std::optional<std::vector<int>> solve(int depth, std::size_t universe) {
    chosen_.clear();
    if (search(DynBitset(universe, true), depth)) return chosen_;
    return std::nullopt;
  }

 private:
  bool search(const DynBitset& uncovered, int depth) {
    ++stats_.nodes;
    if (uncovered.none()) return true;
    if (depth == 0 || uncovered.count() > largest_ * static_cast<std::size_t>(depth)) return false;
    std::size_t pick = DynBitset::npos;
    std::size_t fewest = 0;
    uncovered.for_each([&](std::size_t e) {
      if (pick == DynBitset::npos || containing_[e].size() < fewest) {
        pick = e;
        fewest = containing_[e].size();
      }
    });
    for (int s : containing_[pick]) {
      if (depth == 1 && !uncovered.is_subset_of(sets_[s])) continue;
      chosen_.push_back(s);
      if (search(minus(uncovered, sets_[s]), depth - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<DynBitset>& sets_;
  SearchStats& stats_;
  std::vector<std::vector<int>> containing_;
  std::size_t largest_ = 0;
  std::vector<int> chosen_;
};

class PartitionSearch {
 public:
  PartitionSearch(const Crown& crown, int d, SearchStats& stats)
      : crown_(crown), d_(d), stats_(stats), class_of_(static_cast<std::size_t>(crown.pair_count()), -1) {
    states_.assign(static_cast<std::size_t>(d), Reach(crown));
  }

  bool run() { return assign(0, 0); }
  const std::vector<int>& classes() const { return class_of_; }

 private:
  bool assign(int done, int used) {
    ++stats_.nodes;
    const int total = crown_.pair_count();
    if (done == total) return true;
    const int open = std::min(d_, used + 1);
    int pick = -1;
    int pick_options = 0;
    for (int v = 0; v < total; ++v) {
      if (class_of_[v] >= 0) continue;
      int options = 0;
      for (int c = 0; c < open; ++c)
        if (states_[c].can_add(pair_at(crown_, v))) ++options;
      if (pick < 0 || options < pick_options) {
        pick = v;
        pick_options = options;
      }
      if (options == 0) return false;
    }
    const CritPair p = pair_at(crown_, pick);
    for (int c = 0; c < open; ++c) {
      if (!states_[c].can_add(p)) continue;
      const Reach saved = states_[c];
      states_[c].add(p);
      class_of_[pick] = c;
      if (assign(done + 1, std::max(used, c + 1))) return true;
      class_of_[pick] = -1;
      states_[c] = saved;
    }
    return false;
  }

  const Crown& crown_;
  int d_;
  SearchStats& stats_;
  std::vector<int> class_of_;
  std::vector<Reach> states_;
};

}  // namespace

std::optional<std::vector<PairSet>> reversible_partition(const Crown& crown, int d,
                                                         SearchStats& stats) {
  if (d <= 0) return std::nullopt;
  PartitionSearch search(crown, d, stats);
  if (!search.run()) return std::nullopt;
  std::vector<PairSet> parts(static_cast<std::size_t>(d), PairSet(crown));
  for (int v = 0; v < crown.pair_count(); ++v) parts[search.classes()[v]].insert(pair_at(crown, v));
  parts.erase(std::remove_if(parts.begin(), parts.end(), [](const PairSet& s) { return s.empty(); }),
              parts.end());
  return parts;
}

SolveReport min_reversible_cover(const Crown& crown, const Limits& limits) {
  guard_nk(crown, limits.cover_max_nk, limits, "min_reversible_cover");
  const auto start = Clock::now();
  const SolveReport maxrev = max_reversible_set(crown, limits);
  SearchStats stats;
  stats.nodes = maxrev.nodes;
  const long long total = crown.pair_count();
  const int lower = static_cast<int>((total + *maxrev.value - 1) / *maxrev.value);

  std::vector<DynBitset> canon;
  for (const PairSet& t : enumerate_canonical(crown)) canon.push_back(t.bits());
  SetCoverSearch cover_search(canon, static_cast<std::size_t>(total), stats);
  std::vector<PairSet> cover;
  int found_at = lower;
  for (;; ++found_at) {
    if (auto picked = cover_search.solve(found_at, static_cast<std::size_t>(total))) {
      for (int s : *picked) cover.push_back(PairSet(crown, canon[s]));
      break;
    }
  }
  // Canonical sets may not reach the lower bound; only then try every
  // partition into fewer reversible sets.
  for (int d = lower; d < found_at; ++d) {
    if (auto parts = reversible_partition(crown, d, stats)) {
      cover = std::move(*parts);
      break;
    }
  }
  PairSet covered(crown);
  for (const PairSet& part : cover) {
    if (!is_reversible(part)) throw InternalError("cover part failed reversibility verification");
    covered |= part;
  }
  if (covered != PairSet::universe(crown)) throw InternalError("cover misses critical pairs");
  SolveReport r = new_report("dim", crown.n(), crown.k());
  r.value = static_cast<long long>(cover.size());
  r.cover = std::move(cover);
  r.nodes = stats.nodes;
  r.elapsed_ms = ms_since(start);
  return r;
}

std::vector<PairSet> enumerate_min_nonreversible(const Crown& crown, int max_size,
                                                 const Limits& limits) {
  guard_nk(crown, limits.hyperedge_max_nk, limits, "enumerate_min_nonreversible");
  if (!limits.override_guards && max_size > limits.hyperedge_max_size)
    throw ResourceError("hyperedge enumeration is limited to size <= " +
                        std::to_string(limits.hyperedge_max_size));
  std::vector<PairSet> out;
  // Minimal non-reversible sets are exactly the pair sets of strict cycles.
  for_each_strict_cycle(PairSet::universe(crown), {2, max_size}, [&](const AltCycle& c) {
    out.emplace_back(crown, std::span<const CritPair>(c.pairs));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const PairSet& x, const PairSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.pairs() < y.pairs();
  });
  return out;
}

namespace {

class MaximalReversibleWalk {
 public:
  MaximalReversibleWalk(const Crown& crown, const std::function<void(const PairSet&)>& visit)
      : crown_(crown), total_(crown.pair_count()), visit_(visit) {}

  void run() {
    std::vector<int> chosen;
    std::vector<int> excluded;
    step(0, Reach(crown_), chosen, excluded);
  }

 private:
  // Could every excluded pair still be blocked if all remaining addable pairs
  // were added?
  bool still_blockable(int from, const Reach& state, const std::vector<int>& excluded) const {
    Reach optimistic = state;
    for (int v = from; v < total_; ++v) {
      const CritPair p = pair_at(crown_, v);
      if (state.can_add(p)) optimistic.add(p);
    }
    for (int v : excluded)
      if (optimistic.can_add(pair_at(crown_, v))) return false;
    return true;
  }

  void step(int v, const Reach& state, std::vector<int>& chosen, std::vector<int>& excluded) {
    if (v == total_) {
      for (int e : excluded)
        if (state.can_add(pair_at(crown_, e))) return;
      visit_(set_of(crown_, chosen));
      return;
    }
    const CritPair p = pair_at(crown_, v);
    if (!state.can_add(p)) {
      step(v + 1, state, chosen, excluded);
      return;
    }
    Reach with = state;
    with.add(p);
    chosen.push_back(v);
    step(v + 1, with, chosen, excluded);
    chosen.pop_back();

    excluded.push_back(v);
    if (still_blockable(v + 1, state, excluded)) step(v + 1, state, chosen, excluded);
    excluded.pop_back();
  }

  const Crown& crown_;
  int total_;
  const std::function<void(const PairSet&)>& visit_;
};

}  // namespace

void for_each_maximal_reversible(const Crown& crown,
                                 const std::function<void(const PairSet&)>& visit,
                                 const Limits& limits) {
  guard_nk(crown, limits.cover_max_nk, limits, "maximal reversible enumeration");
  MaximalReversibleWalk(crown, visit).run();
}

}  // namespace crownlab
