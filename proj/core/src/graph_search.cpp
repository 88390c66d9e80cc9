#include "crownlab/graph_search.hpp"

#include <algorithm>

namespace crownlab {

Adjacency complement(const Adjacency& adj) {
  const std::size_t n = adj.size();
  Adjacency out(n, DynBitset(n, true));
  for (std::size_t v = 0; v < n; ++v) {
    out[v].subtract(adj[v]);
    out[v].reset(v);
  }
  return out;
}

namespace {

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Adjacency& adj, int must_exceed, SearchStats& stats)
      : adj_(adj), best_size_(must_exceed), stats_(stats) {}

  void run(const DynBitset& candidates) {
    std::vector<int> current;
    expand(current, candidates);
  }

  bool found() const { return found_; }
  const std::vector<int>& best() const { return best_; }

 private:
  // Partition p into cliques greedily. order[i] is covered by one of the
  // first bound[i] cliques, so at most bound[i] of order[0..i] can be chosen.
  void cover(const DynBitset& p, std::vector<int>& order, std::vector<int>& bound) const {
    DynBitset rest = p;
    int cliques = 0;
    while (rest.any()) {
      ++cliques;
      DynBitset open = rest;
      for (auto v = open.find_first(); v != DynBitset::npos; v = open.find_first()) {
        order.push_back(static_cast<int>(v));
        bound.push_back(cliques);
        rest.reset(v);
        open &= adj_[v];
      }
    }
  }

  void expand(std::vector<int>& current, DynBitset p) {
    ++stats_.nodes;
    std::vector<int> order;
    std::vector<int> bound;
    cover(p, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + bound[i] <= best_size_) return;
      const int v = order[i];
      current.push_back(v);
      DynBitset next = p;
      next.subtract(adj_[v]);
      next.reset(static_cast<std::size_t>(v));
      if (next.none()) {
        if (static_cast<int>(current.size()) > best_size_) {
          best_size_ = static_cast<int>(current.size());
          best_ = current;
          found_ = true;
        }
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      p.reset(static_cast<std::size_t>(v));
    }
  }

  const Adjacency& adj_;
  int best_size_;
  SearchStats& stats_;
  std::vector<int> best_;
  bool found_ = false;
};

}  // namespace

std::optional<std::vector<int>> maximum_independent_set(const Adjacency& adj,
                                                        const DynBitset& candidates,
                                                        int must_exceed, SearchStats& stats) {
  IndependentSetSearch search(adj, must_exceed, stats);
  search.run(candidates);
  if (!search.found()) return std::nullopt;
  auto best = search.best();
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<int> maximum_independent_set(const Adjacency& adj, SearchStats& stats) {
  DynBitset all(adj.size(), true);
  if (adj.empty()) return {};
  return maximum_independent_set(adj, all, 0, stats).value_or(std::vector<int>{});
}

std::vector<int> maximum_clique(const Adjacency& adj, SearchStats& stats) {
  return maximum_independent_set(complement(adj), stats);
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Adjacency& adj, int colors, SearchStats& stats)
      : adj_(adj),
        colors_(colors),
        stats_(stats),
        color_(adj.size(), -1),
        forbidden_(adj.size(), std::vector<int>(static_cast<std::size_t>(colors), 0)),
        saturation_(adj.size(), 0) {}

  bool run() { return assign_next(0, 0); }
  const std::vector<int>& coloring() const { return color_; }

 private:
  int pick() const {
    int best = -1;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (color_[v] >= 0) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && adj_[v].count() > adj_[best].count()))
        best = static_cast<int>(v);
    }
    return best;
  }

  bool paint(int v, int c) {
    color_[v] = c;
    bool alive = true;
    adj_[v].for_each([&](std::size_t u) {
      if (color_[u] >= 0) return;
      if (forbidden_[u][c]++ == 0 && ++saturation_[u] == colors_) alive = false;
    });
    return alive;
  }

  void unpaint(int v, int c) {
    adj_[v].for_each([&](std::size_t u) {
      if (color_[u] >= 0) return;
      if (--forbidden_[u][c] == 0) --saturation_[u];
    });
    color_[v] = -1;
  }

  bool assign_next(std::size_t colored, int used) {
    ++stats_.nodes;
    if (colored == adj_.size()) return true;
    const int v = pick();
    // A fresh color is interchangeable with every other unused one.
    const int limit = std::min(colors_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden_[v][c] > 0) continue;
      const bool alive = paint(v, c);
      if (alive && assign_next(colored + 1, std::max(used, c + 1))) return true;
      unpaint(v, c);
    }
    return false;
  }

  const Adjacency& adj_;
  int colors_;
  SearchStats& stats_;
  std::vector<int> color_;
  std::vector<std::vector<int>> forbidden_;
  std::vector<int> saturation_;
};

}  // namespace

std::optional<std::vector<int>> find_coloring(const Adjacency& adj, int colors,
                                              SearchStats& stats) {
  if (adj.empty()) return std::vector<int>{};
  if (colors <= 0) return std::nullopt;
  ColoringSearch search(adj, colors, stats);
  if (!search.run()) return std::nullopt;
  return search.coloring();
}

namespace {

void bron_kerbosch(const Adjacency& comp, DynBitset& r, DynBitset p, DynBitset x,
                   const std::function<void(const DynBitset&)>& visit) {
  if (p.none() && x.none()) {
    visit(r);
    return;
  }
  std::size_t pivot = DynBitset::npos;
  std::size_t best = 0;
  auto consider = [&](std::size_t u) {
    const std::size_t c = p.intersection_count(comp[u]);
    if (pivot == DynBitset::npos || c > best) {
      pivot = u;
      best = c;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  DynBitset branch = minus(p, comp[pivot]);
  branch.for_each([&](std::size_t v) {
    r.set(v);
    bron_kerbosch(comp, r, p & comp[v], x & comp[v], visit);
    r.reset(v);
    p.reset(v);
    x.set(v);
  });
}

}  // namespace

void for_each_maximal_independent_set(const Adjacency& adj,
                                      const std::function<void(const DynBitset&)>& visit) {
  const Adjacency comp = complement(adj);
  DynBitset r(adj.size());
  bron_kerbosch(comp, r, DynBitset(adj.size(), true), DynBitset(adj.size()), visit);
}

bool is_independent_in(const Adjacency& adj, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || adj[vertices[i]].test(vertices[j])) return false;
  return true;
}

bool is_proper_coloring(const Adjacency& adj, const std::vector<int>& color) {
  if (color.size() != adj.size()) return false;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (color[v] < 0) return false;
    bool ok = true;
    adj[v].for_each([&](std::size_t u) {
      if (color[u] == color[v]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace crownlab
