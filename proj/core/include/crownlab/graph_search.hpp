#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "crownlab/bitset.hpp"

namespace crownlab {

/// Simple undirected graph as symmetric adjacency rows without loops.
using Adjacency = std::vector<DynBitset>;

Adjacency complement(const Adjacency& adj);

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Exact maximum independent set restricted to `candidates`.
///
/// Branch and bound; the bound is a greedy clique cover of the remaining
/// candidates, built in increasing vertex order. Returns the lexicographically
/// first optimum the search meets, or nullopt if no independent set larger
/// than `must_exceed` exists.
std::optional<std::vector<int>> maximum_independent_set(const Adjacency& adj,
                                                        const DynBitset& candidates,
                                                        int must_exceed, SearchStats& stats);

std::vector<int> maximum_independent_set(const Adjacency& adj, SearchStats& stats);

std::vector<int> maximum_clique(const Adjacency& adj, SearchStats& stats);

/// Exact test for a proper coloring with at most `colors` colors (DSATUR
/// backtracking with forward checking). Returns the coloring if one exists.
std::optional<std::vector<int>> find_coloring(const Adjacency& adj, int colors,
                                              SearchStats& stats);

/// Calls `visit` once per maximal independent set (Bron-Kerbosch with
/// pivoting on the complement).
void for_each_maximal_independent_set(const Adjacency& adj,
                                      const std::function<void(const DynBitset&)>& visit);

bool is_independent_in(const Adjacency& adj, const std::vector<int>& vertices);
bool is_proper_coloring(const Adjacency& adj, const std::vector<int>& color);

}  // namespace crownlab
