#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "crownlab/bitset.hpp"
#include "crownlab/crown.hpp"

namespace crownlab {

/// Vertex numbering of Inc(A,B): lexicographic by (a_index, b_index).
int pair_id(const Crown& crown, CritPair p);
CritPair pair_at(const Crown& crown, int id);

/// A set of critical pairs of one fixed crown, stored as membership over the
/// (n+k)(k+1) pair universe. Iteration is lexicographic.
class PairSet {
 public:
  explicit PairSet(const Crown& crown);
  PairSet(const Crown& crown, std::span<const CritPair> pairs);
  PairSet(const Crown& crown, std::initializer_list<CritPair> pairs);
  PairSet(const Crown& crown, DynBitset bits);

  static PairSet universe(const Crown& crown);

  const Crown& crown() const { return crown_; }
  const DynBitset& bits() const { return bits_; }

  /// Throws DomainError for a comparable pair.
  void insert(CritPair p);
  void erase(CritPair p);
  bool contains(CritPair p) const;
  bool contains_id(int id) const { return bits_.test(static_cast<std::size_t>(id)); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<CritPair> pairs() const;

  template <typename F>
  void for_each(F&& f) const {
    bits_.for_each([&](std::size_t id) { f(pair_at(crown_, static_cast<int>(id))); });
  }

  PairSet& operator|=(const PairSet& o);
  PairSet& operator&=(const PairSet& o);
  PairSet& subtract(const PairSet& o);
  bool is_subset_of(const PairSet& o) const { return bits_.is_subset_of(o.bits_); }

  friend bool operator==(const PairSet& x, const PairSet& y) {
    return x.crown_ == y.crown_ && x.bits_ == y.bits_;
  }
  friend bool operator<(const PairSet& x, const PairSet& y) { return x.bits_ < y.bits_; }

 private:
  Crown crown_;
  DynBitset bits_;
};

PairSet operator|(PairSet x, const PairSet& y);
PairSet operator&(PairSet x, const PairSet& y);
PairSet minus(PairSet x, const PairSet& y);

/// All (n+k)(k+1) critical pairs.
PairSet enumerate_inc(const Crown& crown);

/// (a,b) ~ (x,y) iff a < y and x < b. Throws DomainError when p == q.
bool adjacent(const Crown& crown, CritPair p, CritPair q);

/// The graph G_n^k of critical pairs with the size-2 alternating cycle
/// adjacency. Vertex v is pair_at(crown, v).
class CritGraph {
 public:
  explicit CritGraph(const Crown& crown);

  const Crown& crown() const { return crown_; }
  int size() const { return static_cast<int>(adj_.size()); }
  CritPair vertex(int v) const { return pair_at(crown_, v); }
  bool adjacent(int u, int v) const { return adj_[u].test(static_cast<std::size_t>(v)); }
  const DynBitset& neighbors(int v) const { return adj_[v]; }
  const std::vector<DynBitset>& adjacency() const { return adj_; }
  std::size_t edge_count() const;

 private:
  Crown crown_;
  std::vector<DynBitset> adj_;
};

CritGraph build_graph(const Crown& crown);

/// I(a_i) = {b_i, ..., b_{i+k}}, in circle order.
std::vector<int> incomparable_maxima(const Crown& crown, int a_index);
/// I(b_j) = {a_{j-k}, ..., a_j}, in circle order.
std::vector<int> incomparable_minima(const Crown& crown, int b_index);

/// A(S), B(S), and the per-element sets B(a,S), A(b,S). Vectors are indexed by
/// element index (slot 0 unused); member lists are ascending.
struct Projections {
  std::vector<int> a_set;
  std::vector<int> b_set;
  std::vector<std::vector<int>> b_of;
  std::vector<std::vector<int>> a_of;
};

Projections projections(const PairSet& s);

bool is_independent(const PairSet& s);
/// Independent, and every pair outside S is adjacent to some member.
bool is_maximal_independent(const PairSet& s);

PairSet apply(const Automorphism& f, const PairSet& s);

}  // namespace crownlab
