#include "crownlab/critpairs.hpp"

#include <algorithm>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

// Row a lists b_1..b_w (the wrapped part of I(a)) before b_a..b_{a+k-w}.
int wrapped_count(const Crown& crown, int a) {
  return std::max(0, a + crown.k() - crown.circle());
}

}  // namespace

int pair_id(const Crown& crown, CritPair p) {
  const int w = wrapped_count(crown, p.a);
  const int rank = p.b < p.a ? p.b - 1 : w + (p.b - p.a);
  return (p.a - 1) * (crown.k() + 1) + rank;
}

CritPair pair_at(const Crown& crown, int id) {
  const int a = id / (crown.k() + 1) + 1;
  const int r = id % (crown.k() + 1);
  const int w = wrapped_count(crown, a);
  return {a, r < w ? r + 1 : a + (r - w)};
}

PairSet::PairSet(const Crown& crown)
    : crown_(crown), bits_(static_cast<std::size_t>(crown.pair_count())) {}

PairSet::PairSet(const Crown& crown, std::span<const CritPair> pairs) : PairSet(crown) {
  for (const auto& p : pairs) insert(p);
}

PairSet::PairSet(const Crown& crown, std::initializer_list<CritPair> pairs)
    : PairSet(crown, std::span<const CritPair>(pairs.begin(), pairs.size())) {}

PairSet::PairSet(const Crown& crown, DynBitset bits) : crown_(crown), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(crown.pair_count()))
    throw DomainError("pair-set universe size does not match the crown");
}

PairSet PairSet::universe(const Crown& crown) {
  return PairSet(crown, DynBitset(static_cast<std::size_t>(crown.pair_count()), true));
}

void PairSet::insert(CritPair p) {
  const CritPair q = make_pair(crown_, p.a, p.b);
  bits_.set(static_cast<std::size_t>(pair_id(crown_, q)));
}

void PairSet::erase(CritPair p) {
  const CritPair q{crown_.wrap(p.a), crown_.wrap(p.b)};
  if (is_critical(crown_, q)) bits_.reset(static_cast<std::size_t>(pair_id(crown_, q)));
}

bool PairSet::contains(CritPair p) const {
  const CritPair q{crown_.wrap(p.a), crown_.wrap(p.b)};
  return is_critical(crown_, q) && bits_.test(static_cast<std::size_t>(pair_id(crown_, q)));
}

std::vector<CritPair> PairSet::pairs() const {
  std::vector<CritPair> out;
  out.reserve(size());
  for_each([&](CritPair p) { out.push_back(p); });
  return out;
}

PairSet& PairSet::operator|=(const PairSet& o) {
  bits_ |= o.bits_;
  return *this;
}
PairSet& PairSet::operator&=(const PairSet& o) {
  bits_ &= o.bits_;
  return *this;
}
PairSet& PairSet::subtract(const PairSet& o) {
  bits_.subtract(o.bits_);
  return *this;
}

PairSet operator|(PairSet x, const PairSet& y) { return x |= y; }
PairSet operator&(PairSet x, const PairSet& y) { return x &= y; }
PairSet minus(PairSet x, const PairSet& y) { return x.subtract(y); }

PairSet enumerate_inc(const Crown& crown) { return PairSet::universe(crown); }

bool adjacent(const Crown& crown, CritPair p, CritPair q) {
  if (p == q) throw DomainError("adjacency is irreflexive; got the same pair twice");
  return crown.below(p.a, q.b) && crown.below(q.a, p.b);
}

CritGraph::CritGraph(const Crown& crown) : crown_(crown) {
  const int v = crown.pair_count();
  adj_.assign(static_cast<std::size_t>(v), DynBitset(static_cast<std::size_t>(v)));
  for (int i = 0; i < v; ++i) {
    const CritPair p = pair_at(crown, i);
    for (int j = i + 1; j < v; ++j) {
      const CritPair q = pair_at(crown, j);
      if (crown.below(p.a, q.b) && crown.below(q.a, p.b)) {
        adj_[i].set(static_cast<std::size_t>(j));
        adj_[j].set(static_cast<std::size_t>(i));
      }
    }
  }
}

std::size_t CritGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

CritGraph build_graph(const Crown& crown) { return CritGraph(crown); }

std::vector<int> incomparable_maxima(const Crown& crown, int a_index) {
  std::vector<int> out;
  for (int d = 0; d <= crown.k(); ++d) out.push_back(crown.wrap(static_cast<long long>(a_index) + d));
  return out;
}

std::vector<int> incomparable_minima(const Crown& crown, int b_index) {
  std::vector<int> out;
  for (int d = crown.k(); d >= 0; --d) out.push_back(crown.wrap(static_cast<long long>(b_index) - d));
  return out;
}

Projections projections(const PairSet& s) {
  const Crown& crown = s.crown();
  const auto slots = static_cast<std::size_t>(crown.circle() + 1);
  Projections out;
  out.b_of.assign(slots, {});
  out.a_of.assign(slots, {});
  s.for_each([&](CritPair p) {
    out.b_of[p.a].push_back(p.b);
    out.a_of[p.b].push_back(p.a);
  });
  for (int i = 1; i <= crown.circle(); ++i) {
    std::sort(out.a_of[i].begin(), out.a_of[i].end());
    if (!out.b_of[i].empty()) out.a_set.push_back(i);
    if (!out.a_of[i].empty()) out.b_set.push_back(i);
  }
  return out;
}

bool is_independent(const PairSet& s) {
  const auto pairs = s.pairs();
  const Crown& crown = s.crown();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (adjacent(crown, pairs[i], pairs[j])) return false;
  return true;
}

bool is_maximal_independent(const PairSet& s) {
  if (!is_independent(s)) return false;
  const Crown& crown = s.crown();
  const auto members = s.pairs();
  for (int id = 0; id < crown.pair_count(); ++id) {
    if (s.contains_id(id)) continue;
    const CritPair p = pair_at(crown, id);
    const bool blocked = std::any_of(members.begin(), members.end(),
                                     [&](CritPair q) { return adjacent(crown, p, q); });
    if (!blocked) return false;
  }
  return true;
}

PairSet apply(const Automorphism& f, const PairSet& s) {
  PairSet out(s.crown());
  s.for_each([&](CritPair p) { out.insert(f(s.crown(), p)); });
  return out;
}

}  // namespace crownlab
