#include "crownlab/extremal.hpp"

#include <algorithm>
#include <numeric>

#include "crownlab/errors.hpp"

namespace crownlab {

namespace {

void require_inr_range(const Crown& crown) {
  if (crown.n() > 2 * crown.k())
    throw DomainError("no independent non-reversible set exists when n > 2k (n=" +
                      std::to_string(crown.n()) + ", k=" + std::to_string(crown.k()) + ")");
}

}  // namespace

AltCycle sac3(const Crown& crown) {
  require_inr_range(crown);
  const int n = crown.n();
  const int k = crown.k();
  AltCycle c;
  if (n <= k)
    c.pairs = {make_pair(crown, 1, 1), make_pair(crown, 2, k + 1), make_pair(crown, k + 2, k + 2)};
  else
    c.pairs = {make_pair(crown, 1, 2 * k + 1 - n), make_pair(crown, k + 1, k + 1),
               make_pair(crown, 2 * k + 1, 2 * k + 1)};
  return c;
}

PairSet down_closure(const Crown& crown, const std::vector<CritPair>& tops) {
  PairSet out(crown);
  for (const CritPair& top : tops) {
    const int span = crown.offset(top.a, top.b);
    for (int from = 0; from <= span; ++from)
      for (int to = from; to <= span; ++to)
        out.insert({crown.wrap(static_cast<long long>(top.a) + from),
                    crown.wrap(static_cast<long long>(top.a) + to)});
  }
  return out;
}

void validate_spec(const Crown& crown, const MatchingCycleSpec& spec) {
  const int n = crown.n();
  const int k = crown.k();
  if (!(k < n && n <= 2 * k)) throw DomainError("matching cycles need k < n <= 2k");
  if (spec.t < 1) throw DomainError("matching cycle needs t >= 1");
  if (static_cast<int>(spec.sizes.size()) != 2 * spec.t + 1)
    throw DomainError("matching cycle with t=" + std::to_string(spec.t) + " needs " +
                      std::to_string(2 * spec.t + 1) + " sizes");
  for (int s : spec.sizes)
    if (s < 1 || s > k + 1)
      throw DomainError("pair sizes must lie in [1, k+1], got " + std::to_string(s));
  if (spec.t * (n - k) > k)
    throw DomainError("no matching cycle exists when t(n-k) > k");
  const int want = k + 2 * spec.t + 1 - spec.t * (n - k);
  const int got = std::accumulate(spec.sizes.begin(), spec.sizes.end(), 0);
  if (got != want)
    throw DomainError("pair sizes must sum to k+2t+1-t(n-k)=" + std::to_string(want) + ", got " +
                      std::to_string(got));
}

AltCycle matching_cycle(const Crown& crown, const MatchingCycleSpec& spec) {
  validate_spec(crown, spec);
  const int m = 2 * spec.t + 1;
  const int k = crown.k();
  std::vector<long long> start(static_cast<std::size_t>(m), 0);
  start[0] = 1;
  // Visit 1, 1+t, 1+2t, ... (mod 2t+1); each step fixes the next start from
  // the arc of size k+1 ending at its maximal.
  int prev = 0;
  for (int j = 1; j < m; ++j) {
    const int beta = static_cast<int>((static_cast<long long>(j) * spec.t) % m);
    start[beta] = start[prev] + k + 1 - spec.sizes[beta];
    prev = beta;
  }
  if (crown.wrap(start[prev] + k + 1 - spec.sizes[0]) != 1)
    throw InternalError("matching cycle positions do not close up");
  AltCycle c;
  for (int a = 0; a < m; ++a)
    c.pairs.push_back(make_pair(crown, start[a], start[a] + spec.sizes[a] - 1));
  if (!check_matching_conditions(crown, c))
    throw InternalError("constructed cycle fails the Matching Conditions");
  return c;
}

bool check_matching_conditions(const Crown& crown, const AltCycle& c) {
  const int m = static_cast<int>(c.pairs.size());
  if (m < 3 || m % 2 == 0)
    throw DomainError("Matching Conditions need an odd cycle of at least 3 pairs, got " +
                      std::to_string(m));
  if (!is_alternating_cycle(crown, c)) return false;
  const int t = (m - 1) / 2;
  for (int a = 0; a < m; ++a) {
    const CritPair cur = c.pairs[a];
    const CritPair next = c.pairs[(a + 1) % m];
    const int oy = crown.offset(cur.a, cur.b);
    const int ox = crown.offset(cur.a, next.a);
    const int oy2 = crown.offset(cur.a, next.b);
    if (!(oy < ox && ox <= oy2)) return false;
    if (pair_size(crown, crown.a(cur.a), crown.b(c.pairs[(a + t) % m].b)) != crown.k() + 1)
      return false;
  }
  return true;
}

PairSet downset_of_cycle(const Crown& crown, const AltCycle& c) {
  if (!check_matching_conditions(crown, c))
    throw DomainError("cycle does not satisfy the Matching Conditions");
  return down_closure(crown, c.pairs);
}

std::vector<CritPair> maximal_pairs(const PairSet& s) {
  const Crown& crown = s.crown();
  const auto members = s.pairs();
  std::vector<CritPair> out;
  for (const CritPair& p : members) {
    const bool covered = std::any_of(members.begin(), members.end(), [&](CritPair q) {
      return q != p && contained_in(crown, p, q);
    });
    if (!covered) out.push_back(p);
  }
  return out;
}

std::optional<AltCycle> minr_d3_certify(const PairSet& s) {
  const Crown& crown = s.crown();
  if (!(crown.k() < crown.n() && crown.n() <= 2 * crown.k())) return std::nullopt;
  if (!is_maximal_independent(s) || is_reversible(s)) return std::nullopt;
  bool has_d3 = false;
  for_each_strict_cycle(s, {3, 3}, [&](const AltCycle& c) {
    if (classify_sac3(crown, c) == Sac3Class::Disjoint) has_d3 = true;
    return !has_d3;
  });
  if (!has_d3) return std::nullopt;
  AltCycle c0{maximal_pairs(s)};
  if (c0.pairs.size() < 3 || c0.pairs.size() % 2 == 0) return std::nullopt;
  if (!check_matching_conditions(crown, c0)) return std::nullopt;
  if (down_closure(crown, c0.pairs) != s) return std::nullopt;
  return c0;
}

PairSet inr_extremal(const Crown& crown) {
  require_inr_range(crown);
  const int n = crown.n();
  const int k = crown.k();
  if (n <= k)
    return down_closure(crown, {make_pair(crown, 2, k + 1), make_pair(crown, 1, k + 2 - n),
                                make_pair(crown, k + 2, k + 2)});
  return down_closure(crown, sac3(crown).pairs);
}

int inr_extremal_size(int n, int k) {
  if (n <= k) return (k + 1) * (k + 2) / 2 + 2 - n;
  return 2 + (2 * k + 2 - n) * (2 * k + 1 - n) / 2;
}

}  // namespace crownlab
