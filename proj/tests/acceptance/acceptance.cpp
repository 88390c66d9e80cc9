// Runs each acceptance criterion once and prints one PASS/FAIL line per
// criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "crownlab/battery.hpp"
#include "crownlab/canonical.hpp"
#include "crownlab/extremal.hpp"
#include "crownlab/graph_search.hpp"
#include "crownlab/reversibility.hpp"
#include "crownlab/serialize.hpp"
#include "crownlab/solvers.hpp"
#include "crownlab/transforms.hpp"

using namespace crownlab;

namespace {

// Collects the first few mismatches of a criterion.
class Failures {
 public:
  template <class... Args>
  void add(Args&&... parts) {
    ++count_;
    if (count_ > 5) return;
    std::ostringstream s;
    (s << ... << parts);
    if (!text_.empty()) text_ += "; ";
    text_ += s.str();
  }
  bool any() const { return count_ > 0; }
  std::string summary() const {
    return count_ > 5 ? text_ + "; ... " + std::to_string(count_) + " total" : text_;
  }

 private:
  int count_ = 0;
  std::string text_;
};

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<void(Failures&, std::string&)> body;
};

std::string at(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

long long alpha_expected(int k) { return (k + 1LL) * (k + 2) / 2; }
long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

Limits unguarded() {
  Limits l;
  l.override_guards = true;
  return l;
}

void crit_inc_count(Failures& f, std::string& note) {
  int crowns = 0;
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; k <= 6; ++k, ++crowns) {
      const Crown c(n, k);
      const auto got = static_cast<long long>(enumerate_inc(c).size());
      if (got != (n + k) * (k + 1LL)) f.add(at(n, k), " got ", got);
    }
  note = std::to_string(crowns) + " crowns";
}

void crit_alpha(Failures& f, std::string& note) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= 4; ++k) {
      const auto r = max_independent_set(CritGraph(Crown(n, k)));
      if (r.value != alpha_expected(k)) f.add(at(n, k), " got ", r.value.value_or(-1));
      if (!r.witness || !is_independent(*r.witness) ||
          static_cast<long long>(r.witness->size()) != r.value)
        f.add(at(n, k), " bad witness");
    }
  note = "20 crowns";
}

void crit_chi(Failures& f, std::string& note) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= 4; ++k) {
      const CritGraph g(Crown(n, k));
      const auto r = chromatic_number(g);
      if (r.value != ceil_div(2 * (n + k), k + 2)) f.add(at(n, k), " got ", r.value.value_or(-1));
      if (!is_proper_coloring(g.adjacency(), r.coloring)) f.add(at(n, k), " improper coloring");
    }
  note = "20 crowns";
}

void crit_dim(Failures& f, std::string& note) {
  std::vector<std::pair<int, int>> cells;
  for (int n = 3; n <= 7; ++n)
    for (int k = 0; n + k <= 7; ++k) cells.emplace_back(n, k);
  cells.emplace_back(4, 2);
  cells.emplace_back(4, 1);
  for (auto [n, k] : cells) {
    const Crown c(n, k);
    const auto r = min_reversible_cover(c);
    if (r.value != ceil_div(2 * (n + k), k + 2)) f.add(at(n, k), " got ", r.value.value_or(-1));
    PairSet covered(c);
    for (const auto& part : r.cover) {
      if (!is_reversible(part)) f.add(at(n, k), " cover part not reversible");
      covered |= part;
    }
    if (covered != PairSet::universe(c)) f.add(at(n, k), " cover misses pairs");
  }
  note = std::to_string(cells.size()) + " crowns; dim(4,2)=3, dim(4,1)=4";
}

void crit_maxrev(Failures& f, std::string& note) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= 4; ++k) {
      const auto r = max_reversible_set(Crown(n, k));
      if (r.value != alpha_expected(k)) f.add(at(n, k), " got ", r.value.value_or(-1));
      if (!r.witness || !is_reversible(*r.witness) || !recover_sigma(*r.witness))
        f.add(at(n, k), " witness not canonical");
    }
  note = "20 crowns";
}

void crit_inr_existence(Failures& f, std::string& note) {
  // A non-reversible independent set extends to a maximal independent one that
  // stays non-reversible, so walking maximal independent sets is exhaustive.
  int crowns = 0;
  long long walked = 0;
  for (int n = 3; n <= 8; ++n)
    for (int k = 0; n + k <= 8; ++k, ++crowns) {
      const Crown c(n, k);
      const CritGraph g(c);
      bool found = false;
      for_each_maximal_independent_set(g.adjacency(), [&](const DynBitset& bits) {
        ++walked;
        if (!found && !is_reversible(PairSet(c, bits))) found = true;
      });
      if (found != (n <= 2 * k)) f.add(at(n, k), found ? " has INR" : " no INR");
    }
  note = std::to_string(crowns) + " crowns, " + std::to_string(walked) + " maximal sets";
}

bool in_orbit(const Crown& c, const PairSet& x, const PairSet& base) {
  for (int flip = 0; flip < 2; ++flip) {
    const PairSet start = flip ? apply(Automorphism::phi(), base) : base;
    for (int j = 0; j < c.circle(); ++j)
      if (apply(Automorphism::tau(j), start) == x) return true;
  }
  return false;
}

void check_inr(Failures& f, int n, int k, long long expected, bool orbit) {
  const Crown c(n, k);
  const auto r = max_inr_set(c, unguarded());
  if (r.value != expected) f.add(at(n, k), " got ", r.value.value_or(-1), " want ", expected);
  if (!r.witness || !is_independent(*r.witness) || is_reversible(*r.witness)) {
    f.add(at(n, k), " bad witness");
    return;
  }
  if (orbit && !in_orbit(c, *r.witness, inr_extremal(c)))
    f.add(at(n, k), " witness outside the orbit of the extremal set");
}

void crit_inr_high(Failures& f, std::string& note) {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 3}, std::pair{5, 4},
                      std::pair{6, 4}})
    check_inr(f, n, k, 2 + (2LL * k + 2 - n) * (2 * k + 1 - n) / 2, true);
  note = "5 crowns";
}

void crit_inr_low(Failures& f, std::string& note) {
  for (auto [n, k] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}})
    check_inr(f, n, k, alpha_expected(k) + 2 - n, false);
  note = "3 crowns";
}

void crit_second_largest(Failures& f, std::string& note) {
  for (auto [n, k] : {std::pair{3, 3}, std::pair{3, 4}}) {
    const Crown c(n, k);
    std::set<std::size_t> sizes;
    for_each_maximal_reversible(c, [&](const PairSet& r) { sizes.insert(r.size()); });
    const long long want = alpha_expected(k) - n * (n - 1) / 2 + 1;
    if (sizes.size() < 2) {
      f.add(at(n, k), " fewer than two sizes");
      continue;
    }
    const long long second = static_cast<long long>(*std::next(sizes.rbegin()));
    if (second != want) f.add(at(n, k), " second largest ", second, " want ", want);
    const PairSet r = noncanonical_extremal(c, 1);
    if (static_cast<long long>(r.size()) != want || !is_maximal_reversible(r))
      f.add(at(n, k), " noncanonical_extremal misses the bound");
  }
  note = "2 crowns";
}

void crit_census(Failures& f, std::string& note) {
  long long total = 0;
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= 4; ++k) {
      const Crown c(n, k);
      std::set<std::vector<int>> seen;
      long long count = 0;
      for_each_canonical(c, [&](const std::vector<int>& sigma, const PairSet& t) {
        ++count;
        std::vector<int> ids;
        for (const auto& p : t.pairs()) ids.push_back(pair_id(c, p));
        seen.insert(ids);
        if (static_cast<long long>(t.size()) != alpha_expected(k)) f.add(at(n, k), " size");
        if (!is_maximal_independent(t)) f.add(at(n, k), " not maximal independent");
        if (recover_sigma(t) != sigma) f.add(at(n, k), " sigma does not round-trip");
      });
      const long long want = (n + k) * (1LL << k);
      if (static_cast<long long>(seen.size()) != want || count != want)
        f.add(at(n, k), " distinct ", seen.size(), " of ", count, " want ", want);
      total += count;
    }
  note = std::to_string(total) + " canonical sets";
}

void crit_transforms(Failures& f, std::string& note) {
  constexpr int kSets = 1000;
  long long steps = 0;
  std::mt19937_64 rng(20261016);
  for (int n = 3; n <= 10; ++n)
    for (int k = 0; n + k <= 10; ++k) {
      const Crown c(n, k);
      const CritGraph g(c);
      for (int t = 0; t < kSets; ++t) {
        const PairSet s = random_independent_set(g, rng);
        const auto size = static_cast<long long>(s.size());
        for (int i = 1; i <= c.circle(); ++i) {
          const PairSet fcl = transform(s, TransformKind::DFCL, i);
          const PairSet lcf = transform(s, TransformKind::DLCF, i);
          const PairSet fel = transform(s, TransformKind::DFEL, i);
          const PairSet lef = transform(s, TransformKind::DLEF, i);
          steps += 4;
          if (static_cast<long long>(fcl.size() + lcf.size()) != 2 * size)
            f.add(at(n, k), " contraction sum at i=", i);
          if (static_cast<long long>(fel.size() + lef.size()) != 2 * size)
            f.add(at(n, k), " expansion sum at i=", i);
          for (const PairSet* x : {&fcl, &lcf, &fel, &lef})
            if (!is_independent(*x)) f.add(at(n, k), " lost independence at i=", i);
        }
      }
    }
  note = std::to_string(steps) + " transform steps";
}

void crit_characterization(Failures& f, std::string& note) {
  long long members = 0;
  for (auto [n, k] : {std::pair{4, 3}, std::pair{5, 4}}) {
    const Crown c(n, k);
    const CritGraph g(c);
    for_each_maximal_independent_set(g.adjacency(), [&](const DynBitset& bits) {
      const PairSet s(c, bits);
      if (is_reversible(s)) return;
      bool d3 = false;
      for_each_strict_cycle(s, {3, 3}, [&](const AltCycle& cyc) {
        d3 = classify_sac3(c, cyc) == Sac3Class::Disjoint;
        return !d3;
      });
      if (!d3) return;
      ++members;
      const auto cyc = minr_d3_certify(s);
      if (!cyc) {
        f.add(at(n, k), " uncertified set of size ", s.size());
        return;
      }
      if (!check_matching_conditions(c, *cyc) || downset_of_cycle(c, *cyc) != s)
        f.add(at(n, k), " certificate does not regenerate the set");
    });
  }
  if (members == 0) f.add("no sets found");
  note = std::to_string(members) + " sets certified";
}

void crit_worked_example(Failures& f, std::string& note) {
  const Crown c(4, 5);
  const std::vector<CritPair> printed{{8, 8}, {8, 9}, {8, 1}, {8, 2}, {8, 3}, {8, 4}, {9, 9},
                                      {9, 1}, {9, 2}, {9, 3}, {9, 4}, {7, 9}, {7, 1}, {7, 2},
                                      {7, 3}, {1, 1}, {1, 2}, {1, 3}, {6, 1}, {6, 2}, {2, 2}};
  const PairSet t = canonical_set(c, {8, 9, 7, 1, 6, 2});
  if (t != PairSet(c, std::span<const CritPair>(printed))) f.add("pair list differs");
  const LinearExtension l = extension_from_json(
      c, json::parse(R"(["a3","a4","a5","b2","a2","b1","a6","b3","a1",
                         "b9","a7","b4","a9","b8","a8","b5","b6","b7"])"));
  if (l.order.size() != 18) f.add("sequence length ", l.order.size());
  if (!is_linear_extension(c, l)) f.add("sequence is not a linear extension");
  if (!reverses_all(l, t)) f.add("sequence does not reverse T");
  note = "21 pairs, 18-element extension";
}

void crit_matching_example(Failures& f, std::string& note) {
  const Crown c(47, 42);
  const AltCycle cyc = matching_cycle(c, {3, {4, 8, 7, 7, 5, 1, 2}});
  const std::vector<CritPair> printed{{1, 4},   {13, 20}, {25, 31}, {37, 43},
                                      {51, 55}, {67, 67}, {78, 79}};
  if (cyc.pairs != printed) f.add("cycle differs");
  if (!check_matching_conditions(c, cyc)) f.add("conditions fail");
  const PairSet d = downset_of_cycle(c, cyc);
  if (d.size() != 121) f.add("|D| = ", d.size());
  if (!is_maximal_independent(d) || is_reversible(d)) f.add("D is not maximal INR");
  note = "|D| = " + std::to_string(d.size());
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "critical-pair count", 1, crit_inc_count},
      {2, "independence number", 60, crit_alpha},
      {3, "chromatic number", 300, crit_chi},
      {4, "dimension as cover", 120, crit_dim},
      {5, "maximum reversible set", 60, crit_maxrev},
      {6, "INR existence", 600, crit_inr_existence},
      {7, "max INR, k < n <= 2k", 120, crit_inr_high},
      {8, "max INR, n <= k", 300, crit_inr_low},
      {9, "second-largest maximal reversible", 300, crit_second_largest},
      {10, "canonical census", 120, crit_census},
      {11, "transform identities", 600, crit_transforms},
      {12, "disjoint 3-cycle characterization", 600, crit_characterization},
      {13, "worked example", 1, crit_worked_example},
      {14, "matching-cycle example", 1, crit_matching_example},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Failures f;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(f, note);
    } catch (const std::exception& e) {
      f.add("exception: ", e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_s) f.add("took ", secs, " s, budget ", cr.budget_s, " s");
    failed += f.any();
    std::printf("%s %2d %-36s %9.3f s  %s\n", f.any() ? "FAIL" : "PASS", cr.id, cr.title.c_str(),
                secs, f.any() ? f.summary().c_str() : note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
