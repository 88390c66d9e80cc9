#include "crownlab/battery.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "crownlab/canonical.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/extremal.hpp"
#include "crownlab/reversibility.hpp"
#include "crownlab/transforms.hpp"

namespace crownlab {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool BatteryReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* BatteryReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

PairSet random_independent_set(const CritGraph& graph, std::mt19937_64& rng) {
  const int v = graph.size();
  std::vector<int> order(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) order[i] = i;
  // Fisher-Yates with plain modular draws keeps the sequence identical on
  // every standard library.
  for (int i = v - 1; i > 0; --i) std::swap(order[i], order[rng() % static_cast<unsigned>(i + 1)]);
  const unsigned keep_percent = 20 + static_cast<unsigned>(rng() % 81);
  DynBitset chosen(static_cast<std::size_t>(v));
  for (int id : order) {
    if (rng() % 100 >= keep_percent) continue;
    if (!chosen.intersects(graph.neighbors(id))) chosen.set(static_cast<std::size_t>(id));
  }
  return PairSet(graph.crown(), std::move(chosen));
}

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

class Runner {
 public:
  explicit Runner(BatteryReport& report) : report_(report) {}

  template <typename F>
  void run(const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result{name, CheckStatus::Skipped, {}, 0};
    try {
      Outcome o = body();
      result.status = o.pass ? CheckStatus::Pass : CheckStatus::Fail;
      result.detail = std::move(o.detail);
    } catch (const ResourceError& e) {
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.status = CheckStatus::Fail;
      result.detail = std::string("error: ") + e.what();
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(result));
  }

  void skip(const std::string& name, const std::string& why) {
    report_.checks.push_back({name, CheckStatus::Skipped, why, 0});
  }

 private:
  BatteryReport& report_;
};

std::string expect(const std::string& what, long long got, long long want) {
  return what + "=" + std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

}  // namespace

BatteryReport verify_battery(const Crown& crown, const BatteryOptions& options) {
  BatteryReport report{crown.n(), crown.k(), {}};
  Runner runner(report);
  const int n = crown.n();
  const int k = crown.k();
  const int nk = crown.circle();
  const CritGraph graph(crown);
  Limits limits = options.limits;
  limits.maxrev_max_nk = std::max(limits.maxrev_max_nk, options.solver_max_nk);
  limits.inr_max_nk = std::max(limits.inr_max_nk, options.solver_max_nk);
  limits.cover_max_nk =
      std::max({limits.cover_max_nk, options.cover_max_nk, options.enumeration_max_nk});
  const bool solvable = nk <= options.solver_max_nk;
  const std::string too_big = "n+k=" + std::to_string(nk) + " is above the battery cap";

  runner.run("inc_count", [&] {
    const long long got = static_cast<long long>(enumerate_inc(crown).size());
    const long long want = static_cast<long long>(nk) * (k + 1);
    return Outcome{got == want && graph.size() == want, expect("inc_count", got, want)};
  });

  std::optional<long long> alpha;
  if (solvable) {
    runner.run("alpha", [&] {
      const auto r = max_independent_set(graph, limits);
      alpha = r.value;
      return Outcome{*r.value == alpha_formula(k) && is_independent(*r.witness),
                     expect("alpha", *r.value, alpha_formula(k))};
    });
    runner.run("chi", [&] {
      const auto r = chromatic_number(graph, limits);
      const long long chi = *r.value;
      bool ok = chi == dimension_formula(n, k) && is_proper_coloring(graph.adjacency(), r.coloring);
      if (alpha) ok = ok && chi * *alpha >= graph.size();
      return Outcome{ok, expect("chi", chi, dimension_formula(n, k))};
    });
  } else {
    runner.skip("alpha", too_big);
    runner.skip("chi", too_big);
  }

  if (nk <= options.cover_max_nk)
    runner.run("dim", [&] {
      const auto r = min_reversible_cover(crown, limits);
      return Outcome{*r.value == dimension_formula(n, k),
                     expect("dim", *r.value, dimension_formula(n, k))};
    });
  else
    runner.skip("dim", too_big);

  std::optional<long long> maxrev;
  std::optional<long long> maxinr;
  bool maxinr_done = false;
  if (solvable) {
    runner.run("maxrev", [&] {
      const auto r = max_reversible_set(crown, limits);
      maxrev = r.value;
      const bool canonical = recover_sigma(*r.witness).has_value();
      return Outcome{*r.value == alpha_formula(k) && canonical,
                     expect("maxrev", *r.value, alpha_formula(k)) +
                         (canonical ? ", canonical witness" : ", witness not canonical")};
    });
    runner.run("inr_existence", [&] {
      bool exists = false;
      for_each_strict_cycle(PairSet::universe(crown), {3, crown.pair_count()}, [&](const AltCycle&) {
        exists = true;
        return false;
      });
      const bool want = n <= 2 * k;
      return Outcome{exists == want, std::string("strict cycle of size >= 3 ") +
                                         (exists ? "exists" : "does not exist") +
                                         (want ? " (n <= 2k)" : " (n > 2k)")};
    });
    runner.run("inr_optimality", [&] {
      const auto r = max_inr_set(crown, limits);
      maxinr = r.value;
      maxinr_done = true;
      if (n > 2 * k)
        return Outcome{!r.value.has_value(), r.value ? "found an INR set with n > 2k" : "none"};
      const int want = inr_extremal_size(n, k);
      return Outcome{r.value && *r.value == want, expect("max_inr", r.value.value_or(-1), want)};
    });
    runner.run("solver_consistency", [&] {
      if (!alpha || !maxrev || !maxinr_done)
        throw ResourceError("needs alpha, maxrev and max_inr results");
      const long long combined = std::max(*maxrev, maxinr.value_or(0));
      return Outcome{*alpha == combined, expect("max(maxrev, maxinr)", combined, *alpha)};
    });
  } else {
    for (const char* name : {"maxrev", "inr_existence", "inr_optimality", "solver_consistency"})
      runner.skip(name, too_big);
  }

  runner.run("extremal_sizes", [&] {
    if (n > 2 * k) {
      try {
        sac3(crown);
      } catch (const DomainError&) {
        return Outcome{true, "no strict 3-cycle construction for n > 2k (range error raised)"};
      }
      return Outcome{false, "sac3 accepted n > 2k"};
    }
    const AltCycle c = sac3(crown);
    PairSet cycle_set(crown, std::span<const CritPair>(c.pairs));
    bool ok = is_strict(crown, c) && is_independent(cycle_set) &&
              classify_sac3(crown, c) == Sac3Class::Disjoint;
    const PairSet s = inr_extremal(crown);
    const int want = inr_extremal_size(n, k);
    ok = ok && static_cast<int>(s.size()) == want && is_maximal_independent(s) && !is_reversible(s) &&
         cycle_set.is_subset_of(s);
    if (k < n) {
      ok = ok && downset_of_cycle(crown, c) == s;
      const auto certified = minr_d3_certify(s);
      ok = ok && certified && *certified == c;
    }
    return Outcome{ok, expect("|inr_extremal|", static_cast<long long>(s.size()), want)};
  });

  if (n <= k)
    runner.run("noncanonical", [&] {
      const int want = alpha_formula(k) - n * (n - 1) / 2 + 1;
      bool ok = true;
      for (int i = 1; i <= k + 1 - n; ++i) {
        const PairSet r = noncanonical_extremal(crown, i);
        ok = ok && static_cast<int>(r.size()) == want && is_maximal_reversible(r) &&
             !recover_sigma(r).has_value();
      }
      return Outcome{ok, "size " + std::to_string(want) + " for i=1.." + std::to_string(k + 1 - n)};
    });
  else
    runner.skip("noncanonical", "requires n <= k");

  if (k <= 5)
    runner.run("canonical_census", [&] {
      std::set<std::vector<std::uint64_t>> seen;
      bool ok = true;
      long long count = 0;
      for_each_canonical(crown, [&](const std::vector<int>& sigma, const PairSet& t) {
        ++count;
        seen.insert(t.bits().words());
        ok = ok && static_cast<int>(t.size()) == alpha_formula(k) && is_maximal_independent(t) &&
             is_reversible(t);
        const auto back = recover_sigma(t);
        ok = ok && back && *back == sigma;
      });
      const long long want = static_cast<long long>(nk) << k;
      ok = ok && count == want && static_cast<long long>(seen.size()) == want;
      return Outcome{ok, expect("distinct canonical sets", static_cast<long long>(seen.size()), want)};
    });
  else
    runner.skip("canonical_census", "requires k <= 5");

  runner.run("transform_identities", [&] {
    std::mt19937_64 rng(options.seed);
    long long violations = 0;
    long long trials = 0;
    for (int sample = 0; sample < options.random_sets; ++sample) {
      const PairSet s = random_independent_set(graph, rng);
      for (int i = 1; i <= nk; ++i) {
        const PairSet dfcl = transform(s, TransformKind::DFCL, i);
        const PairSet dlcf = transform(s, TransformKind::DLCF, i);
        const PairSet dfel = transform(s, TransformKind::DFEL, i);
        const PairSet dlef = transform(s, TransformKind::DLEF, i);
        ++trials;
        const bool ok = dfcl.size() + dlcf.size() == 2 * s.size() &&
                        dfel.size() + dlef.size() == 2 * s.size() && is_independent(dfcl) &&
                        is_independent(dlcf) && is_independent(dfel) && is_independent(dlef);
        if (!ok) ++violations;
      }
    }
    return Outcome{violations == 0, std::to_string(violations) + " violations in " +
                                        std::to_string(trials) + " (set, position) trials"};
  });

  if (n <= k && nk <= options.enumeration_max_nk)
    runner.run("second_largest_maximal_reversible", [&] {
      std::map<std::size_t, long long> by_size;
      bool all_independent = true;
      for_each_maximal_reversible(
          crown,
          [&](const PairSet& r) {
            ++by_size[r.size()];
            all_independent = all_independent && is_maximal_independent(r);
          },
          limits);
      const long long want = alpha_formula(k) - n * (n - 1) / 2 + 1;
      if (by_size.size() < 2) return Outcome{false, "fewer than two maximal reversible sizes"};
      auto it = by_size.rbegin();
      const long long largest = static_cast<long long>(it->first);
      const long long second = static_cast<long long>((++it)->first);
      const bool attained = static_cast<long long>(noncanonical_extremal(crown, 1).size()) == second;
      return Outcome{largest == alpha_formula(k) && second == want && attained && all_independent,
                     expect("second largest", second, want)};
    });
  else
    runner.skip("second_largest_maximal_reversible", n <= k ? too_big : "requires n <= k");

  if (n > k && nk <= options.enumeration_max_nk)
    runner.run("maximal_reversible_canonical", [&] {
      long long total = 0;
      long long canonical = 0;
      bool all_independent = true;
      for_each_maximal_reversible(
          crown,
          [&](const PairSet& r) {
            ++total;
            if (recover_sigma(r)) ++canonical;
            all_independent = all_independent && is_maximal_independent(r);
          },
          limits);
      const long long want = static_cast<long long>(nk) << k;
      return Outcome{canonical == total && total == want && all_independent,
                     std::to_string(canonical) + " of " + std::to_string(total) +
                         " maximal reversible sets are canonical"};
    });
  else
    runner.skip("maximal_reversible_canonical", n > k ? too_big : "requires n > k");

  if (k < n && n <= 2 * k && nk <= options.cover_max_nk)
    runner.run("minr_d3_characterization", [&] {
      long long members = 0;
      long long certified = 0;
      for_each_maximal_independent_set(graph.adjacency(), [&](const DynBitset& bits) {
        const PairSet s(crown, bits);
        if (is_reversible(s)) return;
        bool d3 = false;
        for_each_strict_cycle(s, {3, 3}, [&](const AltCycle& c) {
          d3 = classify_sac3(crown, c) == Sac3Class::Disjoint;
          return !d3;
        });
        if (!d3) return;
        ++members;
        if (minr_d3_certify(s)) ++certified;
      });
      return Outcome{members > 0 && members == certified,
                     std::to_string(certified) + " of " + std::to_string(members) +
                         " maximal independent D3 sets certified"};
    });
  else
    runner.skip("minr_d3_characterization",
                k < n && n <= 2 * k ? too_big : "requires k < n <= 2k");

  return report;
}

}  // namespace crownlab
