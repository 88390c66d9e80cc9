#include "crownlab/canonical.hpp"

#include "crownlab/errors.hpp"
#include "crownlab/reversibility.hpp"

namespace crownlab {

namespace {

void check_indices(const Crown& crown, const std::vector<int>& seq) {
  std::vector<bool> seen(static_cast<std::size_t>(crown.circle() + 1), false);
  for (int x : seq) {
    if (x < 1 || x > crown.circle())
      throw DomainError("index a" + std::to_string(x) + " is outside 1.." +
                        std::to_string(crown.circle()));
    if (seen[x]) throw DomainError("index a" + std::to_string(x) + " is repeated");
    seen[x] = true;
  }
}

}  // namespace

bool is_h_contiguous(const Crown& crown, const std::vector<int>& seq) {
  check_indices(crown, seq);
  if (seq.empty()) return true;
  int lo = seq.front();
  int len = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] == crown.wrap(static_cast<long long>(lo) - 1)) {
      lo = seq[i];
      ++len;
    } else if (seq[i] == crown.wrap(static_cast<long long>(lo) + len)) {
      ++len;
    } else {
      return false;
    }
  }
  return true;
}

std::vector<int> decode_sigma(const Crown& crown, const SigmaCode& code) {
  if (code.base < 1 || code.base > crown.circle())
    throw DomainError("sigma base a" + std::to_string(code.base) + " is outside 1.." +
                      std::to_string(crown.circle()));
  if (static_cast<int>(code.pattern.size()) >= crown.circle())
    throw DomainError("sigma pattern is longer than the circle allows");
  std::vector<int> seq{code.base};
  int lo = code.base;
  int len = 1;
  for (char c : code.pattern) {
    if (c == 'L') {
      lo = crown.wrap(static_cast<long long>(lo) - 1);
      seq.push_back(lo);
    } else if (c == 'T') {
      seq.push_back(crown.wrap(static_cast<long long>(lo) + len));
    } else {
      throw DomainError(std::string("sigma pattern characters must be L or T, got '") + c + "'");
    }
    ++len;
  }
  return seq;
}

SigmaCode encode_sigma(const Crown& crown, const std::vector<int>& seq) {
  if (seq.empty() || !is_h_contiguous(crown, seq))
    throw DomainError("sequence is not h-contiguous");
  SigmaCode code{seq.front(), {}};
  int lo = seq.front();
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] == crown.wrap(static_cast<long long>(lo) - 1)) {
      code.pattern.push_back('L');
      lo = seq[i];
    } else {
      code.pattern.push_back('T');
    }
  }
  return code;
}

PairSet canonical_set(const Crown& crown, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != crown.k() + 1)
    throw DomainError("canonical_set needs a sequence of length k+1=" +
                      std::to_string(crown.k() + 1) + ", got " + std::to_string(sigma.size()));
  if (!is_h_contiguous(crown, sigma)) throw DomainError("sequence is not h-contiguous");
  PairSet t(crown);
  std::vector<int> previous = incomparable_maxima(crown, sigma.front());
  for (int b : previous) t.insert({sigma.front(), b});
  for (std::size_t i = 1; i < sigma.size(); ++i) {
    std::vector<int> current;
    for (int b : previous)
      if (crown.incomparable(sigma[i], b)) current.push_back(b);
    for (int b : current) t.insert({sigma[i], b});
    previous = std::move(current);
  }
  return t;
}

void for_each_canonical(const Crown& crown,
                        const std::function<void(const std::vector<int>&, const PairSet&)>& visit) {
  const int k = crown.k();
  if (k > kCanonicalEnumerationMaxK)
    throw ResourceError("canonical enumeration is limited to k <= " +
                        std::to_string(kCanonicalEnumerationMaxK));
  const std::uint64_t patterns = std::uint64_t{1} << k;
  for (int base = 1; base <= crown.circle(); ++base)
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
      SigmaCode code{base, std::string(static_cast<std::size_t>(k), 'L')};
      for (int i = 0; i < k; ++i)
        if ((bits >> i) & 1U) code.pattern[i] = 'T';
      const auto sigma = decode_sigma(crown, code);
      visit(sigma, canonical_set(crown, sigma));
    }
}

std::vector<PairSet> enumerate_canonical(const Crown& crown) {
  std::vector<PairSet> out;
  for_each_canonical(crown, [&](const std::vector<int>&, const PairSet& t) { out.push_back(t); });
  return out;
}

std::optional<std::vector<int>> recover_sigma(const PairSet& r) {
  if (!is_maximal_reversible(r))
    throw DomainError("recover_sigma needs a maximal reversible set");
  const Crown& crown = r.crown();
  auto labeling = consistent_labeling(r);
  if (static_cast<int>(labeling.size()) != crown.k() + 1) return std::nullopt;
  if (!is_h_contiguous(crown, labeling)) return std::nullopt;
  if (canonical_set(crown, labeling) != r) return std::nullopt;
  return labeling;
}

PortionInfo portion_info(const PairSet& t, int x) {
  const Crown& crown = t.crown();
  const Projections proj = projections(t);
  if (x < 1 || x > crown.circle() || proj.b_of[x].empty())
    throw DomainError("a" + std::to_string(x) + " is not in A(T)");
  std::vector<bool> has(static_cast<std::size_t>(crown.k() + 1), false);
  for (int b : proj.b_of[x]) has[crown.offset(x, b)] = true;
  const int len = static_cast<int>(proj.b_of[x].size());
  bool initial = true;
  bool terminal = true;
  for (int o = 0; o <= crown.k(); ++o) {
    if (has[o] != (o < len)) initial = false;
    if (has[o] != (o > crown.k() - len)) terminal = false;
  }
  if (initial) return {Portion::Initial, len};
  if (terminal) return {Portion::Terminal, len};
  throw DomainError("B(a" + std::to_string(x) + ",T) is neither an initial nor a terminal portion");
}

PairSet noncanonical_extremal(const Crown& crown, int i) {
  const int n = crown.n();
  const int k = crown.k();
  if (n > k) throw DomainError("noncanonical_extremal needs n <= k");
  if (i < 1 || i > k + 1 - n)
    throw DomainError("noncanonical_extremal needs 1 <= i <= k+1-n=" + std::to_string(k + 1 - n));
  std::vector<int> sigma;
  for (int j = 1; j <= k + 1; ++j) sigma.push_back(j);
  PairSet r = canonical_set(crown, sigma);
  const CritPair p = make_pair(crown, i + n, i);
  std::size_t removed = 0;
  for (const CritPair& q : r.pairs())
    if (q != p && adjacent(crown, p, q)) {
      r.erase(q);
      ++removed;
    }
  if (removed != static_cast<std::size_t>(n * (n - 1) / 2))
    throw InternalError("noncanonical_extremal removed an unexpected number of pairs");
  r.insert(p);
  return r;
}

}  // namespace crownlab
