#include "crownlab/transforms.hpp"

#include <algorithm>
#include <cctype>

namespace crownlab {

bool is_contraction_blocking_pair(const Crown& crown, int i, CritPair first, CritPair last) {
  const int pos = crown.wrap(i);
  return first.a == pos && last.b == pos && crown.below(last.a, first.b);
}

bool is_expansion_blocking_pair(const Crown& crown, int i, CritPair first, CritPair last) {
  const int pos = crown.wrap(i);
  return first.a == pos && last.b == crown.wrap(static_cast<long long>(pos) + crown.k()) &&
         crown.below(last.a, first.b);
}

BlockingPairReport blocking_pairs(const PairSet& s, BlockingKind kind, int i) {
  if (!is_independent(s)) throw DomainError("blocking pairs are defined for independent sets");
  const Crown& crown = s.crown();
  BlockingPairReport report{kind, crown.wrap(i), PairSet(crown), PairSet(crown)};
  const auto members = s.pairs();
  for (const CritPair& p : members)
    for (const CritPair& q : members) {
      const bool blocking = kind == BlockingKind::Contraction
                                ? is_contraction_blocking_pair(crown, i, p, q)
                                : is_expansion_blocking_pair(crown, i, p, q);
      if (blocking) {
        report.first_set.insert(p);
        report.last_set.insert(q);
      }
    }
  return report;
}

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::DFCL: return "dfcl";
    case TransformKind::DLCF: return "dlcf";
    case TransformKind::DFEL: return "dfel";
    case TransformKind::DLEF: return "dlef";
  }
  return "?";
}

TransformKind parse_transform_kind(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto kind : {TransformKind::DFCL, TransformKind::DLCF, TransformKind::DFEL,
                    TransformKind::DLEF})
    if (to_string(kind) == lower) return kind;
  throw DomainError("unknown transform '" + text + "', expected dfcl, dlcf, dfel or dlef");
}

TransformOutcome apply_transform(const PairSet& s, TransformKind kind, int i) {
  const Crown& crown = s.crown();
  const int pos = crown.wrap(i);
  const bool contraction = kind == TransformKind::DFCL || kind == TransformKind::DLCF;
  const auto report =
      blocking_pairs(s, contraction ? BlockingKind::Contraction : BlockingKind::Expansion, pos);
  TransformOutcome out{s, {kind, pos, {}, {}}};
  const bool delete_first = kind == TransformKind::DFCL || kind == TransformKind::DFEL;
  const PairSet& deleted = delete_first ? report.first_set : report.last_set;
  const PairSet& moved = delete_first ? report.last_set : report.first_set;
  out.step.removed = deleted.pairs();
  for (const CritPair& p : moved.pairs()) {
    switch (kind) {
      case TransformKind::DFCL: out.step.added.push_back(make_pair(crown, p.a, pos - 1)); break;
      case TransformKind::DLCF: out.step.added.push_back(make_pair(crown, pos + 1, p.b)); break;
      case TransformKind::DFEL:
        out.step.added.push_back(make_pair(crown, p.a, static_cast<long long>(pos) + crown.k() + 1));
        break;
      case TransformKind::DLEF: out.step.added.push_back(make_pair(crown, pos - 1, p.b)); break;
    }
  }
  out.result.subtract(deleted);
  for (const CritPair& p : out.step.added) out.result.insert(p);
  return out;
}

PairSet transform(const PairSet& s, TransformKind kind, int i) {
  return apply_transform(s, kind, i).result;
}

namespace {

void require_strict3(const Crown& crown, const AltCycle& c) {
  if (c.pairs.size() != 3)
    throw DomainError("expected a strict 3-cycle, got " + std::to_string(c.pairs.size()) +
                      " pairs");
  if (!is_strict(crown, c)) throw DomainError("expected a strict 3-cycle");
}

}  // namespace

PairSet fan(const Crown& crown, const AltCycle& c, int alpha, FanDirection direction) {
  require_strict3(crown, c);
  if (alpha < 1 || alpha > 3) throw DomainError("fan index must be 1, 2 or 3");
  const CritPair corner = c.pairs[static_cast<std::size_t>(alpha - 1)];
  const int span = crown.offset(corner.a, corner.b);
  PairSet out(crown);
  for (int d = 0; d <= span; ++d) {
    const int point = crown.wrap(static_cast<long long>(corner.a) + d);
    if (direction == FanDirection::Forward)
      out.insert({corner.a, point});
    else
      out.insert({point, corner.b});
  }
  return out;
}

GapReport spread(const Crown& crown, const AltCycle& c) {
  require_strict3(crown, c);
  if (classify_sac3(crown, c) != Sac3Class::Disjoint)
    throw DomainError("spread needs a cycle with the Disjoint Property");
  GapReport r{};
  for (int a = 0; a < 3; ++a)
    r.gaps[a] = pair_size(crown, crown.b(c.pairs[a].b), crown.a(c.pairs[(a + 1) % 3].a));
  r.spread = r.gaps[0] - r.gaps[1] - r.gaps[2];
  for (int a = 1; a < 3; ++a)
    r.spread = std::max(r.spread, r.gaps[a] - r.gaps[(a + 1) % 3] - r.gaps[(a + 2) % 3]);
  return r;
}

namespace {

std::string pair_text(CritPair p) {
  return "(a" + std::to_string(p.a) + ",b" + std::to_string(p.b) + ")";
}

// Offset (from the corner's minimal) of the fan pair that must be added
// next, or -1 when the fan is complete.
int missing_offset(const PairSet& s, CritPair corner, FanDirection direction) {
  const Crown& crown = s.crown();
  const int span = crown.offset(corner.a, corner.b);
  auto at = [&](int d) { return crown.wrap(static_cast<long long>(corner.a) + d); };
  if (direction == FanDirection::Forward) {
    int d = span;
    while (d >= 0 && s.contains({corner.a, at(d)})) --d;
    return d;
  }
  int d = 0;
  while (d <= span && s.contains({at(d), corner.b})) ++d;
  return d > span ? -1 : d;
}

}  // namespace

FanSaturation saturate_fans(const PairSet& s, const AltCycle& c, const FanDirection (&f)[3]) {
  const Crown& crown = s.crown();
  require_strict3(crown, c);
  if (!is_independent(s)) throw DomainError("saturate_fans needs an independent set");
  if (is_reversible(s)) throw DomainError("saturate_fans needs a non-reversible set");
  for (const CritPair& p : c.pairs)
    if (!s.contains(p)) throw DomainError("cycle pair " + pair_text(p) + " is not in S");

  FanSaturation out{s, {}};
  const int cap = 4 * crown.pair_count();
  auto fail = [&](const std::string& why) { throw StepTraceError(why, out.trace); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int alpha = 0; alpha < 3; ++alpha) {
      const CritPair corner = c.pairs[alpha];
      while (true) {
        const int d = missing_offset(out.result, corner, f[alpha]);
        if (d < 0) break;
        if (static_cast<int>(out.trace.size()) >= cap) fail("fan saturation did not converge");
        const int m = crown.wrap(static_cast<long long>(corner.a) + d +
                                 (f[alpha] == FanDirection::Forward ? 1 : -1));
        TransformOutcome step(out.result, {TransformKind::DFCL, m, {}, {}});
        CritPair wanted;
        if (f[alpha] == FanDirection::Forward) {
          // (x_a, b_m) must be last in a contraction blocking pair at m.
          wanted = {corner.a, crown.wrap(static_cast<long long>(corner.a) + d)};
          const auto report = blocking_pairs(out.result, BlockingKind::Contraction, m);
          if (!report.last_set.contains({corner.a, m}))
            fail("no contraction blocking pair at " + std::to_string(m) + " to extend the forward " +
                 std::to_string(alpha + 1) + "-fan");
          step = apply_transform(out.result, TransformKind::DFCL, m);
        } else {
          wanted = {crown.wrap(static_cast<long long>(corner.a) + d), corner.b};
          const auto report = blocking_pairs(out.result, BlockingKind::Contraction, m);
          if (!report.first_set.contains({m, corner.b}))
            fail("no contraction blocking pair at " + std::to_string(m) +
                 " to extend the backward " + std::to_string(alpha + 1) + "-fan");
          step = apply_transform(out.result, TransformKind::DLCF, m);
        }
        out.trace.push_back(step.step);
        for (const CritPair& p : c.pairs)
          if (!step.result.contains(p))
            fail("step " + to_string(step.step.op) + " at " + std::to_string(m) +
                 " deletes cycle pair " + pair_text(p));
        if (!is_independent(step.result))
          fail("step " + to_string(step.step.op) + " at " + std::to_string(m) +
               " breaks independence");
        if (!step.result.contains(wanted))
          fail("step " + to_string(step.step.op) + " at " + std::to_string(m) + " did not add " +
               pair_text(wanted));
        out.result = std::move(step.result);
        changed = true;
      }
    }
    if (changed) {
      bool complete = true;
      for (int alpha = 0; alpha < 3; ++alpha)
        if (missing_offset(out.result, c.pairs[alpha], f[alpha]) >= 0) complete = false;
      changed = !complete;
    }
  }
  return out;
}

}  // namespace crownlab
