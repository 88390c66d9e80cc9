#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace crownlab {

/// Minimal elements a_i form A, maximal elements b_j form B.
enum class Role : std::uint8_t { Min, Max };

/// One point of a crown. Indices are 1-based positions on the circle.
struct Element {
  Role role = Role::Min;
  int index = 1;

  friend auto operator<=>(const Element&, const Element&) = default;

  /// "a7" / "b1".
  std::string to_string() const;
  static Element parse(std::string_view text);
};

/// The crown S_n^k: 2(n+k) points on a circle of n+k positions, with a_i
/// incomparable to b_j exactly when j lies in {i, ..., i+k} cyclically.
///
/// Only the parameters are stored; the order relation is computed.
class Crown {
 public:
  /// Throws DomainError unless n >= 3 and k >= 0.
  Crown(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  /// Number of positions on the circle, n+k.
  int circle() const { return n_ + k_; }
  int element_count() const { return 2 * circle(); }
  /// Number of critical pairs, (n+k)(k+1).
  int pair_count() const { return circle() * (k_ + 1); }

  /// Reduce any integer index into [1, n+k].
  int wrap(long long index) const {
    const long long m = circle();
    return static_cast<int>(((index - 1) % m + m) % m) + 1;
  }
  /// (to - from) mod (n+k), in [0, n+k).
  int offset(int from, int to) const { return wrap(static_cast<long long>(to) - from + 1) - 1; }

  Element a(long long i) const { return {Role::Min, wrap(i)}; }
  Element b(long long j) const { return {Role::Max, wrap(j)}; }

  /// a_i || b_j.
  bool incomparable(int a_index, int b_index) const { return offset(a_index, b_index) <= k_; }
  /// a_i < b_j.
  bool below(int a_index, int b_index) const { return !incomparable(a_index, b_index); }

  friend bool operator==(const Crown&, const Crown&) = default;

 private:
  int n_;
  int k_;
};

Crown make_crown(int n, int k);

enum class Relation { Incomparable, Below };

/// Relation between a minimal and a maximal element. Throws DomainError on
/// role mismatch (the two antichains have no internal comparabilities).
Relation relation(const Crown& crown, Element a, Element b);

/// Three circle positions, in the order they are to be tested.
struct CircleTriple {
  int first;
  int second;
  int third;
};

/// Walking clockwise from `first`, is `second` met strictly before `third`?
/// Throws DomainError if positions repeat.
bool cyclic_between(const Crown& crown, CircleTriple t);

/// Does the clockwise arc from `from` to `to` (inclusive) contain `point`?
bool on_arc(const Crown& crown, int from, int to, int point);

/// Number of circle points visited walking clockwise from v1 to v2,
/// endpoints included. Defined for any pair of elements.
int pair_size(const Crown& crown, Element v1, Element v2);

/// An incomparable pair (a_i, b_j). Stored with normalized indices.
struct CritPair {
  int a = 1;
  int b = 1;

  friend auto operator<=>(const CritPair&, const CritPair&) = default;
};

bool is_critical(const Crown& crown, CritPair p);
/// Normalizes indices; throws DomainError if a_i < b_j.
CritPair make_pair(const Crown& crown, long long a, long long b);
/// Size of the arc from a to b; in [1, k+1] for critical pairs.
int pair_size(const Crown& crown, CritPair p);

enum class PairRelation { Equal, FirstInSecond, SecondInFirst, Overlap, Disjoint };

/// Containment is x ⪯ a ⪯ b ⪯ y along the circle; pairs overlap when their
/// arcs share a circle point and neither contains the other.
PairRelation pair_relation(const Crown& crown, CritPair p, CritPair q);
/// Is p contained in q?
bool contained_in(const Crown& crown, CritPair p, CritPair q);
bool arcs_overlap(const Crown& crown, CritPair p, CritPair q);

/// The rotations tau_j and the reflection phi: a_i -> a_{-i}, b_j -> b_{k-j}.
struct Automorphism {
  enum class Kind { Tau, Phi };
  Kind kind = Kind::Tau;
  int shift = 0;

  static Automorphism tau(int j) { return {Kind::Tau, j}; }
  static Automorphism phi() { return {Kind::Phi, 0}; }

  Element operator()(const Crown& crown, Element e) const;
  CritPair operator()(const Crown& crown, CritPair p) const;
};

}  // namespace crownlab
