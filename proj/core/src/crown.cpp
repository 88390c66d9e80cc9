#include "crownlab/crown.hpp"

#include <charconv>

#include "crownlab/errors.hpp"

namespace crownlab {

std::string Element::to_string() const {
  return (role == Role::Min ? "a" : "b") + std::to_string(index);
}

Element Element::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b'))
    throw DomainError("bad element '" + std::string(text) + "', expected a<i> or b<j>");
  int value = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || value < 1)
    throw DomainError("bad element index in '" + std::string(text) + "'");
  return {text[0] == 'a' ? Role::Min : Role::Max, value};
}

Crown::Crown(int n, int k) : n_(n), k_(k) {
  if (n < 3) throw DomainError("crown needs n >= 3, got n=" + std::to_string(n));
  if (k < 0) throw DomainError("crown needs k >= 0, got k=" + std::to_string(k));
}

Crown make_crown(int n, int k) { return Crown(n, k); }

Relation relation(const Crown& crown, Element a, Element b) {
  if (a.role != Role::Min || b.role != Role::Max)
    throw DomainError("relation expects (minimal, maximal), got (" + a.to_string() + ", " +
                      b.to_string() + ")");
  return crown.incomparable(crown.wrap(a.index), crown.wrap(b.index)) ? Relation::Incomparable
                                                                       : Relation::Below;
}

bool cyclic_between(const Crown& crown, CircleTriple t) {
  const int u = crown.wrap(t.first);
  const int v = crown.wrap(t.second);
  const int w = crown.wrap(t.third);
  if (u == v || v == w || u == w) throw DomainError("cyclic_between needs distinct positions");
  return crown.offset(u, v) < crown.offset(u, w);
}

bool on_arc(const Crown& crown, int from, int to, int point) {
  return crown.offset(from, point) <= crown.offset(from, to);
}

int pair_size(const Crown& crown, Element v1, Element v2) {
  return crown.offset(crown.wrap(v1.index), crown.wrap(v2.index)) + 1;
}

bool is_critical(const Crown& crown, CritPair p) {
  return p.a >= 1 && p.a <= crown.circle() && p.b >= 1 && p.b <= crown.circle() &&
         crown.incomparable(p.a, p.b);
}

CritPair make_pair(const Crown& crown, long long a, long long b) {
  CritPair p{crown.wrap(a), crown.wrap(b)};
  if (!crown.incomparable(p.a, p.b))
    throw DomainError("(a" + std::to_string(p.a) + ",b" + std::to_string(p.b) +
                      ") is a comparable pair, not a critical pair");
  return p;
}

int pair_size(const Crown& crown, CritPair p) { return crown.offset(p.a, p.b) + 1; }

bool contained_in(const Crown& crown, CritPair p, CritPair q) {
  // q spans offsets [0, |q|-1] measured from q.a; p must start and end inside
  // it, with its start not after its end.
  const int start = crown.offset(q.a, p.a);
  const int end = crown.offset(q.a, p.b);
  return start <= end && end <= crown.offset(q.a, q.b);
}

bool arcs_overlap(const Crown& crown, CritPair p, CritPair q) {
  return on_arc(crown, p.a, p.b, q.a) || on_arc(crown, q.a, q.b, p.a);
}

PairRelation pair_relation(const Crown& crown, CritPair p, CritPair q) {
  if (!is_critical(crown, p) || !is_critical(crown, q))
    throw DomainError("pair_relation expects critical pairs");
  if (p == q) return PairRelation::Equal;
  if (contained_in(crown, p, q)) return PairRelation::FirstInSecond;
  if (contained_in(crown, q, p)) return PairRelation::SecondInFirst;
  return arcs_overlap(crown, p, q) ? PairRelation::Overlap : PairRelation::Disjoint;
}

Element Automorphism::operator()(const Crown& crown, Element e) const {
  if (kind == Kind::Tau) return {e.role, crown.wrap(static_cast<long long>(e.index) + shift)};
  if (e.role == Role::Min) return {Role::Min, crown.wrap(-static_cast<long long>(e.index))};
  return {Role::Max, crown.wrap(static_cast<long long>(crown.k()) - e.index)};
}

CritPair Automorphism::operator()(const Crown& crown, CritPair p) const {
  return {(*this)(crown, crown.a(p.a)).index, (*this)(crown, crown.b(p.b)).index};
}

}  // namespace crownlab
