#include <gtest/gtest.h>

#include "crownlab/crown.hpp"
#include "crownlab/errors.hpp"
#include "oracles.hpp"

using namespace crownlab;

TEST(Crown, ElementCounts) {
  EXPECT_EQ(Crown(3, 0).element_count(), 6);
  EXPECT_EQ(Crown(4, 5).element_count(), 18);
  EXPECT_THROW(Crown(2, 1), DomainError);
  EXPECT_THROW(Crown(3, -1), DomainError);
}

TEST(Crown, ElementNames) {
  EXPECT_EQ(Element::parse("a7"), (Element{Role::Min, 7}));
  EXPECT_EQ(Element::parse("b12").to_string(), "b12");
  EXPECT_THROW(Element::parse("c1"), DomainError);
  EXPECT_THROW(Element::parse("a"), DomainError);
  EXPECT_THROW(Element::parse("a0"), DomainError);
}

TEST(Crown, RelationBoundaries) {
  const Crown s45(4, 5);
  EXPECT_EQ(relation(s45, s45.a(1), s45.b(6)), Relation::Incomparable);
  EXPECT_EQ(relation(s45, s45.a(1), s45.b(7)), Relation::Below);
  const Crown s33(3, 3);
  EXPECT_EQ(relation(s33, s33.a(5), s33.b(1)), Relation::Incomparable);
  EXPECT_THROW(relation(s33, s33.b(1), s33.b(2)), DomainError);
}

TEST(Crown, IncomparabilityMatchesIndexWalk) {
  for (int n = 3; n <= 7; ++n)
    for (int k = 0; k <= 6; ++k) {
      const Crown c(n, k);
      for (int i = 1; i <= n + k; ++i)
        for (int j = 1; j <= n + k; ++j)
          ASSERT_EQ(c.incomparable(i, j), oracle::incomparable(n, k, i, j))
              << n << "," << k << ": a" << i << " b" << j;
    }
}

TEST(Crown, CyclicBetween) {
  const Crown c(4, 5);
  EXPECT_TRUE(cyclic_between(c, {1, 3, 5}));
  EXPECT_TRUE(cyclic_between(c, {8, 1, 2}));
  EXPECT_FALSE(cyclic_between(c, {3, 2, 1}));
  EXPECT_THROW(cyclic_between(c, {1, 1, 2}), DomainError);
}

TEST(Crown, PairSizes) {
  const Crown c(4, 5);
  EXPECT_EQ(pair_size(c, c.a(7), c.b(1)), 4);
  EXPECT_EQ(pair_size(c, c.b(6), c.a(8)), 3);
  EXPECT_EQ(pair_size(c, CritPair{1, 1}), 1);
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= 4; ++k) {
      const Crown d(n, k);
      for (const auto& p : oracle::pairs(n, k)) {
        const int size = pair_size(d, CritPair{p.a, p.b});
        EXPECT_EQ(size, oracle::arc_size(n + k, p.a, p.b));
        EXPECT_GE(size, 1);
        EXPECT_LE(size, k + 1);
      }
    }
}

TEST(Crown, PairRelations) {
  const Crown s45(4, 5);
  EXPECT_EQ(pair_relation(s45, {8, 2}, {7, 3}), PairRelation::FirstInSecond);
  EXPECT_TRUE(contained_in(s45, {8, 2}, {7, 3}));
  EXPECT_EQ(pair_relation(s45, {7, 3}, {8, 2}), PairRelation::SecondInFirst);
  const Crown s43(4, 3);
  EXPECT_EQ(pair_relation(s43, {1, 1}, {4, 4}), PairRelation::Disjoint);
  EXPECT_EQ(pair_relation(s43, {1, 3}, {3, 5}), PairRelation::Overlap);
  EXPECT_TRUE(arcs_overlap(s43, {1, 3}, {3, 5}));
  EXPECT_EQ(pair_relation(s43, {1, 3}, {1, 3}), PairRelation::Equal);
}

TEST(Crown, ContainmentMatchesPointSets) {
  for (int n = 3; n <= 5; ++n)
    for (int k = 0; k <= 4; ++k) {
      const Crown c(n, k);
      const int m = n + k;
      for (const auto& p : oracle::pairs(n, k))
        for (const auto& q : oracle::pairs(n, k)) {
          const auto pp = oracle::arc_points(m, p.a, p.b);
          const auto qq = oracle::arc_points(m, q.a, q.b);
          // Containment as ordered sub-walk: q's walk passes a then b in order.
          bool inside = false;
          for (std::size_t s = 0; s < qq.size() && !inside; ++s)
            if (qq[s] == p.a)
              for (std::size_t t = s; t < qq.size(); ++t)
                if (qq[t] == p.b) inside = true;
          EXPECT_EQ(contained_in(c, {p.a, p.b}, {q.a, q.b}), inside);
        }
    }
}

TEST(Crown, MakePairNormalizes) {
  const Crown c(3, 3);
  EXPECT_EQ(make_pair(c, 7, 8), (CritPair{1, 2}));
  EXPECT_THROW(make_pair(c, 1, 5), DomainError);
}

TEST(Automorphism, Examples) {
  const Crown c(3, 1);
  EXPECT_EQ(Automorphism::tau(1)(c, CritPair{1, 2}), (CritPair{2, 3}));
  EXPECT_EQ(Automorphism::phi()(c, CritPair{1, 2}), (CritPair{3, 3}));
}

TEST(Automorphism, PreserveOrderAndPhiIsInvolution) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= 5; ++k) {
      const Crown c(n, k);
      const auto phi = Automorphism::phi();
      for (int i = 1; i <= n + k; ++i)
        for (int j = 1; j <= n + k; ++j) {
          const bool inc = oracle::incomparable(n, k, i, j);
          const Element ai = phi(c, c.a(i));
          const Element bj = phi(c, c.b(j));
          EXPECT_EQ(ai.role, Role::Min);
          EXPECT_EQ(oracle::incomparable(n, k, ai.index, bj.index), inc);
          EXPECT_EQ(phi(c, ai), c.a(i));
          for (int shift : {1, 2, n + k - 1}) {
            const auto t = Automorphism::tau(shift);
            EXPECT_EQ(oracle::incomparable(n, k, t(c, c.a(i)).index, t(c, c.b(j)).index), inc);
          }
        }
    }
}
