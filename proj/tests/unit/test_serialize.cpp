#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "crownlab/battery.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/serialize.hpp"

using namespace crownlab;

TEST(Serialize, PairSetRoundTrip) {
  std::mt19937_64 rng(2);
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= 4; ++k) {
      const CritGraph g(Crown(n, k));
      for (int trial = 0; trial < 10; ++trial) {
        const PairSet s = random_independent_set(g, rng);
        const json j = json::parse(pairset_to_json(s).dump());
        EXPECT_EQ(pairset_from_json(j), s);
      }
    }
}

TEST(Serialize, PairSetAcceptsElementNames) {
  const json j = json::parse(R"({"n":3,"k":3,"pairs":[["a1","b1"],["a2","b4"],[5,5]]})");
  EXPECT_EQ(pairset_from_json(j), PairSet(Crown(3, 3), {{1, 1}, {2, 4}, {5, 5}}));
}

TEST(Serialize, PairSetRejectsBadInput) {
  EXPECT_THROW(pairset_from_json(json::parse(R"({"n":3,"k":3})")), DomainError);
  EXPECT_THROW(pairset_from_json(json::parse(R"({"n":3,"pairs":[]})")), DomainError);
  EXPECT_THROW(pairset_from_json(json::parse(R"({"n":3,"k":3,"pairs":[[1,5]]})")), DomainError);
  EXPECT_THROW(pairset_from_json(json::parse(R"({"n":3,"k":3,"pairs":[[1]]})")), DomainError);
  EXPECT_THROW(pairset_from_json(json::parse(R"({"n":3,"k":3,"pairs":[["b1","a1"]]})")),
               DomainError);
}

TEST(Serialize, ExtensionAndCycle) {
  const Crown c(3, 1);
  const PairSet t(c, {{1, 1}, {1, 2}, {2, 2}});
  const LinearExtension l = reversing_extension(t);
  EXPECT_EQ(extension_from_json(c, extension_to_json(l)), l);
  const AltCycle cyc{{{1, 1}, {2, 4}, {5, 5}}};
  const Crown c33(3, 3);
  EXPECT_EQ(cycle_from_json(c33, cycle_to_json(cyc)), cyc);
  EXPECT_EQ(cycle_from_json(c33, json::parse("[[1,1],[2,4],[5,5]]")), cyc);
}

TEST(Serialize, SigmaForms) {
  const Crown c(4, 5);
  const std::vector<int> sigma{8, 9, 7, 1, 6, 2};
  EXPECT_EQ(sigma_from_json(c, sigma_to_json(c, sigma)), sigma);
  EXPECT_EQ(sigma_from_json(c, json::parse(R"({"base":8,"pattern":"TLTLT"})")), sigma);
  EXPECT_EQ(sigma_from_json(c, json::parse(R"(["a8","a9","a7","a1","a6","a2"])")), sigma);
  EXPECT_THROW(sigma_from_json(c, json::parse(R"({"base":8})")), DomainError);
}

TEST(Serialize, Dimacs) {
  const CritGraph g(Crown(3, 0));
  EXPECT_EQ(to_dimacs(g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  const json side = dimacs_sidecar(g);
  EXPECT_EQ(side["vertices"], json::parse("[[1,1],[2,2],[3,3]]"));
}

TEST(Serialize, DimacsEdgesMatchGraph) {
  const CritGraph g(Crown(4, 3));
  std::istringstream in(to_dimacs(g));
  std::string tag, kind;
  int v = 0;
  std::size_t e = 0;
  in >> tag >> kind >> v >> e;
  EXPECT_EQ(v, g.size());
  EXPECT_EQ(e, g.edge_count());
  std::size_t lines = 0;
  int a = 0, b = 0;
  while (in >> tag >> a >> b) {
    EXPECT_TRUE(g.adjacent(a - 1, b - 1));
    ++lines;
  }
  EXPECT_EQ(lines, e);
}

TEST(Serialize, ReportShape) {
  SolveReport r;
  r.quantity = "maxinr";
  r.n = 4;
  r.k = 1;
  const json j = report_to_json(r);
  EXPECT_TRUE(j["value"].is_null());
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["quantity"], "maxinr");
}
