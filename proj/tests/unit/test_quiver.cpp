#include "qrep/quiver.hpp"

#include "qrep/numeric.hpp"

#include <gtest/gtest.h>

using namespace qrep;

TEST(Quiver, RejectsUnknownEndpoints) {
  EXPECT_THROW(Quiver({"1"}, {{"a", "1", "2"}}), ValidationError);
}

TEST(Quiver, RejectsDuplicateNames) {
  EXPECT_THROW(Quiver({"1", "1"}, {}), ValidationError);
  EXPECT_THROW(Quiver({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}), ValidationError);
}

TEST(Quiver, LoopQuiverHasOneVertex) {
  Quiver q = Quiver::loop(2);
  EXPECT_EQ(q.vertex_count(), 1u);
  EXPECT_EQ(q.arrow_count(), 2u);
  EXPECT_TRUE(q.has_loops());
  EXPECT_FALSE(q.is_acyclic());
  EXPECT_EQ(q.loops_at("1").size(), 2u);
  EXPECT_THROW(Quiver::loop(0), ValidationError);
}

TEST(Quiver, KroneckerAndSubspaceShapes) {
  Quiver k = Quiver::kronecker(3);
  EXPECT_EQ(k.vertices(), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(k.arrows()[2].name, "a3");
  EXPECT_TRUE(k.is_acyclic());
  EXPECT_EQ(Quiver::kronecker(0).arrow_count(), 0u);

  Quiver r = Quiver::subspace(4);
  EXPECT_EQ(r.vertex_count(), 5u);
  EXPECT_EQ(r.arrows()[3].target, "5");
  EXPECT_EQ(r.out_degree("5"), 0u);
  EXPECT_EQ(Quiver::two_inclusions(), Quiver::subspace(2));
}

TEST(Quiver, CycleIsDetected) {
  Quiver q({"x", "y"}, {{"f", "x", "y"}, {"g", "y", "x"}});
  EXPECT_FALSE(q.is_acyclic());
  EXPECT_FALSE(q.has_loops());
}

TEST(Quiver, LookupErrorsNameTheMissingItem) {
  Quiver q = Quiver::kronecker(1);
  try {
    q.vertex_index("9");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("9"), std::string::npos);
  }
  EXPECT_THROW(q.arrow_index("b"), ValidationError);
}

TEST(Path, ValidatesJunctions) {
  Quiver q({"x", "y", "z"}, {{"f", "x", "y"}, {"g", "y", "z"}, {"h", "z", "x"}});
  Path p(q, {"f", "g", "h"});
  EXPECT_EQ(p.length(), 3u);
  EXPECT_TRUE(p.is_cycle());
  EXPECT_EQ(p.source(), "x");
  EXPECT_THROW(Path(q, {"f", "h"}), ValidationError);
}
