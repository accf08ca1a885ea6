#include "valdim/downset.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "valdim/errors.hpp"

namespace valdim {
namespace {

Poset chain3() {
  return Poset::build({elem("a"), elem("b"), elem("c")},
                      {{elem("a"), elem("b")}, {elem("b"), elem("c")}});
}

Poset diamond() {
  return Poset::build({elem("bot"), elem("l"), elem("r"), elem("top")},
                      {{elem("bot"), elem("l")},
                       {elem("bot"), elem("r")},
                       {elem("l"), elem("top")},
                       {elem("r"), elem("top")}});
}

Poset butterfly() {
  return Poset::build({elem("a"), elem("b"), elem("x"), elem("y")},
                      {{elem("a"), elem("x")},
                       {elem("a"), elem("y")},
                       {elem("b"), elem("x")},
                       {elem("b"), elem("y")}});
}

TEST(IotaTest, ChainImagesAreNestedSets) {
  const IotaResult r = iota(chain3());
  EXPECT_TRUE(r.injective);
  ASSERT_EQ(r.image.size(), 3u);
  EXPECT_EQ(r.map.at(elem("a")).label, "{}");
  EXPECT_EQ(r.map.at(elem("b")).label, "{a}");
  EXPECT_EQ(r.map.at(elem("c")).label, "{a,b}");
  EXPECT_TRUE(r.image.leq(elem("{}"), elem("{a,b}")));
  EXPECT_TRUE(r.image.is_total());
}

TEST(IotaTest, MinimalElementsCollapse) {
  const Poset pair = Poset::build({elem("a"), elem("b")}, {});
  const IotaResult r = iota(pair);
  EXPECT_FALSE(r.injective);
  EXPECT_EQ(r.image.size(), 1u);
  EXPECT_EQ(r.map.at(elem("a")), r.map.at(elem("b")));
}

TEST(IotaTest, DiamondCollapsesTheTwoAtoms) {
  const IotaResult r = iota(diamond());
  EXPECT_FALSE(r.injective);
  EXPECT_EQ(r.image.size(), 3u);
  EXPECT_EQ(r.map.at(elem("l")), r.map.at(elem("r")));
  EXPECT_NE(r.map.at(elem("bot")), r.map.at(elem("top")));
}

TEST(IotaStrictTest, HoldsOnAssortedShapes) {
  EXPECT_TRUE(iota_preserves_strict(chain3()));
  EXPECT_TRUE(iota_preserves_strict(diamond()));
  EXPECT_TRUE(iota_preserves_strict(butterfly()));
  EXPECT_TRUE(iota_preserves_strict(Poset::build({}, {})));
}

TEST(IotaJoinHomTest, TotalOrdersTurnJoinsIntoUnions) {
  EXPECT_TRUE(iota_is_join_hom(chain3()));
  EXPECT_TRUE(iota_is_join_hom(Poset::build({elem("a")}, {})));
}

TEST(IotaJoinHomTest, IncomparableJoinBreaksTheUnion) {
  // iota(top) gains {l, r} that neither side's image carries.
  EXPECT_FALSE(iota_is_join_hom(diamond()));
}

TEST(IotaJoinHomTest, RequiresAllJoins) {
  EXPECT_THROW(iota_is_join_hom(butterfly()), NotAJoinSemilattice);
}

TEST(InjectiveHomTest, TotalOrderAdmitsOne) {
  EXPECT_TRUE(has_injective_join_hom(chain3()));
}

TEST(InjectiveHomTest, DiamondAdmitsNone) {
  // Only three distinct strict down-sets exist for four elements.
  EXPECT_FALSE(has_injective_join_hom(diamond()));
}

TEST(InjectiveHomTest, GuardsItsPreconditions) {
  EXPECT_THROW(has_injective_join_hom(butterfly()), NotAJoinSemilattice);
  const Poset five = Poset::build(
      {elem("a"), elem("b"), elem("c"), elem("d"), elem("e")},
      {{elem("a"), elem("b")}, {elem("b"), elem("c")}, {elem("c"), elem("d")},
       {elem("d"), elem("e")}});
  EXPECT_THROW(has_injective_join_hom(five), SizeExceeded);
}

// Labelled poset counts for n = 1..4; the n = 5 value 4231 is exercised by
// the acceptance suite.
TEST(EnumerationTest, CountsMatchTheKnownSequence) {
  EXPECT_EQ(count_posets(1, false), 1u);
  EXPECT_EQ(count_posets(2, false), 3u);
  EXPECT_EQ(count_posets(3, false), 19u);
  EXPECT_EQ(count_posets(4, false), 219u);
}

// Join-closed counts for n <= 3, derivable by hand: every pair needs a join,
// so a maximum element exists. n = 2: the two chains. n = 3: six chains plus
// three V shapes (two incomparable elements under a chosen top).
TEST(EnumerationTest, JoinClosedCountsMatchHandDerivation) {
  EXPECT_EQ(count_posets(1, true), 1u);
  EXPECT_EQ(count_posets(2, true), 2u);
  EXPECT_EQ(count_posets(3, true), 9u);
}

TEST(EnumerationTest, VisitsDistinctPosetsWithFixedLabels) {
  std::set<std::vector<std::pair<ElementId, ElementId>>> seen;
  enumerate_posets(3, false, [&](const Poset& p) {
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p.at(0), elem("a"));
    EXPECT_EQ(p.at(2), elem("c"));
    std::vector<std::pair<ElementId, ElementId>> fingerprint;
    for (const ElementId& x : p.elements()) {
      for (const ElementId& y : p.elements()) {
        if (p.leq(x, y)) fingerprint.emplace_back(x, y);
      }
    }
    seen.insert(fingerprint);
  });
  EXPECT_EQ(seen.size(), 19u);
}

TEST(EnumerationTest, JoinFilterKeepsOnlySemilattices) {
  std::size_t visited = 0;
  enumerate_posets(4, true, [&](const Poset& p) {
    ++visited;
    EXPECT_TRUE(p.is_join_semilattice());
  });
  EXPECT_EQ(visited, count_posets(4, true));
}

TEST(EnumerationTest, RefusesMoreThanFiveElements) {
  EXPECT_THROW(enumerate_posets(6, false, [](const Poset&) {}), SizeExceeded);
}

}  // namespace
}  // namespace valdim
