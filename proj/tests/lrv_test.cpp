#include "valdim/lrv.hpp"

#include <gtest/gtest.h>

#include "valdim/errors.hpp"

namespace valdim {
namespace {

LrvRef two_dims() {
  return make_lrv({{"A", SpecExpr::base("A", {"lo", "hi"}, {{"lo", "hi"}})},
                   {"B", SpecExpr::base("B", {"x", "y"})}});
}

TEST(MakeLrvTest, KeepsDeclarationOrder) {
  const LrvRef fam = make_lrv({{"Z", SpecExpr::base("Z", {"z"})},
                               {"A", SpecExpr::base("A", {"a"})}});
  EXPECT_EQ(fam->index(), (std::vector<std::string>{"Z", "A"}));
  EXPECT_TRUE(fam->has("Z"));
  EXPECT_FALSE(fam->has("Q"));
}

TEST(MakeLrvTest, RejectsDuplicateIndex) {
  EXPECT_THROW(make_lrv({{"A", SpecExpr::base("A", {"a"})},
                         {"A", SpecExpr::base("A", {"b"})}}),
               DuplicateIndex);
}

TEST(MakeLrvTest, TagsEveryCarrierWithItsIndex) {
  const LrvRef fam = two_dims();
  const Poset& a = fam->dimension("A").poset;
  ASSERT_EQ(a.size(), 2u);
  for (const ElementId& e : a.elements()) {
    ASSERT_FALSE(e.context.empty());
    EXPECT_EQ(e.context.front(), "A");
  }
  EXPECT_TRUE(a.leq(ElementId{"lo", {"A"}}, ElementId{"hi", {"A"}}));
}

TEST(MakeLrvTest, SameSpecDifferentIndexStaysDisjoint) {
  const SpecExpr m = SpecExpr::base("M", {"m1", "m2"});
  const LrvRef fam = make_lrv({{"L", m}, {"R", m}});
  EXPECT_TRUE(fam->dimension("L").poset.contains(ElementId{"m1", {"L"}}));
  EXPECT_FALSE(fam->dimension("L").poset.contains(ElementId{"m1", {"R"}}));
}

TEST(MakeLrvTest, UnknownIndexThrows) {
  EXPECT_THROW(two_dims()->dimension("Q"), UnknownIndex);
}

TEST(FindElementTest, MatchesUniqueLabel) {
  const LrvRef fam = two_dims();
  const ElementId lo = find_element(*fam, "A", "lo");
  EXPECT_EQ(lo.label, "lo");
  EXPECT_EQ(lo.context, (std::vector<std::string>{"A"}));
}

TEST(FindElementTest, MissingLabelThrows) {
  EXPECT_THROW(find_element(*two_dims(), "A", "zz"), UnknownElement);
}

TEST(FindElementTest, AmbiguousLabelThrows) {
  const SpecExpr m = SpecExpr::base("M", {"m1"});
  const LrvRef fam = make_lrv({{"D", SpecExpr::disjoint_union({m, m})}});
  EXPECT_THROW(find_element(*fam, "D", "m1"), Error);
}

TEST(ProductHandleTest, SizeMultipliesCarriers) {
  const ProductHandle h = rho_J(two_dims(), {"A", "B"});
  EXPECT_EQ(h.arity(), 2u);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(h.indices(), (std::vector<std::string>{"A", "B"}));
}

TEST(ProductHandleTest, ContainsChecksEachComponent) {
  const LrvRef fam = two_dims();
  const ProductHandle h = rho_J(fam, {"A", "B"});
  const ElementId lo = find_element(*fam, "A", "lo");
  const ElementId x = find_element(*fam, "B", "x");
  EXPECT_TRUE(h.contains({lo, x}));
  EXPECT_FALSE(h.contains({x, lo}));  // components out of index order
  EXPECT_FALSE(h.contains({lo}));     // wrong arity
}

TEST(ProductHandleTest, ProjectReturnsTheNamedComponent) {
  const LrvRef fam = two_dims();
  const ProductHandle h = rho_J(fam, {"A", "B"});
  const ElementId lo = find_element(*fam, "A", "lo");
  const ElementId x = find_element(*fam, "B", "x");
  EXPECT_EQ(h.project({lo, x}, "B"), x);
  EXPECT_THROW(h.project({lo, x}, "Q"), UnknownIndex);
  EXPECT_THROW(h.project({x, lo}, "A"), UnknownElement);
}

TEST(ProductHandleTest, DeduplicatesAndSortsRequestedIndices) {
  const ProductHandle h = rho_J(two_dims(), {"B", "A", "B"});
  EXPECT_EQ(h.indices(), (std::vector<std::string>{"A", "B"}));
}

TEST(RhoJTest, ValidatesTheIndexSet) {
  EXPECT_THROW(rho_J(two_dims(), {}), Error);
  EXPECT_THROW(rho_J(two_dims(), {"A", "Q"}), UnknownIndex);
}

TEST(ProductHandleTest, SizeOverflowThrows) {
  std::vector<std::string> labels;
  for (int i = 0; i < 100; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<std::string, SpecExpr>> entries;
  std::vector<std::string> wide;
  for (int d = 0; d < 10; ++d) {
    const std::string id = "D" + std::to_string(d);
    entries.emplace_back(id, SpecExpr::base(id, labels));
    wide.push_back(id);
  }
  const ProductHandle h = rho_J(make_lrv(entries), wide);
  EXPECT_THROW(h.size(), SizeExceeded);  // 100^10 exceeds 64 bits
}

}  // namespace
}  // namespace valdim
