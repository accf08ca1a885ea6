#include "valdim/inner_state.hpp"

#include <gtest/gtest.h>

#include "valdim/errors.hpp"

namespace valdim {
namespace {

// A: two-grade chain, B: two-element antichain, P: subsets of {p, q}.
class InnerStateTest : public ::testing::Test {
 protected:
  void SetUp() override {
    fam_ = make_lrv({{"A", SpecExpr::base("A", {"lo", "hi"}, {{"lo", "hi"}})},
                     {"B", SpecExpr::base("B", {"x", "y"})},
                     {"P", SpecExpr::power(SpecExpr::base("S", {"p", "q"}))}});
    lo_ = find_element(*fam_, "A", "lo");
    hi_ = find_element(*fam_, "A", "hi");
    x_ = find_element(*fam_, "B", "x");
    y_ = find_element(*fam_, "B", "y");
  }

  InnerState state(const std::map<std::string, ElementId>& a) const {
    return make_state(fam_, a);
  }

  LrvRef fam_;
  ElementId lo_, hi_, x_, y_;
};

TEST_F(InnerStateTest, EmptyAssignmentIsValid) {
  const InnerState k = state({});
  EXPECT_EQ(k.arity(), 0u);
  EXPECT_TRUE(k.domain().empty());
  EXPECT_TRUE(k.codomain().empty());
}

TEST_F(InnerStateTest, RejectsUnknownIndex) {
  EXPECT_THROW(state({{"Q", lo_}}), UnknownIndex);
}

TEST_F(InnerStateTest, RejectsValueFromAnotherDimension) {
  EXPECT_THROW(state({{"B", lo_}}), ValueNotInDimension);
}

TEST_F(InnerStateTest, ProjectGivesComponentsBack) {
  const InnerState k = state({{"A", lo_}, {"B", x_}});
  EXPECT_EQ(k.project("A"), lo_);
  EXPECT_EQ(k.domain(), (std::vector<std::string>{"A", "B"}));
  EXPECT_TRUE(k.has("B"));
  EXPECT_FALSE(k.has("P"));
  EXPECT_THROW(k.project("P"), NotInDomain);
  EXPECT_THROW(k.project("Q"), UnknownIndex);
}

TEST_F(InnerStateTest, CompareDistinguishesAllFourOutcomes) {
  const InnerState empty = state({});
  const InnerState a_lo = state({{"A", lo_}});
  const InnerState a_hi = state({{"A", hi_}});
  const InnerState b_x = state({{"B", x_}});
  EXPECT_EQ(compare(a_lo, a_lo), CompareResult::Equal);
  EXPECT_EQ(compare(a_lo, a_hi), CompareResult::LessEq);
  EXPECT_EQ(compare(a_hi, a_lo), CompareResult::GreaterEq);
  EXPECT_EQ(compare(a_lo, b_x), CompareResult::Incomparable);
  // Domain extension: the empty state sits below everything.
  EXPECT_EQ(compare(empty, a_lo), CompareResult::LessEq);
  EXPECT_EQ(compare(a_lo, empty), CompareResult::GreaterEq);
  EXPECT_EQ(compare(empty, empty), CompareResult::Equal);
}

TEST_F(InnerStateTest, CompareNeedsDominanceOnSharedDimensions) {
  const InnerState small = state({{"A", hi_}});
  const InnerState wide = state({{"A", lo_}, {"B", x_}});
  // Domain grows but the A component shrinks: neither direction holds.
  EXPECT_EQ(compare(small, wide), CompareResult::Incomparable);
}

TEST_F(InnerStateTest, CompareRejectsForeignFamilies) {
  const LrvRef other = make_lrv({{"A", SpecExpr::base("A", {"lo", "hi"})}});
  const InnerState theirs = make_state(other, {{"A", find_element(*other, "A", "lo")}});
  EXPECT_THROW(compare(state({}), theirs), LrvMismatch);
}

TEST_F(InnerStateTest, ComposeMergesExclusiveDimensions) {
  const ComposeResult r = compose(state({{"A", lo_}}), state({{"B", x_}}));
  ASSERT_TRUE(r.feasible());
  EXPECT_TRUE(r.witness.empty());
  EXPECT_EQ(r.state->project("A"), lo_);
  EXPECT_EQ(r.state->project("B"), x_);
}

TEST_F(InnerStateTest, ComposeJoinsSharedDimensions) {
  const ElementId p = find_element(*fam_, "P", "{p}");
  const ElementId q = find_element(*fam_, "P", "{q}");
  const ComposeResult r = compose(state({{"P", p}}), state({{"P", q}}));
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.state->project("P"), find_element(*fam_, "P", "{p,q}"));
}

TEST_F(InnerStateTest, ComposeReportsTheLowestRefusingDimension) {
  const ElementId p = find_element(*fam_, "P", "{p}");
  const ElementId q = find_element(*fam_, "P", "{q}");
  const InnerState k1 = state({{"B", x_}, {"P", p}});
  const InnerState k2 = state({{"B", y_}, {"P", q}});
  const ComposeResult r = compose(k1, k2);
  ASSERT_FALSE(r.feasible());
  EXPECT_EQ(r.witness, "B");  // B sorts before P; the P pair would have joined
}

TEST_F(InnerStateTest, ComposeIsCommutativeAndIdempotent) {
  const InnerState k1 = state({{"A", lo_}, {"B", x_}});
  const InnerState k2 = state({{"A", hi_}});
  const ComposeResult ab = compose(k1, k2);
  const ComposeResult ba = compose(k2, k1);
  ASSERT_TRUE(ab.feasible());
  ASSERT_TRUE(ba.feasible());
  EXPECT_EQ(*ab.state, *ba.state);
  EXPECT_EQ(*compose(k1, k1).state, k1);
}

TEST_F(InnerStateTest, RestrictDropsOutsideComponents) {
  const InnerState k = state({{"A", lo_}, {"B", x_}});
  const InnerState just_a = restrict(k, {"A"});
  EXPECT_EQ(just_a.domain(), (std::vector<std::string>{"A"}));
  // Indices outside the domain are fine; outside the family they are not.
  EXPECT_EQ(restrict(k, {"P"}).arity(), 0u);
  EXPECT_THROW(restrict(k, {"Q"}), UnknownIndex);
}

TEST_F(InnerStateTest, IncompatibilityNeedsAllThreeConjuncts) {
  const InnerState k_a = state({{"A", lo_}, {"B", x_}});
  const InnerState k_h = state({{"A", hi_}});
  EXPECT_TRUE(detect_incompatibility("B", x_, k_a, k_h));
  // The value is not acknowledged by the first state.
  EXPECT_FALSE(detect_incompatibility("B", y_, k_a, k_h));
  // The states disagree where the second one can see.
  EXPECT_FALSE(detect_incompatibility("B", x_, state({{"A", hi_}, {"B", x_}}),
                                      state({{"A", lo_}})));
  // The second state accounts for the value itself.
  EXPECT_FALSE(detect_incompatibility("B", x_, k_a, state({{"A", hi_}, {"B", x_}})));
}

TEST_F(InnerStateTest, IncompatibilityValidatesItsArguments) {
  const InnerState k = state({});
  EXPECT_THROW(detect_incompatibility("Q", x_, k, k), UnknownIndex);
  EXPECT_THROW(detect_incompatibility("B", lo_, k, k), ValueNotInDimension);
}

TEST_F(InnerStateTest, PotentialValueListsNonEmptyDomainSubsets) {
  const InnerState k = state({{"A", lo_}, {"B", x_}});
  const auto subsets = potential_value(k);
  ASSERT_EQ(subsets.size(), 3u);  // 2^2 - 1
  EXPECT_EQ(subsets[0], (std::vector<std::string>{"A"}));
  EXPECT_EQ(subsets[1], (std::vector<std::string>{"B"}));
  EXPECT_EQ(subsets[2], (std::vector<std::string>{"A", "B"}));
  EXPECT_TRUE(potential_value(state({})).empty());
  EXPECT_THROW(potential_value(k, 1), SizeExceeded);
}

TEST_F(InnerStateTest, TransitionsCarrySortedValidatedLabels) {
  const Transition t = make_transition(fam_, "s0", "s1", {"P", "A"});
  EXPECT_EQ(t.from, "s0");
  EXPECT_EQ(t.label, (std::vector<std::string>{"A", "P"}));
  EXPECT_THROW(make_transition(fam_, "s0", "s1", {}), Error);
  EXPECT_THROW(make_transition(fam_, "s0", "s1", {"Q"}), UnknownIndex);
}

}  // namespace
}  // namespace valdim
