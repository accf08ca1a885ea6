#ifndef VALDIM_SCENARIOS_HPP
#define VALDIM_SCENARIOS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "valdim/inner_state.hpp"

namespace valdim {

// ---------------------------------------------------------------------------
// Catalogue scenario "fossowamba": seven dimensions built from three base
// sets of business observables (financial facts f1..f4, market signals
// m1..m3, behavioural signals b1..b3).
//
//   V1 <- F           V2 <- M           V3 <- B
//   V4 <- M u B       label-merging union, the two sets read as interrelated
//   V5 <- {F, M, f1, b2}  opaque atoms; the sets join the atoms as peers
//   V6 <- M x M x M   triples, only projectable as a whole
//   V7 <- P(F)        subsets of F by inclusion
// ---------------------------------------------------------------------------
LrvRef fossowamba_lrv();

// The catalogue family widened by three separate copies of M (V6_1..V6_3),
// so that assigning a triple to V6 and assigning the three components to the
// three copies can be compared as states of one family. The two readings are
// structurally distinct: their domains differ and neither dominates.
struct VariantStates {
  LrvRef lrv;
  InnerState tuple_state;  // V2: m1, V5: M, V6: (m1,m2,m3)
  InnerState split_state;  // V2: m1, V5: M, V6_1: m1, V6_2: m2, V6_3: m3
};
VariantStates fossowamba_variants();

// ---------------------------------------------------------------------------
// Urn scenario "ellsberg": 90 balls, 30 red, 60 black or yellow in unknown
// proportion; four bets paying 100.
//
// Dimension Red is a two-grade chain (known < assessed): the human agent can
// fully assess the red risk, the machine agent merely knows it. Dimension
// BlackYellow holds the non-empty subsets of {Black, Yellow} with finer
// knowledge higher (BlackYellow below Black and below Yellow). The human
// agent knows that dimension exists, which is recorded by its presence in
// the family, but holds no element of it; the machine agent holds the fine
// element Black there. That makes the fine element incompatible: the machine
// state is within the human state everywhere the human can see, yet
// acknowledges value the human state cannot.
// ---------------------------------------------------------------------------
enum class BetId { Pi1a, Pi1b, Pi2a, Pi2b };

const char* bet_name(BetId id);

struct Bet {
  BetId id;
  std::set<std::string> winning;  // colour names the bet pays on
  unsigned payoff = 100;
};

struct Urn {
  unsigned red = 30;
  unsigned black_or_yellow = 60;
  unsigned total = 90;
};

struct EllsbergScenario {
  LrvRef lrv;
  InnerState k_hi;  // Red: assessed
  InnerState k_ai;  // Red: known, BlackYellow: Black
  std::vector<Bet> bets;
  Urn urn;
};

EllsbergScenario ellsberg_scenario();

// Weak preference statements over the four bets. The listed assertions are
// read as the complete relation on the pairs they touch; the reflexive
// closure is implicit.
struct PreferenceProfile {
  std::vector<std::pair<BetId, BetId>> weakly_below;  // (a, b) asserts a below-or-equal b

  bool holds(BetId a, BetId b) const;
  bool determined(BetId a, BetId b) const;  // some direction of the pair asserted
};

// Profile induced by a strict ranking, listed from worst to best.
PreferenceProfile profile_from_ranking(const std::vector<BetId>& worst_to_best);

// Consistency of the two bet pairs: ranking the purely-risky bet below its
// rival in the first pair must coincide with ranking the risky-side bet
// below its rival in the second, since the two pairs differ only by a
// common yellow payoff. The classic preference pattern (first pair favours
// the risky bet, second pair favours the ambiguous one) breaks it.
struct SureThingResult {
  bool satisfied = false;
  bool pair1_below = false;  // Pi1a weakly below Pi1b
  bool pair2_below = false;  // Pi2a weakly below Pi2b
  std::string detail;        // empty when satisfied
};

// Throws IncompleteProfile when either pair is undetermined.
SureThingResult sure_thing_check(const PreferenceProfile& p);

// ---------------------------------------------------------------------------
// Two-observer scenario "wigner": a trained discriminator f with a binary
// outcome, an observing machine agent, and a human agent aware of the
// training but not of the outcome dimension.
//
// Dimension BD grades the discrimination itself: F0 and F1 are the resolved
// grades, F01 the unresolved grade below both. Dimension AI grades the
// human agent's acknowledgement of the machine: untrained < trained, and
// trained sits below each resolved acknowledgement out0/out1. Dimension Obs
// carries the observed outcome bit as a two-element antichain; it enters the
// machine state's domain only at observation and never enters the human
// state's domain.
// ---------------------------------------------------------------------------
enum class WignerPhase { Initial, Trained, Observed, HiUpdated };

struct WignerState {
  WignerPhase phase = WignerPhase::Initial;
  std::optional<int> observed_bit;
  LrvRef lrv;
  InnerState k_ai;
  InnerState k_hi;
};

WignerState wigner_init();
// Initial -> Trained: the machine settles on the unresolved grade F01.
WignerState wigner_train(const WignerState& s);
// Trained -> Observed: the outcome bit resolves BD and enters the domain.
WignerState wigner_observe(const WignerState& s, int bit);
// Observed -> HiUpdated: the human state joins in the trained grade; the
// outcome dimension stays outside its domain.
WignerState wigner_hi_update(const WignerState& s);

// Each step throws PhaseError when applied out of order.

// The three labelled moves of the scenario, from phase to phase.
std::vector<Transition> wigner_transitions(const WignerState& s);

// After the final phase: is the observed outcome value acknowledged by the
// machine state yet unaccounted for by the human state? Throws PhaseError
// before HiUpdated.
bool wigner_incompatibility(const WignerState& s);

// Alignment of discrimination and observation: 0 iff they agree.
int xor_eval(int f, int o);

}  // namespace valdim

#endif  // VALDIM_SCENARIOS_HPP
