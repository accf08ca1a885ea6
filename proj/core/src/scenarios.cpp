#include "valdim/scenarios.hpp"

#include <algorithm>

#include "valdim/errors.hpp"

namespace valdim {

namespace {

SpecExpr f_base() { return SpecExpr::base("F", {"f1", "f2", "f3", "f4"}); }
SpecExpr m_base() { return SpecExpr::base("M", {"m1", "m2", "m3"}); }
SpecExpr b_base() { return SpecExpr::base("B", {"b1", "b2", "b3"}); }

std::vector<std::pair<std::string, SpecExpr>> fossowamba_entries() {
  return {
      {"V1", f_base()},
      {"V2", m_base()},
      {"V3", b_base()},
      {"V4", SpecExpr::union_as_sets({m_base(), b_base()})},
      {"V5", SpecExpr::atoms({f_base(), m_base(), SpecExpr::base("f1", {"f1"}),
                              SpecExpr::base("b2", {"b2"})})},
      {"V6", SpecExpr::product({m_base(), m_base(), m_base()})},
      {"V7", SpecExpr::power(f_base())},
  };
}

}  // namespace

LrvRef fossowamba_lrv() { return make_lrv(fossowamba_entries()); }

VariantStates fossowamba_variants() {
  auto entries = fossowamba_entries();
  entries.emplace_back("V6_1", m_base());
  entries.emplace_back("V6_2", m_base());
  entries.emplace_back("V6_3", m_base());
  LrvRef lrv = make_lrv(entries);

  InnerState tuple_state = make_state(
      lrv, {{"V2", find_element(*lrv, "V2", "m1")},
            {"V5", find_element(*lrv, "V5", "M")},
            {"V6", find_element(*lrv, "V6", "(m1,m2,m3)")}});
  InnerState split_state = make_state(
      lrv, {{"V2", find_element(*lrv, "V2", "m1")},
            {"V5", find_element(*lrv, "V5", "M")},
            {"V6_1", find_element(*lrv, "V6_1", "m1")},
            {"V6_2", find_element(*lrv, "V6_2", "m2")},
            {"V6_3", find_element(*lrv, "V6_3", "m3")}});
  return VariantStates{std::move(lrv), std::move(tuple_state), std::move(split_state)};
}

const char* bet_name(BetId id) {
  switch (id) {
    case BetId::Pi1a:
      return "pi1a";
    case BetId::Pi1b:
      return "pi1b";
    case BetId::Pi2a:
      return "pi2a";
    case BetId::Pi2b:
      return "pi2b";
  }
  return "?";
}

EllsbergScenario ellsberg_scenario() {
  LrvRef lrv = make_lrv({
      {"Red", SpecExpr::base("Red", {"known", "assessed"}, {{"known", "assessed"}})},
      {"BlackYellow",
       SpecExpr::base("BlackYellow", {"Black", "Yellow", "BlackYellow"},
                      {{"BlackYellow", "Black"}, {"BlackYellow", "Yellow"}})},
  });
  InnerState k_hi = make_state(lrv, {{"Red", find_element(*lrv, "Red", "assessed")}});
  InnerState k_ai = make_state(lrv, {{"Red", find_element(*lrv, "Red", "known")},
                                     {"BlackYellow", find_element(*lrv, "BlackYellow", "Black")}});
  std::vector<Bet> bets = {
      {BetId::Pi1a, {"Red"}, 100},
      {BetId::Pi1b, {"Black"}, 100},
      {BetId::Pi2a, {"Red", "Yellow"}, 100},
      {BetId::Pi2b, {"Black", "Yellow"}, 100},
  };
  return EllsbergScenario{std::move(lrv), std::move(k_hi), std::move(k_ai), std::move(bets),
                          Urn{}};
}

bool PreferenceProfile::holds(BetId a, BetId b) const {
  if (a == b) return true;
  return std::find(weakly_below.begin(), weakly_below.end(), std::make_pair(a, b)) !=
         weakly_below.end();
}

bool PreferenceProfile::determined(BetId a, BetId b) const {
  return holds(a, b) || holds(b, a);
}

PreferenceProfile profile_from_ranking(const std::vector<BetId>& worst_to_best) {
  PreferenceProfile p;
  for (std::size_t i = 0; i < worst_to_best.size(); ++i) {
    for (std::size_t j = i + 1; j < worst_to_best.size(); ++j) {
      p.weakly_below.emplace_back(worst_to_best[i], worst_to_best[j]);
    }
  }
  return p;
}

SureThingResult sure_thing_check(const PreferenceProfile& p) {
  if (!p.determined(BetId::Pi1a, BetId::Pi1b)) {
    throw IncompleteProfile("the pair pi1a/pi1b is undetermined");
  }
  if (!p.determined(BetId::Pi2a, BetId::Pi2b)) {
    throw IncompleteProfile("the pair pi2a/pi2b is undetermined");
  }
  SureThingResult r;
  r.pair1_below = p.holds(BetId::Pi1a, BetId::Pi1b);
  r.pair2_below = p.holds(BetId::Pi2a, BetId::Pi2b);
  r.satisfied = r.pair1_below == r.pair2_below;
  if (!r.satisfied) {
    if (r.pair1_below) {
      r.detail = "pi1a ranks below pi1b but pi2a does not rank below pi2b";
    } else {
      r.detail = "pi2a ranks below pi2b but pi1a does not rank below pi1b";
    }
  }
  return r;
}

namespace {

WignerState wigner_scaffold(LrvRef lrv, WignerPhase phase, std::optional<int> bit,
                            InnerState k_ai, InnerState k_hi) {
  WignerState s{phase, bit, std::move(lrv), std::move(k_ai), std::move(k_hi)};
  return s;
}

void require_phase(const WignerState& s, WignerPhase expected, const char* step) {
  if (s.phase != expected) {
    throw PhaseError(std::string(step) + " applied out of phase order");
  }
}

}  // namespace

WignerState wigner_init() {
  LrvRef lrv = make_lrv({
      {"BD", SpecExpr::base("BD", {"F0", "F1", "F01"}, {{"F01", "F0"}, {"F01", "F1"}})},
      {"AI", SpecExpr::base("AI", {"AI_untrained", "AI_trained", "AI_out0", "AI_out1"},
                            {{"AI_untrained", "AI_trained"},
                             {"AI_trained", "AI_out0"},
                             {"AI_trained", "AI_out1"}})},
      {"Obs", SpecExpr::base("Obs", {"out0", "out1"})},
  });
  InnerState k_ai = make_state(lrv, {});
  InnerState k_hi = make_state(lrv, {{"AI", find_element(*lrv, "AI", "AI_untrained")}});
  return wigner_scaffold(std::move(lrv), WignerPhase::Initial, std::nullopt, std::move(k_ai),
                         std::move(k_hi));
}

WignerState wigner_train(const WignerState& s) {
  require_phase(s, WignerPhase::Initial, "train");
  InnerState k_ai = make_state(s.lrv, {{"BD", find_element(*s.lrv, "BD", "F01")}});
  return wigner_scaffold(s.lrv, WignerPhase::Trained, std::nullopt, std::move(k_ai), s.k_hi);
}

WignerState wigner_observe(const WignerState& s, int bit) {
  require_phase(s, WignerPhase::Trained, "observe");
  if (bit != 0 && bit != 1) throw Error("outcome bit must be 0 or 1");
  const std::string grade = bit == 0 ? "F0" : "F1";
  const std::string outcome = bit == 0 ? "out0" : "out1";
  InnerState k_ai = make_state(s.lrv, {{"BD", find_element(*s.lrv, "BD", grade)},
                                       {"Obs", find_element(*s.lrv, "Obs", outcome)}});
  return wigner_scaffold(s.lrv, WignerPhase::Observed, bit, std::move(k_ai), s.k_hi);
}

WignerState wigner_hi_update(const WignerState& s) {
  require_phase(s, WignerPhase::Observed, "hi_update");
  InnerState learned = make_state(s.lrv, {{"AI", find_element(*s.lrv, "AI", "AI_trained")}});
  ComposeResult updated = compose(s.k_hi, learned);
  // The untrained grade sits below the trained grade, so the join exists.
  return wigner_scaffold(s.lrv, WignerPhase::HiUpdated, s.observed_bit, s.k_ai,
                         std::move(*updated.state));
}

std::vector<Transition> wigner_transitions(const WignerState& s) {
  return {
      make_transition(s.lrv, "initial", "trained", {"BD"}),
      make_transition(s.lrv, "trained", "observed", {"BD", "Obs"}),
      make_transition(s.lrv, "observed", "hi_updated", {"AI"}),
  };
}

bool wigner_incompatibility(const WignerState& s) {
  if (s.phase != WignerPhase::HiUpdated) {
    throw PhaseError("incompatibility is read off after the final phase");
  }
  const std::string outcome = *s.observed_bit == 0 ? "out0" : "out1";
  return detect_incompatibility("Obs", find_element(*s.lrv, "Obs", outcome), s.k_ai, s.k_hi);
}

int xor_eval(int f, int o) {
  if ((f != 0 && f != 1) || (o != 0 && o != 1)) throw Error("bits must be 0 or 1");
  return f ^ o;
}

}  // namespace valdim
