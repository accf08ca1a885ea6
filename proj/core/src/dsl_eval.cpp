#include "valdim/dsl_eval.hpp"

#include <algorithm>
#include <utility>

#include "valdim/downset.hpp"
#include "valdim/errors.hpp"
#include "valdim/meta.hpp"
#include "valdim/scenarios.hpp"

namespace valdim {

namespace {

// Substitutes declared names and turns the syntax tree into a description.
// Atom items that match a declared dimension freeze that dimension's
// description as the named part; other items become bare one-element bases.
SpecExpr resolve_expr(const ExprAst& e, const std::map<std::string, SpecExpr>& env) {
  switch (e.kind) {
    case ExprAst::Kind::Ref: {
      auto it = env.find(e.name);
      if (it == env.end()) {
        throw UnknownName("'" + e.name + "' is not a declared dimension");
      }
      SpecExpr copy = it->second;
      copy.name = e.name;
      return copy;
    }
    case ExprAst::Kind::Base:
      return SpecExpr::base(e.name, e.elements, e.order);
    case ExprAst::Kind::Atoms: {
      std::vector<SpecExpr> parts;
      parts.reserve(e.children.size());
      for (const ExprAst& c : e.children) {
        auto it = env.find(c.name);
        if (it != env.end()) {
          SpecExpr named = it->second;
          named.name = c.name;
          parts.push_back(std::move(named));
        } else {
          parts.push_back(SpecExpr::base(c.name, {c.name}));
        }
      }
      return SpecExpr::atoms(std::move(parts));
    }
    case ExprAst::Kind::Power:
      return SpecExpr::power(resolve_expr(e.children.at(0), env));
    case ExprAst::Kind::Product:
    case ExprAst::Kind::Disjoint:
    case ExprAst::Kind::Union: {
      std::vector<SpecExpr> parts;
      parts.reserve(e.children.size());
      for (const ExprAst& c : e.children) parts.push_back(resolve_expr(c, env));
      if (e.kind == ExprAst::Kind::Product) return SpecExpr::product(std::move(parts));
      if (e.kind == ExprAst::Kind::Disjoint) return SpecExpr::disjoint_union(std::move(parts));
      return SpecExpr::union_as_sets(std::move(parts));
    }
  }
  throw Error("unhandled expression kind");
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

std::string dim_line(const Lrv& lrv, const std::string& id) {
  const Poset& p = lrv.dimension(id).poset;
  const std::size_t covers = p.hasse().size();
  std::string out = "  " + id + ": " + std::to_string(p.size()) + " elements, " +
                    std::to_string(covers) + (covers == 1 ? " cover pair" : " cover pairs") +
                    ", total order: " + bool_text(p.is_total());
  out += '\n';
  return out;
}

std::string transcript_fossowamba() {
  const LrvRef fam = fossowamba_lrv();
  std::string out = "scenario: fossowamba\n";
  out += "dimensions:\n";
  for (const std::string& id : fam->index()) {
    out += "  " + id + ": " + std::to_string(fam->dimension(id).poset.size()) + " elements\n";
  }
  const VariantStates v = fossowamba_variants();
  out += "widened family adds V6_1, V6_2, V6_3 (3 elements each)\n";
  out += "tuple reading: " + display_state(v.tuple_state) + "\n";
  out += "split reading: " + display_state(v.split_state) + "\n";
  out += "compare tuple vs split: " +
         std::string(compare_text(compare(v.tuple_state, v.split_state))) + "\n";
  out += "projection of tuple reading at V6: " +
         display_element("V6", v.tuple_state.project("V6")) + "\n";
  return out;
}

std::string transcript_ellsberg() {
  const EllsbergScenario s = ellsberg_scenario();
  std::string out = "scenario: ellsberg\n";
  out += "urn: " + std::to_string(s.urn.total) + " balls, " + std::to_string(s.urn.red) +
         " red, " + std::to_string(s.urn.black_or_yellow) + " black or yellow\n";
  out += "bets, each paying " + std::to_string(s.bets.front().payoff) + ":\n";
  for (const Bet& bet : s.bets) {
    out += "  " + std::string(bet_name(bet.id)) + " on ";
    bool first = true;
    for (const std::string& colour : bet.winning) {
      if (!first) out += ", ";
      first = false;
      out += colour;
    }
    out += '\n';
  }
  out += "dimensions:\n";
  for (const std::string& id : s.lrv->index()) out += dim_line(*s.lrv, id);
  out += "states:\n";
  out += "  K_HI = " + display_state(s.k_hi) + "\n";
  out += "  k_AI = " + display_state(s.k_ai) + "\n";

  const ElementId black = find_element(*s.lrv, "BlackYellow", "Black");
  out += "machine value for K_HI along BlackYellow: " + display_element("BlackYellow", black) + "\n";
  out += "incompatibility detected: " +
         std::string(bool_text(detect_incompatibility("BlackYellow", black, s.k_ai, s.k_hi))) +
         "\n";
  const ComposeResult joined = compose(s.k_hi, s.k_ai);
  out += "compose(K_HI, k_AI) = " + display_state(*joined.state) + "\n";
  out += "incompatibility after composition: " +
         std::string(bool_text(detect_incompatibility("BlackYellow", black, s.k_ai, *joined.state))) +
         "\n";

  const PreferenceProfile classic{{{BetId::Pi1b, BetId::Pi1a}, {BetId::Pi2a, BetId::Pi2b}}};
  const SureThingResult check = sure_thing_check(classic);
  out += "classic pattern (pi1a over pi1b, pi2b over pi2a): ";
  out += check.satisfied ? "consistent" : "violated";
  out += '\n';
  if (!check.detail.empty()) out += "  " + check.detail + "\n";
  return out;
}

std::string transcript_wigner() {
  WignerState s = wigner_init();
  std::string out = "scenario: wigner\n";
  out += "dimensions:\n";
  for (const std::string& id : s.lrv->index()) out += dim_line(*s.lrv, id);
  out += "transitions:\n";
  for (const Transition& t : wigner_transitions(s)) {
    out += "  " + t.from + " -> " + t.to + " [";
    for (std::size_t i = 0; i < t.label.size(); ++i) {
      if (i > 0) out += ", ";
      out += t.label[i];
    }
    out += "]\n";
  }
  out += "phase: initial\n";
  out += "  k_AI = " + display_state(s.k_ai) + "\n";
  out += "  K_HI = " + display_state(s.k_hi) + "\n";

  const WignerState trained = wigner_train(s);
  out += "phase: trained\n";
  out += "  k_AI = " + display_state(trained.k_ai) + "\n";

  const WignerState observed = wigner_observe(trained, 0);
  out += "phase: observed (bit 0)\n";
  out += "  k_AI = " + display_state(observed.k_ai) + "\n";
  out += "  new in k_AI domain:";
  for (const std::string& id : observed.k_ai.domain()) {
    if (!trained.k_ai.has(id)) out += " " + id;
  }
  out += '\n';

  const WignerState updated = wigner_hi_update(observed);
  out += "phase: hi_updated\n";
  out += "  K_HI = " + display_state(updated.k_hi) + "\n";
  out += "  Obs in K_HI domain: " + std::string(bool_text(updated.k_hi.has("Obs"))) + "\n";
  out += "incompatibility detected after observation: " +
         std::string(bool_text(wigner_incompatibility(updated))) + "\n";
  return out;
}

}  // namespace

ElementId resolve_value(const Lrv& lrv, const std::string& dim, const ValueAst& value) {
  const Dimension& d = lrv.dimension(dim);
  if (value.kind == ValueAst::Kind::Name && value.path.size() > 1) {
    // Dotted path: the context inside the dimension, spelled out exactly.
    ElementId e;
    e.label = value.path.back();
    e.context.push_back(dim);
    e.context.insert(e.context.end(), value.path.begin(), value.path.end() - 1);
    if (!d.poset.contains(e)) {
      throw ValueNotInDimension("'" + value.text() + "' is not an element of dimension '" +
                                dim + "'");
    }
    return e;
  }
  const std::string label =
      value.kind == ValueAst::Kind::Name ? value.path.front() : value.text();
  return find_element(lrv, dim, label);
}

BuiltDocument build_document(const ScenarioDoc& doc, const EvalOptions& options) {
  std::map<std::string, SpecExpr> env;
  std::vector<std::pair<std::string, SpecExpr>> entries;
  for (const DimDecl& d : doc.dims) {
    if (env.count(d.name)) throw DuplicateName("dimension '" + d.name + "' declared twice");
    SpecExpr resolved = resolve_expr(d.expr, env);
    resolved.name = d.name;
    entries.emplace_back(d.name, resolved);
    env.emplace(d.name, std::move(resolved));
  }
  BuiltDocument built;
  built.lrv = make_lrv(entries, options);
  for (const StateDecl& s : doc.states) {
    if (built.states.count(s.name)) throw DuplicateName("state '" + s.name + "' declared twice");
    std::map<std::string, ElementId> assignment;
    for (const auto& [dim, val] : s.entries) {
      assignment.emplace(dim, resolve_value(*built.lrv, dim, val));
    }
    built.states.emplace(s.name, make_state(built.lrv, assignment));
  }
  return built;
}

std::string display_element(const std::string& dim, const ElementId& e) {
  std::string out;
  const std::size_t start = (!e.context.empty() && e.context.front() == dim) ? 1 : 0;
  for (std::size_t i = start; i < e.context.size(); ++i) {
    out += e.context[i];
    out += '.';
  }
  out += e.label;
  return out;
}

std::string display_state(const InnerState& k) {
  if (k.assignment().empty()) return "{ }";
  std::string out = "{ ";
  bool first = true;
  for (const auto& [dim, e] : k.assignment()) {
    if (!first) out += ", ";
    first = false;
    out += dim + ": " + display_element(dim, e);
  }
  out += " }";
  return out;
}

const char* compare_text(CompareResult r) {
  switch (r) {
    case CompareResult::Equal:
      return "equal";
    case CompareResult::LessEq:
      return "less-or-equal";
    case CompareResult::GreaterEq:
      return "greater-or-equal";
    case CompareResult::Incomparable:
      return "incomparable";
  }
  return "incomparable";
}

std::string run_queries(const ScenarioDoc& doc, const BuiltDocument& built) {
  std::string out;
  for (const Query& q : doc.queries) {
    switch (q.kind) {
      case Query::Kind::Compare: {
        const CompareResult r = compare(built.states.at(q.a), built.states.at(q.b));
        out += "compare " + q.a + " " + q.b + ": " + compare_text(r) + "\n";
        break;
      }
      case Query::Kind::Compose: {
        const ComposeResult r = compose(built.states.at(q.a), built.states.at(q.b));
        out += "compose " + q.a + " " + q.b + ": ";
        out += r.feasible() ? display_state(*r.state) : "infeasible at " + r.witness;
        out += '\n';
        break;
      }
      case Query::Kind::Incompat: {
        const ElementId a = resolve_value(*built.lrv, q.dim, q.value);
        const bool hit =
            detect_incompatibility(q.dim, a, built.states.at(q.a), built.states.at(q.b));
        out += "incompat " + q.a + "." + q.dim + " @ " + q.value.text() + " " + q.b +
               ": incompatible: " + bool_text(hit) + "\n";
        break;
      }
      case Query::Kind::Meta: {
        const MetaVerdict v = classify(built.states.at(q.a));
        out += "meta " + q.a + ": specified: " + bool_text(v.specified);
        if (v.specified) {
          out += std::string(", ambiguous: ") + bool_text(*v.ambiguous) +
                 ", consistent: " + bool_text(*v.consistent);
        }
        out += '\n';
        break;
      }
      case Query::Kind::Iota: {
        const Poset& p = built.lrv->dimension(q.a).poset;
        const IotaResult r = iota(p);
        const std::string hom =
            p.is_join_semilattice() ? bool_text(iota_is_join_hom(p)) : "n/a";
        out += "iota " + q.a + ": image " + std::to_string(r.image.size()) + " of " +
               std::to_string(p.size()) + ", injective: " + bool_text(r.injective) +
               ", strict-order-preserved: " + bool_text(iota_preserves_strict(p)) +
               ", join-homomorphism: " + hom + "\n";
        break;
      }
      case Query::Kind::Hasse: {
        const Poset& p = built.lrv->dimension(q.a).poset;
        auto covers = p.hasse();
        std::sort(covers.begin(), covers.end());
        out += "hasse " + q.a + ": " + std::to_string(covers.size()) +
               (covers.size() == 1 ? " cover pair\n" : " cover pairs\n");
        for (const auto& [lo, hi] : covers) {
          out += "  " + display_element(q.a, lo) + " < " + display_element(q.a, hi) + "\n";
        }
        break;
      }
      case Query::Kind::Run: {
        out += scenario_transcript(q.a);
        break;
      }
    }
  }
  return out;
}

std::string scenario_transcript(const std::string& name) {
  if (name == "fossowamba") return transcript_fossowamba();
  if (name == "ellsberg") return transcript_ellsberg();
  if (name == "wigner") return transcript_wigner();
  throw UnknownName("'" + name + "' is not a built-in scenario");
}

}  // namespace valdim
