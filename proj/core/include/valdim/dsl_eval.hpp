#ifndef VALDIM_DSL_EVAL_HPP
#define VALDIM_DSL_EVAL_HPP

#include <map>
#include <string>

#include "valdim/dsl.hpp"
#include "valdim/inner_state.hpp"

namespace valdim {

// A document's declarations, evaluated: one family holding every declared
// dimension in declaration order, plus the declared states over it.
struct BuiltDocument {
  LrvRef lrv;
  std::map<std::string, InnerState> states;
};

// Evaluates declarations. Structural problems (unresolvable names, repeated
// declarations) throw UnknownName/DuplicateName; carrier and value problems
// (size caps, elements outside their dimension, ambiguous labels) throw the
// corresponding domain errors.
BuiltDocument build_document(const ScenarioDoc& doc, const EvalOptions& options = {});

// Runs the document's queries in order and returns their output, one result
// line (or block) per query. Deterministic for a given document.
std::string run_queries(const ScenarioDoc& doc, const BuiltDocument& built);

// Transcript of a built-in scenario ("fossowamba", "ellsberg", "wigner").
// Throws UnknownName for anything else.
std::string scenario_transcript(const std::string& name);

// Compact display forms used by query output and transcripts: states render
// as "{ Dim: label, ... }", elements by their label with any context inside
// the dimension prefixed dot-wise.
std::string display_element(const std::string& dim, const ElementId& e);
std::string display_state(const InnerState& k);
const char* compare_text(CompareResult r);

// Resolves a parsed value against a dimension of the family: a single name
// matches the unique carrier element with that label, a dotted path matches
// label plus context, sets and tuples match composite elements by their
// canonical label.
ElementId resolve_value(const Lrv& lrv, const std::string& dim, const ValueAst& value);

}  // namespace valdim

#endif  // VALDIM_DSL_EVAL_HPP
