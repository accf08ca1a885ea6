#ifndef VALDIM_DSL_HPP
#define VALDIM_DSL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace valdim {

// Document language for dimension families, states and queries. One
// statement per line by convention; '#' starts a comment. Grammar:
//
//   doc        := (dim_decl | state_decl | query)*
//   dim_decl   := "dim" NAME "=" expr
//   expr       := "base" "{" NAME ("," NAME)* "}" [order]
//              | "power" "(" expr ")"
//              | "product" "(" expr ("," expr)* ")"
//              | "disjoint" "(" expr ("," expr)* ")"
//              | "union" "(" expr ("," expr)* ")"
//              | "atoms" "(" NAME ("," NAME)* ")"
//              | NAME
//   order      := "order" "{" NAME "<" NAME ("," NAME "<" NAME)* "}"
//   state_decl := "state" NAME "=" "{" [entry ("," entry)*] "}"
//   entry      := NAME ":" value
//   value      := pathname
//              | "{" [value ("," value)*] "}"
//              | "(" value ("," value)* ")"
//   pathname   := NAME ("." NAME)*
//   query      := "compare" NAME NAME | "compose" NAME NAME
//              | "incompat" NAME "." NAME "@" value NAME
//              | "meta" NAME | "iota" NAME | "hasse" NAME | "run" NAME
//
// A NAME in expression position refers to an earlier dim declaration; in
// atoms position an undeclared NAME stands for a bare one-element atom.
// `run` names a built-in scenario. dim and state declarations share one
// namespace; every reference must point to a declaration above it.
//
// Parsing canonicalises set-like sequences (base elements, order pairs,
// atoms items, brace values, state entries) into sorted order, so
// serialize(parse(serialize(doc))) is byte-identical to serialize(doc).

struct ParseError {
  enum class Kind { Syntax, DuplicateName, UnknownName };
  Kind kind = Kind::Syntax;
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;

  std::string to_string() const;
};

struct ExprAst {
  enum class Kind { Base, Power, Product, Disjoint, Union, Atoms, Ref };
  Kind kind = Kind::Base;
  std::string name;  // Ref target; atom item name
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<ExprAst> children;

  friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

struct ValueAst {
  enum class Kind { Name, Set, Tuple };
  Kind kind = Kind::Name;
  std::vector<std::string> path;  // Name: dotted segments
  std::vector<ValueAst> items;    // Set (sorted) or Tuple (ordered)

  // Compact text; set members render in canonical element-label form.
  std::string text() const;

  friend bool operator==(const ValueAst&, const ValueAst&) = default;
};

struct DimDecl {
  std::string name;
  ExprAst expr;

  friend bool operator==(const DimDecl&, const DimDecl&) = default;
};

struct StateDecl {
  std::string name;
  std::vector<std::pair<std::string, ValueAst>> entries;  // sorted by dimension

  friend bool operator==(const StateDecl&, const StateDecl&) = default;
};

struct Query {
  enum class Kind { Compare, Compose, Incompat, Meta, Iota, Hasse, Run };
  Kind kind = Kind::Compare;
  std::string a;       // first state; state for meta; dim for iota/hasse; scenario for run
  std::string b;       // second state
  std::string dim;     // incompat dimension
  ValueAst value;      // incompat element

  friend bool operator==(const Query&, const Query&) = default;
};

// Statements bucketed by kind, each bucket in source order.
struct ScenarioDoc {
  std::vector<DimDecl> dims;
  std::vector<StateDecl> states;
  std::vector<Query> queries;

  friend bool operator==(const ScenarioDoc&, const ScenarioDoc&) = default;
};

struct ParseOutcome {
  std::optional<ScenarioDoc> doc;
  std::optional<ParseError> error;

  bool ok() const { return doc.has_value(); }
};

ParseOutcome parse(std::string_view text);

// Canonical form: dims, then states, then queries; one statement per line;
// single spaces between tokens; set-like sequences sorted.
std::string serialize(const ScenarioDoc& doc);

// Built-in scenario names accepted by `run`.
const std::vector<std::string>& builtin_scenarios();

}  // namespace valdim

#endif  // VALDIM_DSL_HPP
