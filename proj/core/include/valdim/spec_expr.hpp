#ifndef VALDIM_SPEC_EXPR_HPP
#define VALDIM_SPEC_EXPR_HPP

#include <string>
#include <utility>
#include <vector>

#include "valdim/poset.hpp"

namespace valdim {

struct EvalOptions {
  std::size_t max_carrier = kDefaultMaxCarrier;
};

// Constructive description of a carrier: a named base set with an optional
// explicit order, or a combinator over sub-descriptions. Evaluation is pure;
// the same expression always yields the same poset.
//
//   Base          named finite set, antichain unless order pairs are given
//   Power         all subsets of the child's carrier, ordered by inclusion
//   Product       tuples over the children, ordered componentwise
//   DisjointUnion side-by-side copies; each part's elements gain the part
//                 position at the head of their context, no cross-part order
//   UnionAsSets   label-merging union; parts keep their contexts and must
//                 have pairwise disjoint label sets
//   Atoms         an antichain with one opaque atom per named part; whatever
//                 structure a part has is frozen and not projectable
struct SpecExpr {
  enum class Kind { Base, Power, Product, DisjointUnion, UnionAsSets, Atoms };

  Kind kind = Kind::Base;
  std::string name;  // Base name; also set when a document binds an expression to a name
  std::vector<std::string> elements;                         // Base only
  std::vector<std::pair<std::string, std::string>> order;    // Base only, a < b pairs
  std::vector<SpecExpr> children;                            // combinators only

  static SpecExpr base(std::string name, std::vector<std::string> elements,
                       std::vector<std::pair<std::string, std::string>> order = {});
  static SpecExpr power(SpecExpr child);
  static SpecExpr product(std::vector<SpecExpr> factors);
  static SpecExpr disjoint_union(std::vector<SpecExpr> parts);
  static SpecExpr union_as_sets(std::vector<SpecExpr> parts);
  static SpecExpr atoms(std::vector<SpecExpr> parts);
  // Shorthand: atoms over bare names, each becoming a one-element base.
  static SpecExpr atoms_named(const std::vector<std::string>& names);

  friend bool operator==(const SpecExpr&, const SpecExpr&) = default;
};

// Evaluates a description to its poset. Throws SizeExceeded when any
// intermediate or final carrier passes options.max_carrier, LabelCollision
// for overlapping UnionAsSets parts, UnknownElement for order pairs naming
// absent elements, CycleError for inconsistent order pairs.
Poset eval_spec(const SpecExpr& expr, const EvalOptions& options = {});

}  // namespace valdim

#endif  // VALDIM_SPEC_EXPR_HPP
