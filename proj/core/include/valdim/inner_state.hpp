#ifndef VALDIM_INNER_STATE_HPP
#define VALDIM_INNER_STATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "valdim/lrv.hpp"

namespace valdim {

class InnerState;

// Builds a partial assignment over `lrv`. Every key must be an index of the
// family (UnknownIndex) and every value an element of that dimension's
// carrier (ValueNotInDimension). The empty assignment is valid.
InnerState make_state(LrvRef lrv, const std::map<std::string, ElementId>& assignment);

// A partial assignment of one carrier element per touched dimension. The
// domain is the set of touched indices, the codomain the set of assigned
// elements. Immutable; operations return fresh states.
class InnerState {
 public:
  const LrvRef& lrv() const { return lrv_; }
  const std::map<std::string, ElementId>& assignment() const { return assign_; }

  std::vector<std::string> domain() const;
  std::vector<ElementId> codomain() const;
  bool has(const std::string& index) const { return assign_.count(index) != 0; }
  std::size_t arity() const { return assign_.size(); }

  // The assigned element along `index`. Composite elements come back whole;
  // nothing reaches inside a tuple or an atom. Throws UnknownIndex for an
  // index outside the family, NotInDomain for one outside the domain.
  ElementId project(const std::string& index) const;

  friend bool operator==(const InnerState& a, const InnerState& b) {
    return a.lrv_ == b.lrv_ && a.assign_ == b.assign_;
  }

 private:
  friend InnerState make_state(LrvRef, const std::map<std::string, ElementId>&);
  InnerState(LrvRef lrv, std::map<std::string, ElementId> assign);

  LrvRef lrv_;
  std::map<std::string, ElementId> assign_;
};

enum class CompareResult { Equal, LessEq, GreaterEq, Incomparable };

// Componentwise dominance with domain extension: k1 is below k2 iff k1's
// domain is contained in k2's and every shared component of k1 sits below
// k2's in its dimension. Equal requires identical assignments; dominance in
// both directions cannot happen otherwise. Throws LrvMismatch unless both
// states share one family.
CompareResult compare(const InnerState& k1, const InnerState& k2);

// Either the composed state or the first dimension that refused.
struct ComposeResult {
  std::optional<InnerState> state;
  std::string witness;  // lowest-sorted dimension with an absent join; empty when feasible

  bool feasible() const { return state.has_value(); }
};

// Dimensionwise join over the union of the domains: exclusive components are
// adopted, shared ones joined in their dimension. Infeasible as soon as a
// shared component pair has no join.
ComposeResult compose(const InnerState& k1, const InnerState& k2);

// Drops every component outside `indices`. The indices must belong to the
// family; they need not be in the domain.
InnerState restrict(const InnerState& k, const std::vector<std::string>& indices);

// True iff element `a` along dimension `index` is acknowledged by kA, kA is
// consistent with kH on every dimension kH can see, and yet kH does not
// acknowledge `a`. This is the signature of value visible to one agent that
// the other agent cannot account for.
bool detect_incompatibility(const std::string& index, const ElementId& a,
                            const InnerState& kA, const InnerState& kH);

// All non-empty subsets of the domain: the families of dimensions along
// which this state could acknowledge a transition. Deterministic order:
// ascending bitmask over the sorted domain. Throws SizeExceeded when the
// domain has more than `max_dims` dimensions.
std::vector<std::vector<std::string>> potential_value(const InnerState& k,
                                                      std::size_t max_dims = 16);

// A named move between two situations, labelled by the dimensions along
// which it carries value.
struct Transition {
  std::string from;
  std::string to;
  std::vector<std::string> label;  // sorted, non-empty

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Validates the label against the family: non-empty and within the index.
Transition make_transition(const LrvRef& lrv, std::string from, std::string to,
                           std::vector<std::string> label);

}  // namespace valdim

#endif  // VALDIM_INNER_STATE_HPP
