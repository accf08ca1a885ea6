#ifndef VALDIM_POSET_HPP
#define VALDIM_POSET_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace valdim {

// Identifier of a carrier element. Two elements are the same iff both the
// label and the full context path agree; the context records provenance
// through disjoint unions and through the indexed family an element belongs
// to, so equal labels from different origins stay distinct.
struct ElementId {
  std::string label;
  std::vector<std::string> context;  // outermost first; empty for plain base elements

  // Dotted form "ctx1.ctx2.label"; just the label when the context is empty.
  std::string qualified() const;

  friend bool operator==(const ElementId&, const ElementId&) = default;
  friend std::strong_ordering operator<=>(const ElementId& a, const ElementId& b) {
    if (auto c = a.context <=> b.context; c != std::strong_ordering::equal) return c;
    return a.label <=> b.label;
  }
};

// Convenience constructor for a context-free element.
inline ElementId elem(std::string label) { return ElementId{std::move(label), {}}; }

// Canonical set-shaped element: label "{x,y}" over the members' sorted
// qualified names, empty context. All set-valued carriers use this format.
ElementId make_set_element(std::vector<ElementId> members);

// Canonical tuple-shaped element: label "(x,y)" in component order, empty
// context. All product carriers use this format.
ElementId make_tuple_element(const std::vector<ElementId>& components);

inline constexpr std::size_t kDefaultMaxCarrier = 4096;

// A finite poset. The order relation is kept reflexively and transitively
// closed at all times; construction rejects input whose closure would violate
// antisymmetry. The carrier is held in a canonical sorted order so that every
// derived listing (covers, down-sets, upper bounds) is deterministic.
class Poset {
 public:
  Poset() = default;

  // Closes `relation` (read as a <= b pairs) reflexively and transitively
  // over `elements` (set semantics: duplicates collapse). Throws
  // UnknownElement if a pair names an element outside the carrier,
  // CycleError if closure breaks antisymmetry, SizeExceeded past the cap.
  static Poset build(const std::vector<ElementId>& elements,
                     const std::vector<std::pair<ElementId, ElementId>>& relation,
                     std::size_t max_carrier = kDefaultMaxCarrier);

  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  bool contains(const ElementId& e) const { return index_.count(e) != 0; }

  // Throws UnknownElement when either argument is outside the carrier.
  std::size_t index_of(const ElementId& e) const;
  const ElementId& at(std::size_t i) const { return elements_[i]; }

  bool leq(const ElementId& a, const ElementId& b) const;
  bool leq_at(std::size_t i, std::size_t j) const { return leq_[i * elements_.size() + j]; }

  // Least upper bound; empty when no upper bound exists or no unique least
  // one does. Absence is an answer, not an error.
  std::optional<ElementId> join(const ElementId& a, const ElementId& b) const;
  std::optional<std::size_t> join_at(std::size_t i, std::size_t j) const;

  bool is_total() const;
  bool is_join_semilattice() const;

  // All y with y < x (strictly), in canonical order.
  std::vector<ElementId> strict_down_set(const ElementId& x) const;

  // Cover pairs (a, b): a < b with nothing strictly between. Rebuilding a
  // poset from its covers reproduces the identical relation.
  std::vector<std::pair<ElementId, ElementId>> hasse() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  std::vector<ElementId> elements_;
  std::map<ElementId, std::size_t> index_;
  std::vector<bool> leq_;  // row-major n*n closed relation
};

}  // namespace valdim

#endif  // VALDIM_POSET_HPP
