#ifndef VALDIM_LRV_HPP
#define VALDIM_LRV_HPP

#include <memory>
#include <string>
#include <vector>

#include "valdim/spec_expr.hpp"

namespace valdim {

// One member of an indexed family: an index symbol, the description it came
// from, and the evaluated poset. Every carrier element holds the dimension id
// at the head of its context, so carriers of distinct dimensions are disjoint
// even when descriptions coincide.
struct Dimension {
  std::string id;
  SpecExpr spec;
  Poset poset;
};

class Lrv;
using LrvRef = std::shared_ptr<const Lrv>;

// A finite indexed family of value dimensions. Immutable once built; states
// and handles share it by reference.
class Lrv {
 public:
  // Index symbols in declaration order.
  const std::vector<std::string>& index() const { return index_; }
  bool has(const std::string& id) const;
  // Throws UnknownIndex.
  const Dimension& dimension(const std::string& id) const;

 private:
  friend LrvRef make_lrv(const std::vector<std::pair<std::string, SpecExpr>>&,
                         const EvalOptions&);
  std::vector<std::string> index_;
  std::vector<Dimension> dims_;  // parallel to index_
};

// Evaluates every entry and tags its carrier with the dimension id. Throws
// DuplicateIndex for a repeated symbol, plus anything eval_spec throws.
LrvRef make_lrv(const std::vector<std::pair<std::string, SpecExpr>>& entries,
                const EvalOptions& options = {});

// Lazy handle to the product of the dimensions named by a sorted index subset.
// Tuples are never materialised; the handle answers membership and gives the
// positional projections back onto its dimensions.
class ProductHandle {
 public:
  ProductHandle(LrvRef lrv, std::vector<std::string> sorted_indices);

  const std::vector<std::string>& indices() const { return indices_; }
  std::size_t arity() const { return indices_.size(); }

  // Number of tuples in the product. Throws SizeExceeded if it overflows.
  unsigned long long size() const;

  // True iff the tuple has one component per index, in index order, each
  // drawn from the matching dimension's carrier.
  bool contains(const std::vector<ElementId>& tuple) const;

  // Component of a valid tuple at the named index. Throws UnknownIndex for
  // an index outside the handle, UnknownElement for an invalid tuple.
  ElementId project(const std::vector<ElementId>& tuple, const std::string& index) const;

  const LrvRef& lrv() const { return lrv_; }

 private:
  LrvRef lrv_;
  std::vector<std::string> indices_;
};

// Handle for the product over J. Throws UnknownIndex if J strays outside the
// family's index, Error if J is empty.
ProductHandle rho_J(LrvRef lrv, const std::vector<std::string>& J);

// The unique element of the named dimension carrying `label`, ignoring the
// context tail. Throws UnknownIndex for a missing dimension, UnknownElement
// for a missing label, Error when several elements share the label.
ElementId find_element(const Lrv& lrv, const std::string& index, const std::string& label);

}  // namespace valdim

#endif  // VALDIM_LRV_HPP
