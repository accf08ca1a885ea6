#include "valdim/lrv.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "valdim/errors.hpp"

namespace valdim {

namespace {

// Rebuilds a poset with `tag` prepended to every element's context.
Poset tag_carrier(const Poset& p, const std::string& tag, std::size_t max_carrier) {
  auto retag = [&tag](const ElementId& e) {
    ElementId out = e;
    out.context.insert(out.context.begin(), tag);
    return out;
  };
  std::vector<ElementId> carrier;
  carrier.reserve(p.size());
  for (const auto& e : p.elements()) carrier.push_back(retag(e));
  std::vector<std::pair<ElementId, ElementId>> relation;
  for (const auto& a : p.elements()) {
    for (const auto& b : p.elements()) {
      if (!(a == b) && p.leq(a, b)) relation.emplace_back(retag(a), retag(b));
    }
  }
  return Poset::build(carrier, relation, max_carrier);
}

}  // namespace

bool Lrv::has(const std::string& id) const {
  return std::find(index_.begin(), index_.end(), id) != index_.end();
}

const Dimension& Lrv::dimension(const std::string& id) const {
  for (std::size_t i = 0; i < index_.size(); ++i) {
    if (index_[i] == id) return dims_[i];
  }
  throw UnknownIndex("no dimension '" + id + "'");
}

LrvRef make_lrv(const std::vector<std::pair<std::string, SpecExpr>>& entries,
                const EvalOptions& options) {
  auto lrv = std::make_shared<Lrv>();
  std::set<std::string> seen;
  for (const auto& [id, spec] : entries) {
    if (!seen.insert(id).second) throw DuplicateIndex("dimension '" + id + "' given twice");
    Dimension dim;
    dim.id = id;
    dim.spec = spec;
    dim.poset = tag_carrier(eval_spec(spec, options), id, options.max_carrier);
    lrv->index_.push_back(id);
    lrv->dims_.push_back(std::move(dim));
  }
  return lrv;
}

ProductHandle::ProductHandle(LrvRef lrv, std::vector<std::string> sorted_indices)
    : lrv_(std::move(lrv)), indices_(std::move(sorted_indices)) {}

unsigned long long ProductHandle::size() const {
  unsigned long long count = 1;
  for (const auto& id : indices_) {
    const unsigned long long n = lrv_->dimension(id).poset.size();
    if (n != 0 && count > std::numeric_limits<unsigned long long>::max() / n) {
      throw SizeExceeded("product size overflows");
    }
    count *= n;
  }
  return count;
}

bool ProductHandle::contains(const std::vector<ElementId>& tuple) const {
  if (tuple.size() != indices_.size()) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!lrv_->dimension(indices_[i]).poset.contains(tuple[i])) return false;
  }
  return true;
}

ElementId ProductHandle::project(const std::vector<ElementId>& tuple,
                                 const std::string& index) const {
  auto it = std::find(indices_.begin(), indices_.end(), index);
  if (it == indices_.end()) throw UnknownIndex("'" + index + "' is not part of this product");
  if (!contains(tuple)) throw UnknownElement("tuple is not a member of this product");
  return tuple[static_cast<std::size_t>(it - indices_.begin())];
}

ElementId find_element(const Lrv& lrv, const std::string& index, const std::string& label) {
  const Dimension& dim = lrv.dimension(index);
  const ElementId* found = nullptr;
  for (const auto& e : dim.poset.elements()) {
    if (e.label != label) continue;
    if (found) {
      throw Error("label '" + label + "' is ambiguous in dimension '" + index + "'");
    }
    found = &e;
  }
  if (!found) {
    throw UnknownElement("no element labelled '" + label + "' in dimension '" + index + "'");
  }
  return *found;
}

ProductHandle rho_J(LrvRef lrv, const std::vector<std::string>& J) {
  if (J.empty()) throw Error("product over an empty index set");
  std::set<std::string> sorted(J.begin(), J.end());
  for (const auto& id : sorted) {
    if (!lrv->has(id)) throw UnknownIndex("no dimension '" + id + "'");
  }
  return ProductHandle(std::move(lrv), {sorted.begin(), sorted.end()});
}

}  // namespace valdim
