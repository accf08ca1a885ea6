#include "valdim/inner_state.hpp"

#include <algorithm>
#include <set>

#include "valdim/errors.hpp"

namespace valdim {

InnerState::InnerState(LrvRef lrv, std::map<std::string, ElementId> assign)
    : lrv_(std::move(lrv)), assign_(std::move(assign)) {}

InnerState make_state(LrvRef lrv, const std::map<std::string, ElementId>& assignment) {
  for (const auto& [index, value] : assignment) {
    const Dimension& dim = lrv->dimension(index);  // throws UnknownIndex
    if (!dim.poset.contains(value)) {
      throw ValueNotInDimension("'" + value.qualified() + "' is not in dimension '" + index +
                                "'");
    }
  }
  return InnerState(std::move(lrv), assignment);
}

std::vector<std::string> InnerState::domain() const {
  std::vector<std::string> out;
  out.reserve(assign_.size());
  for (const auto& [index, value] : assign_) out.push_back(index);
  return out;
}

std::vector<ElementId> InnerState::codomain() const {
  std::set<ElementId> out;
  for (const auto& [index, value] : assign_) out.insert(value);
  return {out.begin(), out.end()};
}

ElementId InnerState::project(const std::string& index) const {
  if (!lrv_->has(index)) throw UnknownIndex("no dimension '" + index + "'");
  auto it = assign_.find(index);
  if (it == assign_.end()) throw NotInDomain("dimension '" + index + "' is unassigned");
  return it->second;
}

namespace {

void require_same_lrv(const InnerState& a, const InnerState& b) {
  if (a.lrv() != b.lrv()) throw LrvMismatch("states belong to different families");
}

// k1's domain within k2's and every shared component dominated by k2's.
bool dominated(const InnerState& k1, const InnerState& k2) {
  for (const auto& [index, value] : k1.assignment()) {
    auto it = k2.assignment().find(index);
    if (it == k2.assignment().end()) return false;
    if (!k1.lrv()->dimension(index).poset.leq(value, it->second)) return false;
  }
  return true;
}

}  // namespace

CompareResult compare(const InnerState& k1, const InnerState& k2) {
  require_same_lrv(k1, k2);
  if (k1.assignment() == k2.assignment()) return CompareResult::Equal;
  if (dominated(k1, k2)) return CompareResult::LessEq;
  if (dominated(k2, k1)) return CompareResult::GreaterEq;
  return CompareResult::Incomparable;
}

ComposeResult compose(const InnerState& k1, const InnerState& k2) {
  require_same_lrv(k1, k2);
  std::map<std::string, ElementId> merged = k1.assignment();
  for (const auto& [index, value] : k2.assignment()) {
    auto [it, inserted] = merged.emplace(index, value);
    if (inserted) continue;
    auto joined = k1.lrv()->dimension(index).poset.join(it->second, value);
    if (!joined) return ComposeResult{std::nullopt, index};
    it->second = *joined;
  }
  return ComposeResult{make_state(k1.lrv(), merged), ""};
}

InnerState restrict(const InnerState& k, const std::vector<std::string>& indices) {
  std::set<std::string> keep;
  for (const auto& index : indices) {
    if (!k.lrv()->has(index)) throw UnknownIndex("no dimension '" + index + "'");
    keep.insert(index);
  }
  std::map<std::string, ElementId> kept;
  for (const auto& [index, value] : k.assignment()) {
    if (keep.count(index)) kept.emplace(index, value);
  }
  return make_state(k.lrv(), kept);
}

bool detect_incompatibility(const std::string& index, const ElementId& a,
                            const InnerState& kA, const InnerState& kH) {
  require_same_lrv(kA, kH);
  const Dimension& dim = kA.lrv()->dimension(index);  // throws UnknownIndex
  if (!dim.poset.contains(a)) {
    throw ValueNotInDimension("'" + a.qualified() + "' is not in dimension '" + index + "'");
  }

  // The observing state acknowledges `a` along the dimension.
  if (!kA.has(index) || !dim.poset.leq(a, kA.project(index))) return false;

  // On every dimension both can see, the observing state stays within what
  // the reference state holds.
  std::vector<std::string> shared;
  for (const auto& id : kA.domain()) {
    if (kH.has(id)) shared.push_back(id);
  }
  const CompareResult r = compare(restrict(kA, shared), kH);
  if (r != CompareResult::LessEq && r != CompareResult::Equal) return false;

  // Yet the reference state does not acknowledge `a`.
  return !(kH.has(index) && dim.poset.leq(a, kH.project(index)));
}

std::vector<std::vector<std::string>> potential_value(const InnerState& k,
                                                      std::size_t max_dims) {
  const std::vector<std::string> domain = k.domain();
  if (domain.size() > max_dims) {
    throw SizeExceeded("domain has " + std::to_string(domain.size()) +
                       " dimensions, cap is " + std::to_string(max_dims));
  }
  std::vector<std::vector<std::string>> out;
  const std::size_t count = std::size_t{1} << domain.size();
  for (std::size_t mask = 1; mask < count; ++mask) {
    std::vector<std::string> subset;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(domain[i]);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

Transition make_transition(const LrvRef& lrv, std::string from, std::string to,
                           std::vector<std::string> label) {
  if (label.empty()) throw Error("transition label must name at least one dimension");
  std::set<std::string> sorted;
  for (const auto& id : label) {
    if (!lrv->has(id)) throw UnknownIndex("no dimension '" + id + "'");
    sorted.insert(id);
  }
  return Transition{std::move(from), std::move(to), {sorted.begin(), sorted.end()}};
}

}  // namespace valdim
