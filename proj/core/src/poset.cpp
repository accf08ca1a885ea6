#include "valdim/poset.hpp"

#include <algorithm>
#include <set>

#include "valdim/errors.hpp"

namespace valdim {

std::string ElementId::qualified() const {
  std::string out;
  for (const auto& part : context) {
    out += part;
    out += '.';
  }
  out += label;
  return out;
}

ElementId make_set_element(std::vector<ElementId> members) {
  std::sort(members.begin(), members.end());
  std::string label = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) label += ',';
    label += members[i].qualified();
  }
  label += '}';
  return ElementId{std::move(label), {}};
}

ElementId make_tuple_element(const std::vector<ElementId>& components) {
  std::string label = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) label += ',';
    label += components[i].qualified();
  }
  label += ')';
  return ElementId{std::move(label), {}};
}

Poset Poset::build(const std::vector<ElementId>& elements,
                   const std::vector<std::pair<ElementId, ElementId>>& relation,
                   std::size_t max_carrier) {
  Poset p;
  std::set<ElementId> dedup(elements.begin(), elements.end());
  p.elements_.assign(dedup.begin(), dedup.end());
  const std::size_t n = p.elements_.size();
  if (n > max_carrier) {
    throw SizeExceeded("carrier has " + std::to_string(n) + " elements, cap is " +
                       std::to_string(max_carrier));
  }
  for (std::size_t i = 0; i < n; ++i) p.index_[p.elements_[i]] = i;

  p.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = true;
  for (const auto& [a, b] : relation) {
    auto ia = p.index_.find(a);
    auto ib = p.index_.find(b);
    if (ia == p.index_.end()) throw UnknownElement("relation names '" + a.qualified() + "'");
    if (ib == p.index_.end()) throw UnknownElement("relation names '" + b.qualified() + "'");
    p.leq_[ia->second * n + ib->second] = true;
  }

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.leq_[k * n + j]) p.leq_[i * n + j] = true;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.leq_[i * n + j] && p.leq_[j * n + i]) {
        throw CycleError("closure relates '" + p.elements_[i].qualified() + "' and '" +
                         p.elements_[j].qualified() + "' in both directions");
      }
    }
  }
  return p;
}

std::size_t Poset::index_of(const ElementId& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw UnknownElement("'" + e.qualified() + "' is not in the carrier");
  return it->second;
}

bool Poset::leq(const ElementId& a, const ElementId& b) const {
  return leq_at(index_of(a), index_of(b));
}

std::optional<std::size_t> Poset::join_at(std::size_t i, std::size_t j) const {
  const std::size_t n = elements_.size();
  std::optional<std::size_t> least;
  for (std::size_t u = 0; u < n; ++u) {
    if (!(leq_[i * n + u] && leq_[j * n + u])) continue;
    if (!least || leq_[u * n + *least]) least = u;
  }
  if (!least) return std::nullopt;
  // `least` is a minimal upper bound; it is the join only if it is below
  // every other upper bound.
  for (std::size_t u = 0; u < n; ++u) {
    if (leq_[i * n + u] && leq_[j * n + u] && !leq_[*least * n + u]) return std::nullopt;
  }
  return least;
}

std::optional<ElementId> Poset::join(const ElementId& a, const ElementId& b) const {
  auto r = join_at(index_of(a), index_of(b));
  if (!r) return std::nullopt;
  return elements_[*r];
}

bool Poset::is_total() const {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!leq_[i * n + j] && !leq_[j * n + i]) return false;
    }
  }
  return true;
}

bool Poset::is_join_semilattice() const {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!join_at(i, j)) return false;
    }
  }
  return true;
}

std::vector<ElementId> Poset::strict_down_set(const ElementId& x) const {
  const std::size_t ix = index_of(x);
  const std::size_t n = elements_.size();
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != ix && leq_[i * n + ix]) out.push_back(elements_[i]);
  }
  return out;
}

std::vector<std::pair<ElementId, ElementId>> Poset::hasse() const {
  const std::size_t n = elements_.size();
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_[i * n + j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (k != i && k != j && leq_[i * n + k] && leq_[k * n + j]) direct = false;
      }
      if (direct) covers.emplace_back(elements_[i], elements_[j]);
    }
  }
  return covers;
}

}  // namespace valdim
