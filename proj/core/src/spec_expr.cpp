#include "valdim/spec_expr.hpp"

#include <algorithm>
#include <set>

#include "valdim/errors.hpp"

namespace valdim {

SpecExpr SpecExpr::base(std::string name, std::vector<std::string> elements,
                        std::vector<std::pair<std::string, std::string>> order) {
  SpecExpr e;
  e.kind = Kind::Base;
  e.name = std::move(name);
  e.elements = std::move(elements);
  e.order = std::move(order);
  return e;
}

SpecExpr SpecExpr::power(SpecExpr child) {
  SpecExpr e;
  e.kind = Kind::Power;
  e.children.push_back(std::move(child));
  return e;
}

static SpecExpr combinator(SpecExpr::Kind kind, std::vector<SpecExpr> children,
                           const char* what) {
  if (children.empty()) throw Error(std::string(what) + " needs at least one part");
  SpecExpr e;
  e.kind = kind;
  e.children = std::move(children);
  return e;
}

SpecExpr SpecExpr::product(std::vector<SpecExpr> factors) {
  return combinator(Kind::Product, std::move(factors), "product");
}

SpecExpr SpecExpr::disjoint_union(std::vector<SpecExpr> parts) {
  return combinator(Kind::DisjointUnion, std::move(parts), "disjoint union");
}

SpecExpr SpecExpr::union_as_sets(std::vector<SpecExpr> parts) {
  return combinator(Kind::UnionAsSets, std::move(parts), "union");
}

SpecExpr SpecExpr::atoms(std::vector<SpecExpr> parts) {
  return combinator(Kind::Atoms, std::move(parts), "atoms");
}

SpecExpr SpecExpr::atoms_named(const std::vector<std::string>& names) {
  std::vector<SpecExpr> parts;
  parts.reserve(names.size());
  for (const auto& n : names) parts.push_back(base(n, {n}));
  return atoms(std::move(parts));
}

namespace {

void check_size(std::size_t n, const EvalOptions& options) {
  if (n > options.max_carrier) {
    throw SizeExceeded("carrier would have " + std::to_string(n) + " elements, cap is " +
                       std::to_string(options.max_carrier));
  }
}

Poset eval_base(const SpecExpr& expr, const EvalOptions& options) {
  std::vector<ElementId> carrier;
  carrier.reserve(expr.elements.size());
  for (const auto& label : expr.elements) carrier.push_back(elem(label));
  std::vector<std::pair<ElementId, ElementId>> relation;
  relation.reserve(expr.order.size());
  for (const auto& [a, b] : expr.order) relation.emplace_back(elem(a), elem(b));
  return Poset::build(carrier, relation, options.max_carrier);
}

Poset eval_power(const Poset& inner, const EvalOptions& options) {
  const std::size_t n = inner.size();
  if (n >= 63) throw SizeExceeded("power set over " + std::to_string(n) + " elements");
  const std::size_t count = std::size_t{1} << n;
  check_size(count, options);

  std::vector<ElementId> carrier;
  carrier.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<ElementId> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(inner.at(i));
    }
    carrier.push_back(make_set_element(members));
  }
  std::vector<std::pair<ElementId, ElementId>> relation;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a != b && (a & b) == a) relation.emplace_back(carrier[a], carrier[b]);
    }
  }
  return Poset::build(carrier, relation, options.max_carrier);
}

Poset eval_product(const std::vector<Poset>& factors, const EvalOptions& options) {
  std::size_t count = 1;
  for (const auto& f : factors) {
    if (f.size() != 0 && count > options.max_carrier / f.size()) {
      throw SizeExceeded("product carrier exceeds cap");
    }
    count *= f.size();
  }
  check_size(count, options);

  const std::size_t arity = factors.size();
  std::vector<std::vector<ElementId>> tuples;
  tuples.reserve(count);
  std::vector<std::size_t> cursor(arity, 0);
  for (std::size_t t = 0; t < count; ++t) {
    std::vector<ElementId> components;
    components.reserve(arity);
    for (std::size_t k = 0; k < arity; ++k) components.push_back(factors[k].at(cursor[k]));
    tuples.push_back(std::move(components));
    for (std::size_t k = arity; k-- > 0;) {
      if (++cursor[k] < factors[k].size()) break;
      cursor[k] = 0;
    }
  }

  std::vector<ElementId> carrier;
  carrier.reserve(count);
  for (const auto& t : tuples) carrier.push_back(make_tuple_element(t));

  std::vector<std::pair<ElementId, ElementId>> relation;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b) continue;
      bool dominated = true;
      for (std::size_t k = 0; k < arity && dominated; ++k) {
        dominated = factors[k].leq(tuples[a][k], tuples[b][k]);
      }
      if (dominated) relation.emplace_back(carrier[a], carrier[b]);
    }
  }
  return Poset::build(carrier, relation, options.max_carrier);
}

Poset eval_disjoint_union(const std::vector<Poset>& parts, const EvalOptions& options) {
  std::vector<ElementId> carrier;
  std::vector<std::pair<ElementId, ElementId>> relation;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::string tag = "u" + std::to_string(p);
    auto retag = [&tag](const ElementId& e) {
      ElementId out = e;
      out.context.insert(out.context.begin(), tag);
      return out;
    };
    for (const auto& e : parts[p].elements()) carrier.push_back(retag(e));
    for (const auto& a : parts[p].elements()) {
      for (const auto& b : parts[p].elements()) {
        if (!(a == b) && parts[p].leq(a, b)) relation.emplace_back(retag(a), retag(b));
      }
    }
  }
  check_size(carrier.size(), options);
  return Poset::build(carrier, relation, options.max_carrier);
}

Poset eval_union_as_sets(const std::vector<Poset>& parts, const EvalOptions& options) {
  std::set<std::string> seen;
  for (const auto& part : parts) {
    std::set<std::string> labels;
    for (const auto& e : part.elements()) labels.insert(e.label);
    for (const auto& label : labels) {
      if (!seen.insert(label).second) {
        throw LabelCollision("union parts share label '" + label + "'");
      }
    }
  }
  std::vector<ElementId> carrier;
  std::vector<std::pair<ElementId, ElementId>> relation;
  for (const auto& part : parts) {
    for (const auto& e : part.elements()) carrier.push_back(e);
    for (const auto& a : part.elements()) {
      for (const auto& b : part.elements()) {
        if (!(a == b) && part.leq(a, b)) relation.emplace_back(a, b);
      }
    }
  }
  check_size(carrier.size(), options);
  return Poset::build(carrier, relation, options.max_carrier);
}

Poset eval_atoms(const SpecExpr& expr, const EvalOptions& options) {
  std::vector<ElementId> carrier;
  for (const auto& part : expr.children) {
    if (part.name.empty()) throw Error("atoms parts must be named");
    carrier.push_back(elem(part.name));
  }
  check_size(carrier.size(), options);
  return Poset::build(carrier, {}, options.max_carrier);
}

}  // namespace

Poset eval_spec(const SpecExpr& expr, const EvalOptions& options) {
  switch (expr.kind) {
    case SpecExpr::Kind::Base:
      return eval_base(expr, options);
    case SpecExpr::Kind::Power:
      return eval_power(eval_spec(expr.children.front(), options), options);
    case SpecExpr::Kind::Atoms:
      return eval_atoms(expr, options);
    default:
      break;
  }
  std::vector<Poset> parts;
  parts.reserve(expr.children.size());
  for (const auto& child : expr.children) parts.push_back(eval_spec(child, options));
  switch (expr.kind) {
    case SpecExpr::Kind::Product:
      return eval_product(parts, options);
    case SpecExpr::Kind::DisjointUnion:
      return eval_disjoint_union(parts, options);
    case SpecExpr::Kind::UnionAsSets:
      return eval_union_as_sets(parts, options);
    default:
      throw Error("unreachable spec kind");
  }
}

}  // namespace valdim
