#include "valdim/downset.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "valdim/errors.hpp"

namespace valdim {

namespace {

// Strict down-sets as index bitmasks, one per carrier element.
std::vector<std::uint64_t> down_masks(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint64_t> masks(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x && p.leq_at(y, x)) masks[x] |= std::uint64_t{1} << y;
    }
  }
  return masks;
}

}  // namespace

IotaResult iota(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<ElementId>> down(n);
  for (std::size_t x = 0; x < n; ++x) down[x] = p.strict_down_set(p.at(x));

  IotaResult result;
  std::set<ElementId> image_carrier;
  for (std::size_t x = 0; x < n; ++x) {
    ElementId image_elem = make_set_element(down[x]);
    image_carrier.insert(image_elem);
    result.map.emplace(p.at(x), std::move(image_elem));
  }
  result.injective = image_carrier.size() == n;

  std::vector<ElementId> carrier(image_carrier.begin(), image_carrier.end());
  // Inclusion order, recovered from the source down-sets.
  std::map<ElementId, std::set<ElementId>> members;
  for (std::size_t x = 0; x < n; ++x) {
    members[result.map.at(p.at(x))] = {down[x].begin(), down[x].end()};
  }
  std::vector<std::pair<ElementId, ElementId>> relation;
  for (const auto& a : carrier) {
    for (const auto& b : carrier) {
      if (a == b) continue;
      if (std::includes(members[b].begin(), members[b].end(), members[a].begin(),
                        members[a].end())) {
        relation.emplace_back(a, b);
      }
    }
  }
  result.image = Poset::build(carrier, relation);
  return result;
}

bool iota_preserves_strict(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 64) throw SizeExceeded("strict-order check is limited to 64 elements");
  const auto masks = down_masks(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq_at(a, b)) continue;
      const bool proper_subset =
          (masks[a] & ~masks[b]) == 0 && masks[a] != masks[b];
      if (!proper_subset) return false;
    }
  }
  return true;
}

bool iota_is_join_hom(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 64) throw SizeExceeded("join-homomorphism check is limited to 64 elements");
  const auto masks = down_masks(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto j = p.join_at(a, b);
      if (!j) {
        throw NotAJoinSemilattice("pair '" + p.at(a).qualified() + "', '" +
                                  p.at(b).qualified() + "' has no join");
      }
      if (masks[*j] != (masks[a] | masks[b])) return false;
    }
  }
  return true;
}

bool has_injective_join_hom(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 4) throw SizeExceeded("exhaustive map search is limited to 4 elements");
  const auto masks = down_masks(p);

  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto j = p.join_at(a, b);
      if (!j) {
        throw NotAJoinSemilattice("pair '" + p.at(a).qualified() + "', '" +
                                  p.at(b).qualified() + "' has no join");
      }
      join[a][b] = *j;
    }
  }

  // Distinct down-sets form the codomain family.
  std::vector<std::uint64_t> family(masks);
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (family.size() < n) return false;  // no injective map at all

  // Try every injective assignment carrier -> family.
  std::vector<std::size_t> pick(family.size());
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
  std::sort(pick.begin(), pick.end());
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        ok = family[pick[join[a][b]]] == (family[pick[a]] | family[pick[b]]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

namespace {

constexpr std::array<const char*, 5> kLabels = {"a", "b", "c", "d", "e"};

}  // namespace

void enumerate_posets(std::size_t n, bool joins_only,
                      const std::function<void(const Poset&)>& visit) {
  if (n > 5) throw SizeExceeded("enumeration is limited to 5 elements");

  std::vector<ElementId> carrier;
  for (std::size_t i = 0; i < n; ++i) carrier.push_back(elem(kLabels[i]));

  // Bit positions for ordered pairs (i, j), i != j.
  std::vector<std::vector<int>> pid(n, std::vector<int>(n, -1));
  int bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pid[i][j] = bits++;
    }
  }

  const std::uint32_t limit = std::uint32_t{1} << bits;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    auto rel = [&](std::size_t i, std::size_t j) {
      return (mask >> pid[i][j]) & 1u;
    };
    bool valid = true;
    for (std::size_t i = 0; i < n && valid; ++i) {
      for (std::size_t j = i + 1; j < n && valid; ++j) {
        valid = !(rel(i, j) && rel(j, i));
      }
    }
    for (std::size_t i = 0; i < n && valid; ++i) {
      for (std::size_t j = 0; j < n && valid; ++j) {
        if (i == j || !rel(i, j)) continue;
        for (std::size_t k = 0; k < n && valid; ++k) {
          if (k != i && k != j && rel(j, k)) valid = rel(i, k);
        }
      }
    }
    if (!valid) continue;

    std::vector<std::pair<ElementId, ElementId>> relation;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && rel(i, j)) relation.emplace_back(carrier[i], carrier[j]);
      }
    }
    Poset p = Poset::build(carrier, relation);
    if (joins_only && !p.is_join_semilattice()) continue;
    visit(p);
  }
}

std::size_t count_posets(std::size_t n, bool joins_only) {
  std::size_t count = 0;
  enumerate_posets(n, joins_only, [&count](const Poset&) { ++count; });
  return count;
}

}  // namespace valdim
