#ifndef VALDIM_DOWNSET_HPP
#define VALDIM_DOWNSET_HPP

#include <functional>
#include <map>

#include "valdim/poset.hpp"

namespace valdim {

// Outcome of replacing every element by its strict down-set. The image
// carrier holds one set-shaped element per distinct down-set, ordered by
// inclusion; `map` sends each source element to its image. Distinct
// incomparable elements with equal down-sets collapse, so the map need not
// be injective.
struct IotaResult {
  Poset image;
  std::map<ElementId, ElementId> map;
  bool injective = false;
};

IotaResult iota(const Poset& p);

// Checks that a < b strictly implies image(a) is a proper subset of
// image(b). Holds for every finite poset; exposed as a verifiable property.
bool iota_preserves_strict(const Poset& p);

// True iff the down-set image turns every join into a set union:
// image(a v b) == image(a) | image(b) for all pairs. Requires every pair to
// have a join (NotAJoinSemilattice otherwise). Total orders satisfy this;
// incomparable pairs with a join break it.
bool iota_is_join_hom(const Poset& p);

// Exhaustive companion question at desk scale: does ANY injective map from
// the carrier into the down-set family turn joins into unions? Searches all
// injective assignments for carriers of at most 4 elements (SizeExceeded
// beyond that, NotAJoinSemilattice when joins are missing).
bool has_injective_join_hom(const Poset& p);

// Visits every labelled poset on n elements (labels "a".."e") exactly once;
// with joins_only set, only those where every pair has a join. n must be at
// most 5 (SizeExceeded).
void enumerate_posets(std::size_t n, bool joins_only,
                      const std::function<void(const Poset&)>& visit);

std::size_t count_posets(std::size_t n, bool joins_only);

}  // namespace valdim

#endif  // VALDIM_DOWNSET_HPP
