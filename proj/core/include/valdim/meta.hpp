#ifndef VALDIM_META_HPP
#define VALDIM_META_HPP

#include <optional>
#include <set>

#include "valdim/inner_state.hpp"

namespace valdim {

// Reserved index of the self-description dimension: the dimension whose
// carrier elements are admissible dimension counts.
inline constexpr const char* kVdimIndex = "V_dim";

// A non-empty finite set of admissible dimension counts.
using DimSpecValue = std::set<unsigned>;

// Description of a self-description carrier admitting counts 0..max_count:
// the subsets of that range, ordered by inclusion.
SpecExpr vdim_spec(unsigned max_count);

// Label of the carrier element denoting admissible set `a` ("{n2,n4}" for
// {2, 4}).
std::string vdim_label(const DimSpecValue& a);

// Inverse of the labelling; throws Error on a label that is not
// count-shaped.
DimSpecValue vdim_decode(const ElementId& e);

struct MetaVerdict {
  bool specified = false;             // the self-description dimension is assigned
  std::optional<bool> ambiguous;      // more than one admissible count; empty if unspecified
  std::optional<bool> consistent;     // actual domain size admissible; empty if unspecified
};

// Whether the domain size counts the self-description dimension itself.
// Counting it is the default reading; scenarios may switch.
enum class CountConvention { IncludeSelf, ExcludeSelf };

// Returns `k` with the self-description dimension assigned to `a`. The
// family must carry the reserved dimension (UnknownIndex) and its carrier
// must contain the encoding of `a` (ValueNotInDimension); `a` must be
// non-empty (Error). An existing assignment is replaced.
InnerState attach_vdim(const InnerState& k, const DimSpecValue& a);

// Reads the state's own claim about how many dimensions it should span and
// checks it against the actual domain.
MetaVerdict classify(const InnerState& k,
                     CountConvention convention = CountConvention::IncludeSelf);

}  // namespace valdim

#endif  // VALDIM_META_HPP
