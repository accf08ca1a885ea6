#include "valdim/meta.hpp"

#include <string>

#include "valdim/errors.hpp"

namespace valdim {

SpecExpr vdim_spec(unsigned max_count) {
  std::vector<std::string> counts;
  counts.reserve(max_count + 1);
  for (unsigned i = 0; i <= max_count; ++i) counts.push_back("n" + std::to_string(i));
  return SpecExpr::power(SpecExpr::base("counts", std::move(counts)));
}

std::string vdim_label(const DimSpecValue& a) {
  std::vector<ElementId> members;
  members.reserve(a.size());
  for (unsigned v : a) members.push_back(elem("n" + std::to_string(v)));
  return make_set_element(std::move(members)).label;
}

DimSpecValue vdim_decode(const ElementId& e) {
  const std::string& label = e.label;
  if (label.size() < 2 || label.front() != '{' || label.back() != '}') {
    throw Error("'" + label + "' is not a count-set label");
  }
  DimSpecValue out;
  std::size_t pos = 1;
  while (pos < label.size() - 1) {
    std::size_t end = label.find(',', pos);
    if (end == std::string::npos || end > label.size() - 1) end = label.size() - 1;
    if (label[pos] != 'n') throw Error("'" + label + "' is not a count-set label");
    const std::string digits = label.substr(pos + 1, end - pos - 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("'" + label + "' is not a count-set label");
    }
    out.insert(static_cast<unsigned>(std::stoul(digits)));
    pos = end + 1;
  }
  return out;
}

InnerState attach_vdim(const InnerState& k, const DimSpecValue& a) {
  if (a.empty()) throw Error("admissible count set must be non-empty");
  const Dimension& dim = k.lrv()->dimension(kVdimIndex);  // throws UnknownIndex
  const ElementId candidate{vdim_label(a), {kVdimIndex}};
  if (!dim.poset.contains(candidate)) {
    throw ValueNotInDimension("'" + candidate.label + "' is not in dimension '" +
                              std::string(kVdimIndex) + "'");
  }
  auto assignment = k.assignment();
  assignment.insert_or_assign(kVdimIndex, candidate);
  return make_state(k.lrv(), assignment);
}

MetaVerdict classify(const InnerState& k, CountConvention convention) {
  MetaVerdict verdict;
  if (!k.lrv()->has(kVdimIndex) || !k.has(kVdimIndex)) return verdict;
  verdict.specified = true;
  const DimSpecValue admissible = vdim_decode(k.project(kVdimIndex));
  verdict.ambiguous = admissible.size() > 1;
  std::size_t count = k.arity();
  if (convention == CountConvention::ExcludeSelf) count -= 1;
  verdict.consistent = admissible.count(static_cast<unsigned>(count)) != 0;
  return verdict;
}

}  // namespace valdim
