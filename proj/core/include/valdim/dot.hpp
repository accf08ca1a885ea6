#ifndef VALDIM_DOT_HPP
#define VALDIM_DOT_HPP

#include <string>

#include "valdim/poset.hpp"

namespace valdim {

// Graphviz rendering of the cover diagram: one node per element (qualified
// name, quoted), one edge per cover pair, drawn bottom-up. Output is
// deterministic: nodes and edges in sorted order.
std::string export_dot(const Poset& p, const std::string& graph_name = "poset");

}  // namespace valdim

#endif  // VALDIM_DOT_HPP
