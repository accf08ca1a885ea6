#include "valdim/dot.hpp"

#include <algorithm>

namespace valdim {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Poset& p, const std::string& graph_name) {
  std::string out = "digraph " + quoted(graph_name) + " {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=plaintext];\n";
  for (const ElementId& e : p.elements()) {
    out += "  " + quoted(e.qualified()) + ";\n";
  }
  auto covers = p.hasse();
  std::sort(covers.begin(), covers.end());
  for (const auto& [lo, hi] : covers) {
    out += "  " + quoted(lo.qualified()) + " -> " + quoted(hi.qualified()) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace valdim
