#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "gr1core/parser.hpp"
#include "gr1core/reduction.hpp"

namespace gr1core::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(GR1CORE_SPEC_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline SpecAst parse_fixture(const std::string& name) {
  return parse_spec(read_fixture(name));
}

inline Gr1Problem load_fixture(const std::string& name) {
  return reduce(parse_fixture(name));
}

/// IDs of the elements declared on the given source lines.
inline ElementSet ids_on_lines(const Gr1Problem& problem,
                               std::initializer_list<int> lines) {
  ElementSet out;
  for (int line : lines) {
    for (const ElementInfo& info : problem.elements)
      if (info.source_line == line) out.insert(info.id);
  }
  return out;
}

/// Source lines of the given element IDs, ascending.
inline std::vector<int> lines_of(const Gr1Problem& problem,
                                 const ElementSet& ids) {
  std::vector<int> lines;
  for (ElementId id : ids) lines.push_back(problem.elements[id].source_line);
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace gr1core::testing
