#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tdahrv/diagram.hpp"

namespace tdahrv {

// CSV with header `dim,birth,death`; rows sorted by (dim, birth, death);
// essential deaths are written as `inf`.
void write_diagram_csv(std::ostream& out, std::span<const PersistenceDiagram> diagrams);
std::string diagram_csv(std::span<const PersistenceDiagram> diagrams);

// Returns one diagram per dimension that occurs in the file, in ascending
// dimension order. Throws ParseError with the offending line number.
std::vector<PersistenceDiagram> read_diagram_csv(std::istream& in,
                                                 const std::string& source = "<diagram>");

}  // namespace tdahrv
