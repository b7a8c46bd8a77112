#include "tdahrv/diagram_io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "tdahrv/errors.hpp"
#include "tdahrv/text_format.hpp"

namespace tdahrv {

void write_diagram_csv(std::ostream& out, std::span<const PersistenceDiagram> diagrams) {
  std::vector<PersistencePair> rows;
  for (const auto& pd : diagrams) rows.insert(rows.end(), pd.begin(), pd.end());
  std::sort(rows.begin(), rows.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    return a.death < b.death;
  });
  out << "dim,birth,death\n";
  for (const auto& p : rows)
    out << p.dim << ',' << format_real(p.birth) << ',' << format_real(p.death) << '\n';
}

std::string diagram_csv(std::span<const PersistenceDiagram> diagrams) {
  std::ostringstream out;
  write_diagram_csv(out, diagrams);
  return out.str();
}

std::vector<PersistenceDiagram> read_diagram_csv(std::istream& in, const std::string& source) {
  std::map<int, std::vector<PersistenceDiagram::Interval>> by_dim;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (!header_seen) {
      if (text != "dim,birth,death")
        throw ParseError(source, line_no, "expected header 'dim,birth,death'");
      header_seen = true;
      continue;
    }
    const auto fields = split(text, ',');
    if (fields.size() != 3) throw ParseError(source, line_no, "expected 3 fields");
    const auto dim = parse_integer(fields[0]);
    const auto birth = parse_real(fields[1]);
    const auto death = parse_real(fields[2]);
    if (!dim || *dim < 0) throw ParseError(source, line_no, "invalid dimension");
    if (!birth || !death || std::isnan(*birth) || std::isnan(*death) || std::isinf(*birth))
      throw ParseError(source, line_no, "invalid birth/death value");
    if (*death < *birth) throw ParseError(source, line_no, "death precedes birth");
    by_dim[static_cast<int>(*dim)].emplace_back(*birth, *death);
  }
  if (!header_seen) throw ParseError(source, line_no, "missing header 'dim,birth,death'");
  std::vector<PersistenceDiagram> out;
  for (auto& [dim, intervals] : by_dim) out.emplace_back(dim, std::move(intervals));
  return out;
}

}  // namespace tdahrv
