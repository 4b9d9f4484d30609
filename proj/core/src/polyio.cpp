#include "cnf/polyio.hpp"

#include "cnf/error.hpp"

namespace cnf {

std::string to_line(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += to_dec(p.coeffs()[i]);
  }
  return out;
}

IntPoly from_line(std::string_view line) {
  std::vector<Int> coeffs;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) comma = line.size();
    coeffs.push_back(parse_int(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

void write_polys(std::ostream& out, const std::vector<IntPoly>& polys) {
  for (const auto& p : polys) out << to_line(p) << '\n';
}

std::vector<IntPoly> read_polys(std::istream& in) {
  std::vector<IntPoly> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_line(line));
  }
  return out;
}

}  // namespace cnf
