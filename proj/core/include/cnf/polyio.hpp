#pragma once

#include "cnf/poly.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cnf {

// Line format: decimal coefficients, degree-ascending, comma-separated; "0" is the zero polynomial.
std::string to_line(const IntPoly& p);
IntPoly from_line(std::string_view line);

void write_polys(std::ostream& out, const std::vector<IntPoly>& polys);
std::vector<IntPoly> read_polys(std::istream& in);

}  // namespace cnf
