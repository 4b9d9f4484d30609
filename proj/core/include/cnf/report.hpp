#pragma once

#include "cnf/check.hpp"
#include "cnf/p7ext.hpp"
#include "cnf/padic3.hpp"
#include "cnf/periods.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cnf {

// {"p":3,"n":4,"entries":[{"d":56,"h":4,"x":10,"y":2,"resolved":"computed"},...],
//  "undetermined":[],"lhs":24,"rhs":24,"diff":0}
std::string to_json(const FormulaReport& r, int indent = -1);
FormulaReport formula_report_from_json(std::string_view text);

// Header p,n,d,h,x,y,resolved,lhs,rhs,diff; one row per entry.
std::string to_csv(const FormulaReport& r);
FormulaReport formula_report_from_csv(std::string_view text);

std::string to_text(const FormulaReport& r);

std::string to_json(const CheckReport& r, int indent = -1);
std::string to_text(const CheckReport& r);

// {"p":7,"n":2,"degrees":[...],"degree_sum":84,"expected_degree":84,"checks":[...]}
std::string to_json(const P7Audit& a, int n, int indent = -1);

// {"n":2,"precision":32,"orbits":[{"modulus":["..."],"period":2,"points":[["..",".."],...]}]}
std::string to_json(const std::vector<OrbitRecord>& orbits, int n, unsigned k, int indent = -1);

ResolvedBy resolved_from_string(std::string_view s);

}  // namespace cnf
