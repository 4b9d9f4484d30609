#include "cnf/report.hpp"

#include "cnf/error.hpp"

#include <json.hpp>

#include <sstream>

namespace cnf {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return to_dec(v);
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return from_i64(j.get<std::int64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw ParseError("expected an integer");
}

json checks_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& c : r.items) items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return items;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

ResolvedBy resolved_from_string(std::string_view s) {
  if (s == "computed") return ResolvedBy::Computed;
  if (s == "eisenstein") return ResolvedBy::Eisenstein;
  if (s == "registry") return ResolvedBy::Registry;
  throw ParseError("unknown resolution flag '" + std::string(s) + "'");
}

std::string to_json(const FormulaReport& r, int indent) {
  json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["entries"] = json::array();
  for (const auto& e : r.entries)
    j["entries"].push_back({{"d", e.d}, {"h", e.h}, {"x", e.x}, {"y", e.y}, {"resolved", to_string(e.resolved)}});
  j["undetermined"] = r.undetermined;
  j["lhs"] = int_json(r.lhs);
  j["rhs"] = int_json(r.rhs);
  j["diff"] = int_json(r.diff);
  return j.dump(indent);
}

FormulaReport formula_report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  try {
    FormulaReport r;
    r.p = j.at("p").get<std::int64_t>();
    r.n = j.at("n").get<int>();
    for (const auto& e : j.at("entries"))
      r.entries.push_back({e.at("d").get<std::int64_t>(), e.at("h").get<std::int64_t>(), e.at("x").get<std::int64_t>(),
                           e.at("y").get<std::int64_t>(), resolved_from_string(e.at("resolved").get<std::string>())});
    if (j.contains("undetermined")) r.undetermined = j.at("undetermined").get<std::vector<std::int64_t>>();
    r.lhs = int_from_json(j.at("lhs"));
    r.rhs = int_from_json(j.at("rhs"));
    r.diff = int_from_json(j.at("diff"));
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

std::string to_csv(const FormulaReport& r) {
  std::ostringstream out;
  out << "p,n,d,h,x,y,resolved,lhs,rhs,diff\n";
  for (const auto& e : r.entries)
    out << r.p << ',' << r.n << ',' << e.d << ',' << e.h << ',' << e.x << ',' << e.y << ',' << to_string(e.resolved) << ','
        << r.lhs << ',' << r.rhs << ',' << r.diff << '\n';
  return out.str();
}

FormulaReport formula_report_from_csv(std::string_view text) {
  FormulaReport r;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "p,n,d,h,x,y,resolved,lhs,rhs,diff") throw ParseError("report CSV: bad header");
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) throw ParseError("report CSV: expected 10 fields");
    const std::int64_t p = to_i64(parse_int(f[0]));
    const int n = static_cast<int>(to_i64(parse_int(f[1])));
    if (first) {
      r.p = p;
      r.n = n;
      r.lhs = parse_int(f[7]);
      r.rhs = parse_int(f[8]);
      r.diff = parse_int(f[9]);
      first = false;
    }
    r.entries.push_back({to_i64(parse_int(f[2])), to_i64(parse_int(f[3])), to_i64(parse_int(f[4])), to_i64(parse_int(f[5])),
                         resolved_from_string(f[6])});
  }
  return r;
}

std::string to_text(const FormulaReport& r) {
  std::ostringstream out;
  out << "p=" << r.p << " n=" << r.n << "\n";
  for (const auto& e : r.entries) {
    out << "  h(-" << e.d << ") = " << e.h << "   4*" << r.p << "^" << r.n << " = " << e.x << "^2 + " << e.d << "*" << e.y
        << "^2";
    if (e.resolved != ResolvedBy::Computed) out << "   [" << to_string(e.resolved) << "]";
    out << "\n";
  }
  for (auto d : r.undetermined) out << "  undetermined: -" << d << "\n";
  out << "lhs=" << r.lhs << " rhs=" << r.rhs << " diff=" << r.diff << "\n";
  return out.str();
}

std::string to_json(const CheckReport& r, int indent) {
  json j;
  j["pass"] = r.all_pass();
  j["checks"] = checks_json(r);
  return j.dump(indent);
}

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  for (const auto& c : r.items) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::string to_json(const P7Audit& a, int n, int indent) {
  json j;
  j["p"] = 7;
  j["n"] = n;
  j["degrees"] = a.degrees;
  j["degree_sum"] = a.degree_sum;
  j["expected_degree"] = a.expected_degree;
  j["checks"] = checks_json(a.report);
  return j.dump(indent);
}

std::string to_json(const std::vector<OrbitRecord>& orbits, int n, unsigned k, int indent) {
  json j;
  j["n"] = n;
  j["precision"] = k;
  j["orbits"] = json::array();
  for (const auto& o : orbits) {
    json rec;
    json modulus = json::array();
    for (const auto& c : o.lifted_factor.coeffs()) modulus.push_back(to_dec(c));
    rec["modulus"] = modulus;
    rec["period"] = o.period;
    json points = json::array();
    for (const auto& pt : o.points) {
      json coeffs = json::array();
      for (const auto& c : pt.coeffs()) coeffs.push_back(to_dec(c));
      points.push_back(coeffs);
    }
    rec["points"] = points;
    j["orbits"].push_back(rec);
  }
  return j.dump(indent);
}

}  // namespace cnf
