#include "support/paper_data.hpp"
#include "support/properties.hpp"

#include "cnf/dynamics3.hpp"
#include "cnf/error.hpp"
#include "cnf/p7ext.hpp"
#include "cnf/padic3.hpp"
#include "cnf/periods.hpp"
#include "cnf/report.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using namespace cnf;

bool g_slow = false;

std::map<std::int64_t, std::int64_t> printed_map(const paper::PrintedTable& t) {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& e : t.entries) {
    std::string expr = e.expr;
    for (const auto& er : paper::errata())
      if (er.p == t.p && er.n == t.n && er.printed == expr) expr = er.corrected;
    out.emplace(paper::eval_product(expr), e.h);
  }
  return out;
}

// verify_formula against a printed row: lhs, rhs, diff and every (d, h).
void check_table(CheckReport& rep, ClassNumberCache& cache, const paper::PrintedTable& t) {
  const FormulaReport r = verify_formula(t.p, t.n, cache);
  std::map<std::int64_t, std::int64_t> computed;
  for (const auto& e : r.entries) computed.emplace(e.d, e.h);
  const std::string tag = "p=" + std::to_string(t.p) + " n=" + std::to_string(t.n);
  rep.add(tag + " (lhs, rhs, diff)", r.lhs == t.lhs && r.rhs == t.rhs && r.diff == t.lhs - t.rhs,
          "(" + Int(r.lhs).get_str() + ", " + Int(r.rhs).get_str() + ", " + Int(r.diff).get_str() + ")");
  rep.add(tag + " discriminants and h as printed", computed == printed_map(t),
          std::to_string(computed.size()) + " entries");
  rep.add(tag + " nothing undetermined", r.undetermined.empty());
}

std::vector<paper::PrintedTable> tables_for(std::int64_t p) {
  std::vector<paper::PrintedTable> out;
  for (const auto& t : paper::printed_tables())
    if (t.p == p) out.push_back(t);
  return out;
}

CheckReport criterion1(std::vector<std::string>&) {
  CheckReport rep;
  ClassNumberCache cache;
  for (const auto& t : tables_for(3)) check_table(rep, cache, t);
  const std::map<int, std::int64_t> lhs = {{2, 2}, {3, 8}, {4, 24}, {5, 80}, {6, 232}};
  for (const auto& [n, v] : lhs)
    rep.add("p=3 n=" + std::to_string(n) + " lhs = " + std::to_string(v), verify_formula(3, n, cache).lhs == v);
  std::map<std::int64_t, int> profile;
  for (const auto& w : enumerate_set(3, 6)) ++profile[cache.class_number(w.d)];
  rep.add("n=6 class-number profile 2x2 + 3x6 + 8x12 + 1x18 + 4x24",
          profile == std::map<std::int64_t, int>{{2, 2}, {6, 3}, {12, 8}, {18, 1}, {24, 4}});
  return rep;
}

CheckReport criterion2(std::vector<std::string>& deferred) {
  CheckReport rep;
  const auto w68 = find_period(3, 68, 20);
  rep.add("find_period(3, 68) = 12", w68 && w68->n == 12,
          w68 ? "x=" + std::to_string(w68->x) + " y=" + std::to_string(w68->y) : "none");
  if (g_slow) {
    const auto w = find_period(3, 356, 40);
    rep.add("find_period(3, 356) = 36", w && w->n == 36, w ? "n=" + std::to_string(w->n) : "none");
  } else {
    deferred.push_back("find_period(3, 356) = 36");
  }
  return rep;
}

CheckReport criterion3(std::vector<std::string>&) {
  CheckReport rep;
  const IntPoly r1 = IntPoly{0, -1} * IntPoly{-1, 1} * IntPoly{1, 3, -6, 1};
  const IntPoly deg12{1, 12, 4, -208, 778, -1660, 2354, -2308, 1561, -712, 202, -24, 1};
  rep.add("R_1 matches the printed expansion", build_Rn(1) == r1);
  rep.add("R_2 matches the printed expansion", build_Rn(2) == r1 * deg12);
  rep.add("disc of the degree-12 factor = 2^48 3^30 5^6 7^6",
          discriminant(deg12) == ipow(Int(2), 48) * ipow(Int(3), 30) * ipow(Int(5), 6) * ipow(Int(7), 6));
  for (int n = 1; n <= 4; ++n) {
    const IntPoly& rn = build_Rn(n);
    const std::string tag = "n=" + std::to_string(n) + " ";
    rep.add(tag + "deg R_n = 2 3^n - 1", Int(rn.degree()) == 2 * ipow(Int(3), n) - 1, std::to_string(rn.degree()));
    rep.add(tag + "gcd(R_n, R_n') = 1", is_squarefree(rn));
    rep.merge(verify_prop1(n));
  }
  for (int n = 1; n <= 3; ++n) rep.merge(verify_prop2(n));
  ClassNumberCache cache;
  const int expected[] = {0, 0, 12, 48, 144};
  for (int n = 2; n <= 4; ++n) {
    const DegreeAudit a = factor_degree_audit(n, cache);
    rep.add("deg P_" + std::to_string(n) + " = " + std::to_string(expected[n]) + " = 6 sum h",
            a.pn_degree == expected[n] && a.degree_sum == expected[n], std::to_string(a.pn_degree));
    rep.merge(a.report);
  }
  return rep;
}

CheckReport criterion4(std::vector<std::string>&) { return verify_identities(); }

CheckReport criterion5(std::vector<std::string>&) {
  CheckReport rep;
  const auto ring = std::make_shared<const GaloisRing>(default_modulus(1), kDefaultPrecision);
  for (int z : {0, 1})
    rep.add("F(" + std::to_string(z) + ") = " + std::to_string(z),
            branch_F(GaloisRingElem::from_int(ring, z)) == GaloisRingElem::from_int(ring, z));
  for (int n = 1; n <= 4; ++n) {
    const auto samples = frobenius_samples(100, n, kDefaultPrecision, 7 + n);
    CheckReport r = verify_frobenius_lift(samples);
    rep.add("F(z) = z^3 mod 3 on 100 samples in degree " + std::to_string(n), r.all_pass());
  }
  for (int n = 2; n <= 4; ++n) {
    const auto orbits = lift_periodic(n);
    rep.add("N = " + std::to_string(expected_orbit_count(n)) + " orbits for n=" + std::to_string(n),
            static_cast<std::int64_t>(orbits.size()) == expected_orbit_count(n), std::to_string(orbits.size()));
    rep.merge(verify_orbits(orbits, n));
    rep.merge(verify_units(orbits));
  }
  return rep;
}

CheckReport criterion6(std::vector<std::string>&) {
  CheckReport rep;
  ClassNumberCache cache;
  for (const auto& t : paper::printed_tables())
    if (t.p >= 11) check_table(rep, cache, t);
  return rep;
}

CheckReport criterion7(std::vector<std::string>& deferred) {
  CheckReport rep;
  ClassNumberCache cache;
  for (const auto& t : tables_for(7)) check_table(rep, cache, t);
  for (int n = 2; n <= 4; ++n) {
    const FormulaReport r = verify_formula(7, n, cache);
    int registry = 0;
    for (const auto& e : r.entries) registry += e.resolved == ResolvedBy::Registry ? 1 : 0;
    rep.add("p=7 n=" + std::to_string(n) + " registry-flagged entries marked", n == 2 || registry > 0,
            std::to_string(registry) + " registry");
  }
  rep.add("Eisenstein check excludes -27 at n=2", eisenstein_resolution(27, 2).verdict == Membership::NonMember);
  rep.add("Eisenstein check includes -3^5 at n=3", eisenstein_resolution(243, 3).verdict == Membership::Member);
  rep.add("Eisenstein check includes -4 3^3 at n=3", eisenstein_resolution(108, 3).verdict == Membership::Member);
  const RationalFactorDegrees cert = rational_factor_degrees(build_Pn7(2));
  rep.add("R_2 primitive factor degrees {12, 24, 24, 24}", cert.degrees == std::vector<int>{12, 24, 24, 24});
  rep.add("disc(f1) = -2^4 3^3 5^6 7^4",
          discriminant(sextic_f1()) == -(ipow(Int(2), 4) * ipow(Int(3), 3) * ipow(Int(5), 6) * ipow(Int(7), 4)));
  for (int n = 1; n <= 2; ++n) rep.merge(verify_mod7(n));
  if (g_slow) {
    const IntPoly& r3 = build_Rn7(3);
    rep.merge(audit_p7(3, cache, &r3).report);
  } else {
    deferred.push_back("f1, f2 divide the p = 7 R_3");
  }
  return rep;
}

CheckReport criterion8(std::vector<std::string>&) {
  const auto scratch = std::filesystem::temp_directory_path() / ("cnf_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(scratch);
  CheckReport rep = props::all_properties(scratch);
  std::filesystem::remove_all(scratch);
  return rep;
}

struct Criterion {
  int number;
  const char* title;
  std::function<CheckReport(std::vector<std::string>&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const char* env = std::getenv("CNF_TIER");
  g_slow = env && std::string(env) == "slow";
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--tier" && i + 1 < argc) g_slow = std::string(argv[++i]) == "slow";
    else if (a == "--tier=slow") g_slow = true;
  }

  const std::vector<Criterion> criteria = {
      {1, "D_{n,3} sets and sums for n = 2..6", criterion1},
      {2, "period outliers -68 and -4*89", criterion2},
      {3, "R_n structure for n <= 4", criterion3},
      {4, "identity suite", criterion4},
      {5, "3-adic suite", criterion5},
      {6, "conjecture tables for p = 11, 23, 47, 59, 71, 83", criterion6},
      {7, "p = 7 sums, memberships and p7ext checks", criterion7},
      {8, "property suites", criterion8},
  };

  std::cout << "tier: " << (g_slow ? "slow" : "fast") << "\n";
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> deferred;
    CheckReport rep;
    std::string error;
    try {
      rep = c.run(deferred);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && rep.all_pass();
    failures += pass ? 0 : 1;
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " ("
              << rep.items.size() << " checks, " << static_cast<int>(secs * 10) / 10.0 << " s)";
    if (!deferred.empty()) std::cout << "; slow-tier items not run";
    std::cout << "\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& item : rep.items)
      if (!item.pass) std::cout << "    failed: " << item.name << (item.detail.empty() ? "" : " [" + item.detail + "]") << "\n";
    for (const auto& d : deferred) std::cout << "    not run (fast tier): " << d << "\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
