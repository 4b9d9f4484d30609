#pragma once

#include "cnf/bipoly.hpp"
#include "cnf/check.hpp"
#include "cnf/modpoly.hpp"
#include "cnf/poly.hpp"
#include "cnf/quadforms.hpp"
#include "cnf/resultant.hpp"

#include <cstdint>
#include <vector>

namespace cnf {

// The cubic algebraic function f(z, w) and its companions g, h, k1, k2.
struct CoreCurves {
  BiPoly f;   // (z, w)
  BiPoly g;   // (x, y)
  BiPoly h;   // (x, z)
  BiPoly k1;  // (z, w)
  BiPoly k2;  // (z, w)
};

const CoreCurves& core_curves();

// Highest tower level for build_Rn.
inline constexpr int kMaxTowerLevel = 4;
// Highest level for which the full bivariate R^(n)(x, x_n) is kept.
inline constexpr int kMaxBivariateLevel = 3;

// R^(n)(x, x_n): R^(1) = f, R^(n) = Res_t(R^(n-1)(x, t), f(t, x_n)). Memoized.
const BiPoly& build_Rn_bivariate(int n, const Progress& progress = {});
// R_n(x) = R^(n)(x, x). Memoized; n = 4 goes through one shared-variable resultant.
const IntPoly& build_Rn(int n, const Progress& progress = {});
// prod_{k | n} R_k^{mu(n/k)}, normalized to positive leading coefficient.
IntPoly build_Pn(int n, const Progress& progress = {});

// -(x^(3^n) - x)(x + 1)^(3^n - 1) over F_3.
ModPoly prop1_closed_form(int n);
CheckReport verify_prop1(int n);
// Same check against a caller-supplied R_n (negative controls).
CheckReport verify_prop1_for(const IntPoly& rn, int n);
CheckReport verify_prop2(int n);
CheckReport verify_identities();

struct DegreeAudit {
  std::vector<std::int64_t> degrees;  // 6 h(-d) over the period-n discriminants
  std::int64_t degree_sum = 0;
  int pn_degree = 0;
  int expected_degree = 0;  // 2 sum mu(n/k) 3^k
  CheckReport report;
};
DegreeAudit factor_degree_audit(int n, ClassNumberCache& cache);

// Product of the Prop. 2 leading-coefficient factors and T_n.
IntPoly prop2_leading(int n);
IntPoly prop2_constant(int n);

// Substitution helpers shared with the tests.
IntPoly substitute_second(const BiPoly& a, const IntPoly& q);  // a(z, q(z))
BiPoly derivative_second(const BiPoly& a);
bool congruent_mod(const BiPoly& a, const BiPoly& b, const Int& m);

}  // namespace cnf
