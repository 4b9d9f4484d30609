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

// The degree-7 algebraic function F(x, y) for p = 7.
const BiPoly& f7();

inline constexpr int kMaxTowerLevel7 = 3;

// R^(n)(x, y) for p = 7, n <= 2, memoized.
const BiPoly& build_Rn7_bivariate(int n, const Progress& progress = {});
// R_n(x) = R^(n)(x, x); n = 3 uses one shared-variable resultant (slow).
const IntPoly& build_Rn7(int n, const Progress& progress = {});
// R_n / prod of the lower-period parts, with positive leading coefficient (n = 2: R_2/R_1, n = 3: R_3/R_1).
IntPoly build_Pn7(int n, const Progress& progress = {});

// The two sextic period-3 divisors of R_3.
IntPoly sextic_f1();
IntPoly sextic_f2();

// -(x^(7^n) - x)(x + 2)^(7^n - 1) over F_7.
ModPoly mod7_closed_form(int n);
// Compares R_n mod 7 with (-1)^(n+1)(x^(7^n) - x)(x + 2)^(7^n - 1); the detail notes whether the
// closed form's own sign holds.
CheckReport verify_mod7_for(const IntPoly& rn, int n);
CheckReport verify_mod7(int n);

// Degrees of the irreducible factors over Q of a primitive squarefree polynomial, certified by
// Hensel lifting a modular factorization and recombining with trial division.
struct RationalFactorDegrees {
  std::uint64_t prime = 0;          // prime used for lifting
  int modular_factor_count = 0;     // factors mod that prime
  std::vector<int> degrees;         // ascending
  std::vector<IntPoly> factors;     // primitive, positive leading coefficient
};
RationalFactorDegrees rational_factor_degrees(const IntPoly& a);

// Degree multiset pattern of a squarefree polynomial mod q (ascending).
std::vector<int> modular_degree_pattern(const IntPoly& a, std::uint64_t q);
// Whether the degree multiset `coarse` can be obtained by grouping the parts of `fine`.
bool is_coarsening(const std::vector<int>& fine, const std::vector<int>& coarse);

struct P7Audit {
  std::vector<std::int64_t> degrees;  // 6 h(-d) over the period-n discriminants
  std::int64_t degree_sum = 0;
  std::int64_t expected_degree = 0;   // 2 sum mu(n/k) 7^k
  CheckReport report;
};
// Degree accounting against D_{n,7}; n = 2 also certifies the factor degrees of P_2,
// n = 3 uses R_3 when `rn3` is supplied (slow tier).
P7Audit audit_p7(int n, ClassNumberCache& cache, const IntPoly* rn3 = nullptr);

}  // namespace cnf
