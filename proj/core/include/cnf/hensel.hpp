#pragma once

#include "cnf/bigint.hpp"
#include "cnf/modpoly.hpp"
#include "cnf/poly.hpp"

#include <cstdint>

namespace cnf {

// Arithmetic in (Z/M)[x] on IntPoly values with coefficients kept in [0, M).
IntPoly poly_mod(const IntPoly& a, const Int& m);
IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Int& m);

struct ZnDivResult {
  IntPoly quot;
  IntPoly rem;
};
// Division by a monic divisor in (Z/M)[x].
ZnDivResult divmod_monic(const IntPoly& a, const IntPoly& monic_divisor, const Int& m);

// Monic H with H = h_bar (mod p) and H | A (mod p^k), by precision-doubling Hensel steps.
// h_bar must be a simple factor of A mod p and lc(A) a unit mod p.
IntPoly hensel_lift_factor(const IntPoly& a, const ModPoly& h_bar, std::uint64_t p, unsigned k);

}  // namespace cnf
