#pragma once

#include "cnf/bigint.hpp"
#include "cnf/bipoly.hpp"
#include "cnf/poly.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace cnf {

using Progress = std::function<void(std::size_t done, std::size_t total)>;

// Res(A, B) for formal degrees deg_a >= deg A and deg_b >= deg B (Sylvester matrix of that size).
Int resultant_formal(const IntPoly& a, int deg_a, const IntPoly& b, int deg_b);

// Unique polynomial of degree <= ys.size()-1 taking ys[i] at x0 + i; throws NotDivisible when
// the interpolant is not integral.
IntPoly interpolate_consecutive(const std::vector<Int>& ys, const Int& x0);

// Res_t(A(x, t), B(t, y)) as a bivariate polynomial in (x, y).
BiPoly resultant_bivariate(const BiPoly& a_xt, const BiPoly& b_ty, const Progress& progress = {});

// Res_t(A(x, t), B(x, t)) as a polynomial in x.
IntPoly resultant_shared(const BiPoly& a_xt, const BiPoly& b_xt, const Progress& progress = {});

}  // namespace cnf
