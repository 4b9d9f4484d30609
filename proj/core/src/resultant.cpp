#include "cnf/resultant.hpp"

#include "cnf/error.hpp"

namespace cnf {

Int resultant_formal(const IntPoly& a, int deg_a, const IntPoly& b, int deg_b) {
  if (a.degree() > deg_a || b.degree() > deg_b) throw DomainError("formal degree below actual degree");
  if (deg_a == 0) return ipow(a.coeff(0), static_cast<unsigned long>(deg_b));
  if (deg_b == 0) return ipow(b.coeff(0), static_cast<unsigned long>(deg_a));
  if (a.is_zero() || b.is_zero()) return Int(0);
  const int da = deg_a - a.degree();
  const int db = deg_b - b.degree();
  if (da > 0 && db > 0) return Int(0);
  Int r = resultant(a, b);
  if (da > 0) {
    r *= ipow(b.lc(), static_cast<unsigned long>(da));
    if ((da % 2 == 1) && (deg_b % 2 == 1)) r = -r;
  } else if (db > 0) {
    r *= ipow(a.lc(), static_cast<unsigned long>(db));
  }
  return r;
}

IntPoly interpolate_consecutive(const std::vector<Int>& ys, const Int& x0) {
  if (ys.empty()) return {};
  const std::size_t k = ys.size() - 1;
  // forward differences: diff[j] = Delta^j y_0
  std::vector<Int> work = ys;
  std::vector<Int> diff(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    diff[j] = work[0];
    for (std::size_t i = 0; i + 1 < work.size() - j; ++i) work[i] = work[i + 1] - work[i];
  }
  // K! * P(x) = sum_j Delta^j (K!/j!) prod_{i<j} (x - x0 - i), in Horner form.
  std::vector<Int> scale(k + 1);  // K!/j!
  scale[k] = 1;
  for (std::size_t j = k; j-- > 0;) scale[j] = scale[j + 1] * static_cast<unsigned long>(j + 1);
  IntPoly t = IntPoly::constant(diff[k] * scale[k]);
  for (std::size_t j = k; j-- > 0;) {
    IntPoly lin({Int(-(x0 + static_cast<unsigned long>(j))), Int(1)});
    t = lin * t;
    t += IntPoly::constant(diff[j] * scale[j]);
  }
  return exact_div(t, scale[0]);
}

namespace {

Int centred_node(std::size_t i, std::size_t count) {
  return Int(static_cast<long>(i)) - Int(static_cast<long>(count / 2));
}

}  // namespace

BiPoly resultant_bivariate(const BiPoly& a_xt, const BiPoly& b_ty, const Progress& progress) {
  const int m = a_xt.deg_second();
  const int k = b_ty.deg_first();
  if (m <= 0 || k <= 0) throw DegenerateInput("resultant needs positive degree in the eliminated variable");
  const int bound_x = std::max(a_xt.deg_first(), 0) * k;
  const int bound_y = std::max(b_ty.deg_second(), 0) * m;
  const auto nx = static_cast<std::size_t>(bound_x) + 1;
  const auto ny = static_cast<std::size_t>(bound_y) + 1;
  const Int x0 = centred_node(0, nx);
  const Int y0 = centred_node(0, ny);

  std::vector<IntPoly> b_at(ny);
  for (std::size_t j = 0; j < ny; ++j) b_at[j] = b_ty.eval_second(centred_node(j, ny));

  // grid[i][j] = Res at (x_i, y_j); interpolate each row in y, then each y-coefficient in x.
  std::vector<IntPoly> rows_in_y(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    IntPoly a_at = a_xt.eval_first(centred_node(i, nx));
    std::vector<Int> vals(ny);
    for (std::size_t j = 0; j < ny; ++j) vals[j] = resultant_formal(a_at, m, b_at[j], k);
    rows_in_y[i] = interpolate_consecutive(vals, y0);
    if (progress) progress(i + 1, nx);
  }
  std::vector<IntPoly> out_rows;  // out_rows[i] = coefficient of x^i as a polynomial in y
  std::vector<std::vector<Int>> by_x(static_cast<std::size_t>(bound_y) + 1, std::vector<Int>(nx));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(bound_y); ++j) by_x[j][i] = rows_in_y[i].coeff(j);
  std::vector<IntPoly> coeff_y(by_x.size());
  for (std::size_t j = 0; j < by_x.size(); ++j) coeff_y[j] = interpolate_consecutive(by_x[j], x0);
  out_rows.resize(nx);
  for (std::size_t j = 0; j < coeff_y.size(); ++j)
    for (std::size_t i = 0; i < coeff_y[j].size(); ++i) {
      IntPoly& r = out_rows[i];
      r.set_coeff(j, coeff_y[j].coeffs()[i]);
    }
  return BiPoly(std::move(out_rows));
}

IntPoly resultant_shared(const BiPoly& a_xt, const BiPoly& b_xt, const Progress& progress) {
  const int m = a_xt.deg_second();
  const int k = b_xt.deg_second();
  if (m <= 0 || k <= 0) throw DegenerateInput("resultant needs positive degree in the eliminated variable");
  const int bound = std::max(a_xt.deg_first(), 0) * k + std::max(b_xt.deg_first(), 0) * m;
  const auto n = static_cast<std::size_t>(bound) + 1;
  std::vector<Int> vals(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Int x = centred_node(i, n);
    vals[i] = resultant_formal(a_xt.eval_first(x), m, b_xt.eval_first(x), k);
    if (progress) progress(i + 1, n);
  }
  return interpolate_consecutive(vals, centred_node(0, n));
}

}  // namespace cnf
