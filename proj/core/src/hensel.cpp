#include "cnf/hensel.hpp"

#include "cnf/error.hpp"

namespace cnf {

IntPoly poly_mod(const IntPoly& a, const Int& m) { return reduce_coeffs(a, m); }

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const Int& m) { return poly_mod(a * b, m); }

ZnDivResult divmod_monic(const IntPoly& a, const IntPoly& d, const Int& m) {
  if (d.is_zero() || mod_floor(d.lc(), m) != 1) throw DomainError("divisor must be monic modulo m");
  std::vector<Int> r = poly_mod(a, m).coeffs();
  const auto dd = static_cast<std::size_t>(d.degree());
  if (r.size() <= dd) return {IntPoly{}, IntPoly(std::move(r))};
  std::vector<Int> q(r.size() - dd);
  for (std::size_t i = q.size(); i-- > 0;) {
    Int c = mod_floor(r[i + dd], m);
    q[i] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) mpz_submul(r[i + j].get_mpz_t(), c.get_mpz_t(), d.coeffs()[j].get_mpz_t());
  }
  r.resize(dd);
  return {poly_mod(IntPoly(std::move(q)), m), poly_mod(IntPoly(std::move(r)), m)};
}

IntPoly hensel_lift_factor(const IntPoly& a, const ModPoly& h_bar_in, std::uint64_t p, unsigned k) {
  if (k == 0) throw DomainError("precision exponent must be positive");
  const ModPoly a_bar = reduce_mod(a, p);
  if (a_bar.degree() != a.degree()) throw DomainError("leading coefficient must be a unit modulo p");
  const ModPoly h_bar = h_bar_in.monic();
  if (h_bar.degree() <= 0) throw DomainError("factor must have positive degree");
  auto [g_bar, rem] = divmod(a_bar, h_bar);
  if (!rem.is_zero()) throw NotSimpleFactor("h_bar does not divide A mod p");
  ExtGcd eg = ext_gcd(g_bar, h_bar);
  if (eg.g.degree() != 0) throw NotSimpleFactor("h_bar is a repeated factor of A mod p");

  const Int pz(static_cast<unsigned long>(p));
  const Int target = ipow(pz, k);
  IntPoly g = lift(g_bar);
  IntPoly h = lift(h_bar);
  IntPoly s = lift(eg.s);
  IntPoly t = lift(eg.t);
  Int m = pz;
  const IntPoly one = IntPoly::constant(Int(1));
  while (m < target) {
    Int mm = m * m;
    if (mm > target) mm = target;
    IntPoly e = poly_mod(a - g * h, mm);
    auto [q, r] = divmod_monic(s * e, h, mm);
    IntPoly g2 = poly_mod(g + t * e + q * g, mm);
    IntPoly h2 = poly_mod(h + r, mm);
    IntPoly b = poly_mod(s * g2 + t * h2 - one, mm);
    auto [c, d] = divmod_monic(s * b, h2, mm);
    s = poly_mod(s - d, mm);
    t = poly_mod(t - t * b - c * g2, mm);
    g = std::move(g2);
    h = std::move(h2);
    m = mm;
  }
  return poly_mod(h, target);
}

}  // namespace cnf
