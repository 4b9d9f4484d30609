#include "cnf/padic3.hpp"

#include "cnf/dynamics3.hpp"
#include "cnf/error.hpp"
#include "cnf/hensel.hpp"
#include "cnf/periods.hpp"

#include <random>

namespace cnf {

GaloisRing::GaloisRing(const IntPoly& modulus, unsigned k) : k_(k) {
  if (k == 0) throw DomainError("precision exponent must be positive");
  if (modulus.degree() < 1 || modulus.lc() != 1) throw DomainError("Galois ring modulus must be monic of positive degree");
  m_ = ipow(Int(3), k);
  modulus_ = reduce_coeffs(modulus, m_);
  residue_ = reduce_mod(modulus_, 3);
  if (!is_irreducible(residue_)) throw DomainError("Galois ring modulus must be irreducible mod 3");
}

GaloisRingElem::GaloisRingElem(GaloisRingPtr ring, const IntPoly& value) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("null Galois ring");
  value_ = divmod_monic(value, ring_->modulus(), ring_->characteristic()).rem;
}

GaloisRingElem GaloisRingElem::from_int(GaloisRingPtr ring, const Int& c) {
  return GaloisRingElem(std::move(ring), IntPoly::constant(c));
}

GaloisRingElem GaloisRingElem::gen(GaloisRingPtr ring) { return GaloisRingElem(std::move(ring), IntPoly::x()); }

std::vector<Int> GaloisRingElem::coeffs() const {
  std::vector<Int> out(static_cast<std::size_t>(ring_->degree()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = value_.coeff(i);
  return out;
}

ModPoly GaloisRingElem::residue() const { return reduce_mod(value_, 3) % ring_->residue_modulus(); }

void GaloisRingElem::same_ring(const GaloisRingElem& o) const {
  if (ring_ != o.ring_ && !(ring_->modulus() == o.ring_->modulus() && ring_->precision() == o.ring_->precision()))
    throw DomainError("Galois ring elements from different rings");
}

GaloisRingElem& GaloisRingElem::operator+=(const GaloisRingElem& o) {
  same_ring(o);
  value_ = reduce_coeffs(value_ + o.value_, ring_->characteristic());
  return *this;
}

GaloisRingElem& GaloisRingElem::operator-=(const GaloisRingElem& o) {
  same_ring(o);
  value_ = reduce_coeffs(value_ - o.value_, ring_->characteristic());
  return *this;
}

GaloisRingElem& GaloisRingElem::operator*=(const GaloisRingElem& o) {
  same_ring(o);
  value_ = divmod_monic(value_ * o.value_, ring_->modulus(), ring_->characteristic()).rem;
  return *this;
}

GaloisRingElem GaloisRingElem::operator-() const { return from_int(ring_, Int(0)) - *this; }

GaloisRingElem GaloisRingElem::inverse() const {
  const ModPoly r = residue();
  if (r.is_zero()) throw DomainError("element is not a unit in the Galois ring");
  const ExtGcd eg = ext_gcd(r, ring_->residue_modulus());
  // Newton: u <- u (2 - a u) doubles the 3-adic precision each step.
  GaloisRingElem u(ring_, lift(eg.s));
  const GaloisRingElem two = from_int(ring_, Int(2));
  for (unsigned prec = 1; prec < ring_->precision(); prec *= 2) u = u * (two - *this * u);
  return u;
}

GaloisRingElem pow(const GaloisRingElem& base, unsigned exp) {
  GaloisRingElem r = GaloisRingElem::from_int(base.ring(), Int(1));
  GaloisRingElem b = base;
  while (exp) {
    if (exp & 1U) r *= b;
    b *= b;
    exp >>= 1U;
  }
  return r;
}

GaloisRingElem eval_at(const IntPoly& a, const GaloisRingElem& z) {
  GaloisRingElem r = GaloisRingElem::from_int(z.ring(), Int(0));
  for (std::size_t i = a.size(); i-- > 0;) r = r * z + GaloisRingElem::from_int(z.ring(), a.coeffs()[i]);
  return r;
}

namespace {

// Coefficients of f(z, .) as a cubic in w.
std::vector<GaloisRingElem> cubic_in_w(const GaloisRingElem& z) {
  const BiPoly& f = core_curves().f;
  std::vector<GaloisRingElem> c;
  for (int j = 0; j <= f.deg_second(); ++j) c.push_back(eval_at(f.coeff_of_second(static_cast<std::size_t>(j)), z));
  return c;
}

GaloisRingElem eval_coeffs(const std::vector<GaloisRingElem>& c, const GaloisRingElem& w) {
  GaloisRingElem r = GaloisRingElem::from_int(w.ring(), Int(0));
  for (std::size_t i = c.size(); i-- > 0;) r = r * w + c[i];
  return r;
}

bool is_minus_one_mod3(const GaloisRingElem& z) {
  return (z + GaloisRingElem::from_int(z.ring(), Int(1))).residue().is_zero();
}

bool generates_residue_field(const GaloisRingElem& z) {
  const ModPoly r = z.residue();
  const ModPoly& h = z.ring()->residue_modulus();
  const int n = z.ring()->degree();
  for (std::int64_t m : divisors(n)) {
    if (m == n) continue;
    if (powmod(r, ipow(Int(3), static_cast<unsigned long>(m)), h) == r) return false;
  }
  return true;
}

}  // namespace

GaloisRingElem eval_f(const GaloisRingElem& z, const GaloisRingElem& w) { return eval_coeffs(cubic_in_w(z), w); }

GaloisRingElem branch_F(const GaloisRingElem& z) {
  if (is_minus_one_mod3(z)) throw DomainError("branch_F needs z != -1 (mod 3)");
  const std::vector<GaloisRingElem> c = cubic_in_w(z);
  std::vector<GaloisRingElem> dc;  // derivative in w
  for (std::size_t j = 1; j < c.size(); ++j)
    dc.push_back(c[j] * GaloisRingElem::from_int(z.ring(), Int(static_cast<unsigned long>(j))));
  GaloisRingElem w = z * z * z;
  unsigned steps = 1;
  for (unsigned prec = 1; prec < z.ring()->precision(); prec *= 2) ++steps;
  for (unsigned i = 0; i <= steps; ++i) {
    const GaloisRingElem val = eval_coeffs(c, w);
    if (val.is_zero()) return w;
    w -= val * eval_coeffs(dc, w).inverse();
  }
  if (!eval_coeffs(c, w).is_zero()) throw PrecisionExhausted("Newton iteration for F(z) did not converge");
  return w;
}

std::int64_t expected_orbit_count(int n) { return to_i64(moebius_sum(3, n)) / n; }

IntPoly default_modulus(int n) {
  if (n < 1) throw DomainError("degree must be positive");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(n)] = 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t v = code;
    for (int i = 0; i < n; ++i) {
      c[static_cast<std::size_t>(i)] = v % 3;
      v /= 3;
    }
    ModPoly cand(3, c);
    if (is_irreducible(cand)) return lift(cand);
  }
  throw Error("no irreducible polynomial found");
}

std::vector<OrbitRecord> lift_periodic(int n, unsigned k) {
  if (n < 1) throw DomainError("period must be positive");
  const IntPoly& rn = build_Rn(n);
  const ModFactorization fac = factor_mod_p(reduce_mod(rn, 3));
  std::vector<OrbitRecord> out;
  for (const auto& [h_bar, mult] : fac.factors) {
    if (h_bar.degree() != n) continue;
    if (mult != 1) throw NotSimpleFactor("degree-n factor of R_n mod 3 is repeated");
    const IntPoly lifted = hensel_lift_factor(rn, h_bar, 3, k);
    auto ring = std::make_shared<const GaloisRing>(lifted, k);
    OrbitRecord rec{GaloisRingElem::gen(ring), {}, 0, lifted};
    GaloisRingElem cur = rec.seed;
    for (int i = 0; i < n; ++i) {
      rec.points.push_back(cur);
      cur = branch_F(cur);
      if (cur == rec.seed) {
        rec.period = i + 1;
        break;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<GaloisRingElem> frobenius_samples(int count, int degree, unsigned k, std::uint64_t seed) {
  auto ring = std::make_shared<const GaloisRing>(default_modulus(degree), k);
  std::mt19937_64 rng(seed);
  const Int m = ring->characteristic();
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  std::vector<GaloisRingElem> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Int> c(static_cast<std::size_t>(degree));
    for (auto& x : c) x = gr.get_z_range(m);
    GaloisRingElem z(ring, IntPoly(std::move(c)));
    if (is_minus_one_mod3(z)) continue;
    out.push_back(std::move(z));
  }
  return out;
}

CheckReport verify_frobenius_lift(const std::vector<GaloisRingElem>& samples) {
  CheckReport rep;
  std::size_t cong = 0, avoids = 0, roots = 0;
  for (const auto& z : samples) {
    const GaloisRingElem w = branch_F(z);
    if (w.residue() == pow(z, 3).residue()) ++cong;
    if (!is_minus_one_mod3(w)) ++avoids;
    if (eval_f(z, w).is_zero()) ++roots;
  }
  const std::string of = " of " + std::to_string(samples.size());
  rep.add("F(z) = z^3 (mod 3)", cong == samples.size(), std::to_string(cong) + of);
  rep.add("F(z) != -1 (mod 3)", avoids == samples.size(), std::to_string(avoids) + of);
  rep.add("f(z, F(z)) = 0 (mod 3^k)", roots == samples.size(), std::to_string(roots) + of);
  return rep;
}

CheckReport verify_orbits(const std::vector<OrbitRecord>& orbits, int n) {
  CheckReport rep;
  const std::string tag = "n=" + std::to_string(n) + ": ";
  rep.add(tag + "orbit count = (1/n) sum mu(n/m) 3^m", static_cast<std::int64_t>(orbits.size()) == expected_orbit_count(n),
          std::to_string(orbits.size()) + " orbits");
  bool closed = true, on_curve = true, minimal = true, on_factor = true;
  for (const auto& o : orbits) {
    closed = closed && o.period == n && static_cast<int>(o.points.size()) == n && branch_F(o.points.back()) == o.seed;
    for (std::size_t i = 0; i < o.points.size(); ++i) {
      const GaloisRingElem& next = o.points[(i + 1) % o.points.size()];
      on_curve = on_curve && eval_f(o.points[i], next).is_zero();
      on_factor = on_factor && eval_at(o.lifted_factor, o.points[i]).is_zero();
      minimal = minimal && generates_residue_field(o.points[i]);
    }
  }
  rep.add(tag + "F^n(xi) = xi to full precision", closed);
  rep.add(tag + "f(xi, F(xi)) = 0 (mod 3^k)", on_curve);
  rep.add(tag + "orbit points are the roots of the lifted factor", on_factor);
  rep.add(tag + "residues generate F_{3^n}", minimal);
  return rep;
}

CheckReport verify_units(const std::vector<OrbitRecord>& orbits) {
  CheckReport rep;
  bool units = true, const_unit = true, product = true;
  for (const auto& o : orbits) {
    GaloisRingElem prod = GaloisRingElem::from_int(o.seed.ring(), Int(1));
    for (const auto& pt : o.points) {
      units = units && pt.is_unit();
      prod *= pt;
    }
    const Int c0 = o.lifted_factor.coeff(0);
    const_unit = const_unit && mod_floor(c0, Int(3)) != 0;
    const Int signed_c0 = (o.points.size() % 2 == 0) ? c0 : Int(-c0);
    product = product && prod == GaloisRingElem::from_int(o.seed.ring(), signed_c0);
  }
  rep.add("every periodic point is a unit", units);
  rep.add("lifted factor constant terms are units", const_unit);
  rep.add("orbit product = (-1)^n H(0)", product);
  return rep;
}

}  // namespace cnf
