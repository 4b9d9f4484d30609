#include "cnf/dynamics3.hpp"

#include "cnf/error.hpp"
#include "cnf/gamma_field.hpp"
#include "cnf/periods.hpp"

#include <array>
#include <map>
#include <mutex>

namespace cnf {

namespace {

std::mutex g_memo_mu;

IntPoly gamma_cubic() { return IntPoly{1, 3, -6, 1}; }  // x^3 - 6x^2 + 3x + 1

unsigned long pow3(int n) {
  unsigned long r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

void require_level(int n, int hi) {
  if (n < 1) throw DomainError("tower level must be >= 1");
  if (n > hi) throw ResourceLimit("tower level " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(hi));
}

// Polynomials in one variable with GammaField coefficients, enough for Eq. 5.6.
using GPoly = std::vector<GammaField>;

GPoly gmul(const GPoly& a, const GPoly& b) {
  GPoly r(a.size() + b.size() - 1, GammaField(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

GPoly gpow(const GPoly& a, int e) {
  GPoly r{GammaField(1)};
  for (int i = 0; i < e; ++i) r = gmul(r, a);
  return r;
}

// Moebius transformation z -> (a z + b) / (c z + d).
using Mobius = std::array<GammaField, 4>;

Mobius compose(const Mobius& outer, const Mobius& inner) {
  return {outer[0] * inner[0] + outer[1] * inner[2], outer[0] * inner[1] + outer[1] * inner[3],
          outer[2] * inner[0] + outer[3] * inner[2], outer[2] * inner[1] + outer[3] * inner[3]};
}

bool projectively_equal(const Mobius& a, const Mobius& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

std::string sizes(const IntPoly& a) { return "degree " + std::to_string(a.degree()); }

}  // namespace

const CoreCurves& core_curves() {
  static const CoreCurves curves{
      BiPoly::from_terms({{1, 0, 3}, {-1, 3, 2}, {6, 2, 2}, {-6, 1, 2}, {-1, 0, 2},
                          {1, 3, 1}, {-3, 2, 1}, {3, 1, 1}, {1, 0, 1}, {-1, 3, 0}}),
      BiPoly::from_terms({{1, 3, 2}, {3, 3, 1}, {9, 3, 0}, {-1, 0, 3}, {-18, 0, 2}, {-108, 0, 1}, {-216, 0, 0}}),
      BiPoly::from_terms({{1, 0, 3}, {-3, 0, 2}, {-1, 1, 2}, {1, 1, 1}, {1, 0, 0}}),
      BiPoly::from_terms({{1, 3, 3}, {-2, 3, 2}, {-3, 2, 2}, {2, 3, 1}, {3, 1, 2}, {-1, 3, 0},
                          {1, 0, 2}, {3, 2, 0}, {-1, 0, 1}, {-3, 1, 0}, {1, 0, 0}}),
      BiPoly::from_terms({{1, 3, 3}, {-3, 2, 3}, {-1, 3, 2}, {3, 1, 3}, {9, 2, 2}, {1, 3, 1}, {-1, 0, 3},
                          {-9, 1, 2}, {-6, 2, 1}, {2, 0, 2}, {6, 1, 1}, {-2, 0, 1}, {1, 0, 0}}),
  };
  return curves;
}

IntPoly substitute_second(const BiPoly& a, const IntPoly& q) {
  IntPoly out;
  for (std::size_t i = 0; i < a.rows().size(); ++i) out += a.rows()[i].compose(q).shift(i);
  return out;
}

BiPoly derivative_second(const BiPoly& a) {
  std::vector<IntPoly> rows;
  for (const auto& r : a.rows()) rows.push_back(r.derivative());
  return BiPoly(std::move(rows));
}

bool congruent_mod(const BiPoly& a, const BiPoly& b, const Int& m) {
  const BiPoly diff = a - b;
  for (const auto& row : diff.rows())
    if (!reduce_coeffs(row, m).is_zero()) return false;
  return true;
}

const BiPoly& build_Rn_bivariate(int n, const Progress& progress) {
  require_level(n, kMaxBivariateLevel);
  static std::map<int, BiPoly> memo;
  {
    std::lock_guard lock(g_memo_mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  BiPoly r = n == 1 ? core_curves().f : resultant_bivariate(build_Rn_bivariate(n - 1), core_curves().f, progress);
  std::lock_guard lock(g_memo_mu);
  return memo.emplace(n, std::move(r)).first->second;
}

const IntPoly& build_Rn(int n, const Progress& progress) {
  require_level(n, kMaxTowerLevel);
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard lock(g_memo_mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPoly r;
  if (n <= kMaxBivariateLevel) {
    r = build_Rn_bivariate(n, progress).diagonal();
  } else {
    // R_n(x) = Res_t(R^(n-1)(x, t), f(t, x)) without forming R^(n).
    r = resultant_shared(build_Rn_bivariate(n - 1), core_curves().f.swapped(), progress);
  }
  std::lock_guard lock(g_memo_mu);
  return memo.emplace(n, std::move(r)).first->second;
}

IntPoly build_Pn(int n, const Progress& progress) {
  require_level(n, kMaxTowerLevel);
  if (n < 2) throw DomainError("P_n is defined for n >= 2");
  IntPoly num = IntPoly::constant(Int(1));
  IntPoly den = IntPoly::constant(Int(1));
  for (std::int64_t k : divisors(n)) {
    const int mu = mobius(n / k);
    if (mu == 1) num *= build_Rn(static_cast<int>(k), progress);
    if (mu == -1) den *= build_Rn(static_cast<int>(k), progress);
  }
  IntPoly p = exact_div(num, den);
  if (sgn(p.lc()) < 0) p = -p;
  return p;
}

ModPoly prop1_closed_form(int n) {
  const unsigned long q = pow3(n);
  const ModPoly x_q_minus_x = ModPoly::monomial(3, 1, q) - ModPoly::monomial(3, 1, 1);
  const ModPoly x_plus_1(3, {1, 1});
  return -(x_q_minus_x * pow(x_plus_1, static_cast<unsigned>(q - 1)));
}

CheckReport verify_prop1_for(const IntPoly& rn, int n) {
  CheckReport rep;
  const ModPoly got = reduce_mod(rn, 3);
  rep.add("R_" + std::to_string(n) + " = -(x^(3^n) - x)(x + 1)^(3^n - 1) mod 3", got == prop1_closed_form(n),
          sizes(rn));
  return rep;
}

CheckReport verify_prop1(int n) {
  CheckReport rep = verify_prop1_for(build_Rn(n), n);
  if (n <= kMaxBivariateLevel) {
    const unsigned long q = pow3(n);
    const BiPoly x_q = BiPoly::in_first(IntPoly::monomial(Int(1), q));
    const BiPoly xn = BiPoly::in_second(IntPoly::x());
    const BiPoly expected = -((x_q - xn) * BiPoly::in_second(pow(IntPoly{1, 1}, static_cast<unsigned>(q - 1))));
    rep.add("R^(" + std::to_string(n) + ")(x, x_n) = -(x^(3^n) - x_n)(x_n + 1)^(3^n - 1) mod 3",
            congruent_mod(build_Rn_bivariate(n), expected, Int(3)));
  }
  return rep;
}

IntPoly prop2_leading(int n) {
  return -(IntPoly{1, -1, 1} * pow(gamma_cubic(), static_cast<unsigned>(pow3(n - 1) - 1)));
}

IntPoly prop2_constant(int n) { return IntPoly::x() * (-prop2_leading(n)); }

CheckReport verify_prop2(int n) {
  require_level(n, kMaxBivariateLevel);
  const BiPoly& r = build_Rn_bivariate(n);
  const auto q = static_cast<int>(pow3(n));
  const std::string tag = "n=" + std::to_string(n) + ": ";
  CheckReport rep;
  rep.add(tag + "deg_x R^(n) = 3^n", r.deg_first() == q, std::to_string(r.deg_first()));
  const IntPoly lead = r.coeff_of_first(static_cast<std::size_t>(q));
  rep.add(tag + "leading x-coefficient = -(x_n^2 - x_n + 1)(x_n^3 - 6x_n^2 + 3x_n + 1)^(3^(n-1) - 1)",
          lead == prop2_leading(n));
  std::vector<IntPoly> s_rows(r.rows().begin(), r.rows().begin() + q);
  const BiPoly s(std::move(s_rows));
  const IntPoly t = prop2_constant(n);
  rep.add(tag + "S_n(0, x_n) = T_n(x_n)", s.coeff_of_first(0) == t);
  rep.add(tag + "deg_x S_n <= 3^n - 1", s.deg_first() <= q - 1, std::to_string(s.deg_first()));
  rep.add(tag + "deg_{x_n} S_n = 3^n", s.deg_second() == q, std::to_string(s.deg_second()));
  const BiPoly s_minus_t = s - BiPoly::in_second(t);
  rep.add(tag + "deg_{x_n}(S_n - T_n) <= 3^n - 1", s_minus_t.deg_second() <= q - 1,
          std::to_string(s_minus_t.deg_second()));
  if (n == 1) {
    const BiPoly s1 = BiPoly::from_terms({{6, 2, 2}, {-3, 2, 1}, {-6, 1, 2}, {3, 1, 1}, {1, 0, 3}, {-1, 0, 2}, {1, 0, 1}});
    rep.add(tag + "S_1 matches the displayed expansion", s == s1);
  }
  return rep;
}

CheckReport verify_identities() {
  const CoreCurves& c = core_curves();
  CheckReport rep;
  const IntPoly z3 = IntPoly::monomial(Int(1), 3);
  const ModPoly z_plus_1_12 = pow(ModPoly(3, {1, 1}), 12);

  rep.add("f(z, w) = w^3 + (-z^3+6z^2-6z-1)w^2 + (z^3-3z^2+3z+1)w - z^3",
          c.f == BiPoly::in_second(IntPoly::monomial(Int(1), 3)) +
                     BiPoly::in_first(IntPoly{-1, -6, 6, -1}) * BiPoly::in_second(IntPoly::monomial(Int(1), 2)) +
                     BiPoly::in_first(IntPoly{1, 3, -3, 1}) * BiPoly::in_second(IntPoly::x()) -
                     BiPoly::in_first(z3));

  // Eq. 2.5
  rep.add("k1(z, z^3) = (z + 1)^12 mod 3", reduce_mod(substitute_second(c.k1, z3), 3) == z_plus_1_12);
  rep.add("k2(z, z^3) = (z + 1)^12 mod 3", reduce_mod(substitute_second(c.k2, z3), 3) == z_plus_1_12);
  rep.add("f(z, z^3) = 0 mod 3", reduce_mod(substitute_second(c.f, z3), 3).is_zero());
  const BiPoly w = BiPoly::in_second(IntPoly::x());
  const BiPoly zc = BiPoly::in_first(z3);
  const BiPoly w1sq = pow(w + BiPoly::constant(Int(1)), 2);
  rep.add("k1 = (w z^3 + 2 z^3 + 1)(w + 1)^2 mod 3",
          congruent_mod(c.k1, (w * zc + zc * Int(2) + BiPoly::constant(Int(1))) * w1sq, Int(3)));
  rep.add("k2 = (w z^3 + 2 w + 1)(w + 1)^2 mod 3",
          congruent_mod(c.k2, (w * zc + w * Int(2) + BiPoly::constant(Int(1))) * w1sq, Int(3)));
  rep.add("f = (2 z^3 + w)(w + 1)^2 mod 3", congruent_mod(c.f, (zc * Int(2) + w) * w1sq, Int(3)));

  // Triple resultant: Res_y(Res_x(g(x, y), h(x, z)), h(y, w)) = -k1 k2 f
  const BiPoly g_yz = resultant_bivariate(c.g.swapped(), c.h);
  const BiPoly triple = resultant_bivariate(g_yz.swapped(), c.h);
  const BiPoly k1k2f = c.k1 * c.k2 * c.f;
  rep.add("Res_y(Res_x(g, h), h) = -k1 k2 f", triple == -k1k2f);

  // Eq. 2.6 with denominators cleared
  const IntPoly p_cubic{1, 0, -3, 1};  // z^3 - 3z^2 + 1
  const IntPoly q_quad{0, -1, 1};      // z(z - 1)
  const BiPoly pz = BiPoly::in_first(p_cubic), qz = BiPoly::in_first(q_quad);
  const BiPoly pw = BiPoly::in_second(p_cubic), qw = BiPoly::in_second(q_quad);
  const BiPoly lhs26 = (pw * pw + pw * qw * Int(3) + qw * qw * Int(9)) * qw * pow(pz, 3) -
                       pow(pw + qw * Int(6), 3) * pow(qz, 3);
  rep.add("Eq. 2.6: g(P(z)/Q(z), P(w)/Q(w)) Q(z)^3 Q(w)^3 = -k1 k2 f", lhs26 == -k1k2f);

  // f(x, y) - (y - x)^3 = -y(y - 1)(x^3 - 6x^2 + 3x + 1)
  const BiPoly y_minus_x = BiPoly::in_second(IntPoly::x()) - BiPoly::in_first(IntPoly::x());
  rep.add("f(x, y) - (y - x)^3 = -y(y - 1)(x^3 - 6x^2 + 3x + 1)",
          c.f - pow(y_minus_x, 3) == -(BiPoly::in_second(IntPoly{0, -1, 1}) * BiPoly::in_first(gamma_cubic())));

  // disc_w f = -Res_w(f, f_w) for the monic cubic in w
  const IntPoly disc = -resultant_shared(c.f, derivative_second(c.f));
  const IntPoly expected_disc = IntPoly::constant(Int(-3)) * pow(p_cubic, 2) * pow(gamma_cubic(), 2);
  rep.add("disc_w f = -3(z^3 - 3z^2 + 1)^2 (z^3 - 6z^2 + 3z + 1)^2", disc == expected_disc);

  // Over Q(gamma)
  const GammaField t = GammaField::gen();
  const GammaField eps = GammaField(22) * t * t - GammaField(13) * t - GammaField(4);
  rep.add("gamma^3 - 6 gamma^2 + 3 gamma + 1 = 0", (t * t * t - GammaField(6) * t * t + GammaField(3) * t + 1).is_zero());
  rep.add("22 gamma^2 - 13 gamma - 4 = gamma^2 (gamma - 1)^2", eps == t * t * (t - 1) * (t - 1));

  // Eq. 5.2: f(gamma, w) = (w - gamma)^3
  {
    bool ok = true;
    const GPoly w_minus_g_cubed = gpow(GPoly{-t, GammaField(1)}, 3);
    for (int j = 0; j <= 3; ++j) {
      GammaField s(0);
      const IntPoly col = c.f.coeff_of_second(static_cast<std::size_t>(j));
      for (int i = 0; i <= col.degree(); ++i) s += GammaField(col.coeff(i).get_si()) * pow(t, static_cast<unsigned>(i));
      ok = ok && s == w_minus_g_cubed[static_cast<std::size_t>(j)];
    }
    rep.add("Eq. 5.2: f(gamma, w) = (w - gamma)^3", ok);
  }

  // Eq. 5.6: (z-g)^3 (w-g)^3 f(N(z)/D(z), N(w)/D(w)) = 27 eps f(w, z), N = g z + 1 - g, D = z - g
  {
    const GPoly num{GammaField(1) - t, t};
    const GPoly den{-t, GammaField(1)};
    std::array<GPoly, 4> basis;  // N^i D^(3-i)
    for (int i = 0; i <= 3; ++i) basis[static_cast<std::size_t>(i)] = gmul(gpow(num, i), gpow(den, 3 - i));
    std::array<std::array<GammaField, 4>, 4> lhs{};  // lhs[a][b]: coefficient of z^a w^b
    for (auto& row : lhs) row.fill(GammaField(0));
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j) {
        const long aij = c.f.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_si();
        if (aij == 0) continue;
        for (std::size_t a = 0; a < 4; ++a)
          for (std::size_t b = 0; b < 4; ++b)
            lhs[a][b] += GammaField(aij) * basis[static_cast<std::size_t>(i)][a] * basis[static_cast<std::size_t>(j)][b];
      }
    bool ok = true;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        ok = ok && lhs[a][b] == GammaField(27) * eps * GammaField(c.f.coeff(b, a).get_si());
    rep.add("Eq. 5.6: Lemma 2 transformation identity", ok);
  }

  // S3 relations among sigma and psi_i
  {
    const GammaField g1 = t;
    const GammaField g2 = -(t * t) + GammaField(5) * t + 2;
    const GammaField g3 = t * t - GammaField(6) * t + 4;
    const Mobius id{1, 0, 0, 1};
    const Mobius sigma{0, 1, -1, 1};
    auto psi = [](const GammaField& g) { return Mobius{g, GammaField(1) - g, 1, -g}; };
    const Mobius p1 = psi(g1), p2 = psi(g2), p3 = psi(g3);
    const Mobius sigma2 = compose(sigma, sigma);
    rep.add("gamma_2, gamma_3 are the other roots",
            (g2 * g2 * g2 - GammaField(6) * g2 * g2 + GammaField(3) * g2 + 1).is_zero() &&
                (g3 * g3 * g3 - GammaField(6) * g3 * g3 + GammaField(3) * g3 + 1).is_zero() &&
                g1 + g2 + g3 == GammaField(6));
    rep.add("sigma^3 = 1", projectively_equal(compose(sigma, sigma2), id));
    rep.add("psi_1^2 = 1", projectively_equal(compose(p1, p1), id));
    rep.add("psi_2^2 = 1", projectively_equal(compose(p2, p2), id));
    rep.add("psi_3^2 = 1", projectively_equal(compose(p3, p3), id));
    rep.add("psi_1 sigma psi_1 = sigma^2", projectively_equal(compose(compose(p1, sigma), p1), sigma2));
    rep.add("psi_1 o sigma = psi_3", projectively_equal(compose(p1, sigma), p3));
    rep.add("psi_1 o sigma^2 = psi_2", projectively_equal(compose(p1, sigma2), p2));
    rep.add("psi_1 o psi_2 = sigma^2", projectively_equal(compose(p1, p2), sigma2));
    rep.add("psi_2 o psi_1 = sigma", projectively_equal(compose(p2, p1), sigma));
    rep.add("psi_1 o psi_3 = sigma", projectively_equal(compose(p1, p3), sigma));
    rep.add("psi_3 o psi_1 = sigma^2", projectively_equal(compose(p3, p1), sigma2));
  }
  return rep;
}

DegreeAudit factor_degree_audit(int n, ClassNumberCache& cache) {
  DegreeAudit audit;
  audit.expected_degree = static_cast<int>(to_i64(2 * moebius_sum(3, n)));
  for (const auto& w : enumerate_set(3, n)) audit.degrees.push_back(6 * cache.class_number(w.d));
  for (auto d : audit.degrees) audit.degree_sum += d;
  const IntPoly pn = build_Pn(n);
  audit.pn_degree = pn.degree();
  const std::string tag = "n=" + std::to_string(n) + ": ";
  audit.report.add(tag + "deg P_n = 2 sum mu(n/k) 3^k", audit.pn_degree == audit.expected_degree,
                   std::to_string(audit.pn_degree) + " vs " + std::to_string(audit.expected_degree));
  audit.report.add(tag + "sum of 6 h(-d) = deg P_n", audit.degree_sum == audit.pn_degree,
                   std::to_string(audit.degree_sum));
  audit.report.add(tag + "P_n squarefree", is_squarefree(pn));
  if (n == 2) {
    const Int expected = ipow(2L, 48) * ipow(3L, 30) * ipow(5L, 6) * ipow(7L, 6);
    audit.report.add(tag + "disc(P_2) = 2^48 3^30 5^6 7^6", discriminant(pn) == expected);
  }
  return audit;
}

}  // namespace cnf
