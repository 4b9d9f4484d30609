#include "cnf/p7ext.hpp"

#include "cnf/error.hpp"
#include "cnf/hensel.hpp"
#include "cnf/periods.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace cnf {

namespace {

std::mutex g_memo7_mu;

void require_level7(int n, int hi) {
  if (n < 1) throw DomainError("tower level must be >= 1");
  if (n > hi) throw ResourceLimit("p = 7 tower level " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(hi));
}

Int symmetric_mod(const Int& c, const Int& m) {
  Int r = mod_floor(c, m);
  if (2 * r > m) r -= m;
  return r;
}

IntPoly symmetric(const IntPoly& a, const Int& m) {
  std::vector<Int> c = a.coeffs();
  for (auto& x : c) x = symmetric_mod(x, m);
  return IntPoly(std::move(c));
}

std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b) {
  try {
    return exact_div(a, b);
  } catch (const NotDivisible&) {
    return std::nullopt;
  }
}

Int norm2_ceiling(const IntPoly& a) {
  Int s = 0;
  for (const auto& c : a.coeffs()) s += c * c;
  Int r = sqrt(s);
  return r + 1;
}

bool squarefree_mod(const IntPoly& a, std::uint64_t q) {
  const ModPoly am = reduce_mod(a, q);
  if (am.degree() != a.degree()) return false;
  return gcd(am, am.derivative()).degree() == 0;
}

}  // namespace

const BiPoly& f7() {
  static const BiPoly f = [] {
    const std::vector<std::vector<long>> by_y = {
        {0, 0, 0, 0, 0, 0, 0, 1},
        {-1, -14, -56, -21, 168, 7, -84, 10},
        {-10, -84, 203, 1491, -3549, 2247, -308, 9},
        {-9, 63, 56, -3066, 7378, -5642, 1211, -78},
        {78, 203, -1148, 3171, -5866, 4725, -1085, 74},
        {-74, -182, 1330, -2331, 2380, -1477, 280, -16},
        {16, 21, -406, 791, -546, 161, -21, 1},
        {-1, 0, 0, 0, 0, 0, 0, 0},
    };
    BiPoly out;
    for (std::size_t j = 0; j < by_y.size(); ++j) {
      std::vector<Int> c(by_y[j].begin(), by_y[j].end());
      out += BiPoly::in_first(IntPoly(std::move(c))) * BiPoly::in_second(IntPoly::monomial(Int(1), j));
    }
    return out;
  }();
  return f;
}

const BiPoly& build_Rn7_bivariate(int n, const Progress& progress) {
  require_level7(n, 2);
  static std::map<int, BiPoly> memo;
  {
    std::lock_guard lock(g_memo7_mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  BiPoly r = n == 1 ? f7() : resultant_bivariate(f7(), f7(), progress);
  std::lock_guard lock(g_memo7_mu);
  return memo.emplace(n, std::move(r)).first->second;
}

const IntPoly& build_Rn7(int n, const Progress& progress) {
  require_level7(n, kMaxTowerLevel7);
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard lock(g_memo7_mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPoly r = n <= 2 ? build_Rn7_bivariate(n, progress).diagonal()
                     : resultant_shared(build_Rn7_bivariate(2, progress), f7().swapped(), progress);
  std::lock_guard lock(g_memo7_mu);
  return memo.emplace(n, std::move(r)).first->second;
}

IntPoly build_Pn7(int n, const Progress& progress) {
  require_level7(n, kMaxTowerLevel7);
  if (n < 2) throw DomainError("P_n is defined for n >= 2");
  IntPoly p = exact_div(build_Rn7(n, progress), build_Rn7(1));
  if (sgn(p.lc()) < 0) p = -p;
  return p;
}

IntPoly sextic_f1() { return IntPoly{1, -1, 14, -33, 24, -5, 1}; }
IntPoly sextic_f2() { return IntPoly{1, 5, 38, -111, 78, -11, 1}; }

ModPoly mod7_closed_form(int n) {
  unsigned long q = 1;
  for (int i = 0; i < n; ++i) q *= 7;
  const ModPoly head = ModPoly::monomial(7, 1, q) - ModPoly::monomial(7, 1, 1);
  return -(head * pow(ModPoly(7, {2, 1}), static_cast<unsigned>(q - 1)));
}

CheckReport verify_mod7_for(const IntPoly& rn, int n) {
  const ModPoly got = reduce_mod(rn, 7);
  const ModPoly literal = mod7_closed_form(n);
  const ModPoly signed_form = n % 2 == 1 ? -literal : literal;
  CheckReport rep;
  rep.add("R_" + std::to_string(n) + " = (-1)^(n+1) (x^(7^n) - x)(x + 2)^(7^n - 1) mod 7", got == signed_form,
          std::string("literal sign ") + (got == literal ? "holds" : "fails"));
  return rep;
}

CheckReport verify_mod7(int n) { return verify_mod7_for(build_Rn7(n), n); }

std::vector<int> modular_degree_pattern(const IntPoly& a, std::uint64_t q) {
  const ModFactorization fac = factor_mod_p(reduce_mod(a, q));
  std::vector<int> out;
  for (const auto& [h, e] : fac.factors) {
    if (e != 1) throw NotSquarefree("polynomial is not squarefree mod " + std::to_string(q));
    out.push_back(h.degree());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_coarsening(const std::vector<int>& fine, const std::vector<int>& coarse) {
  std::vector<int> parts(fine.rbegin(), fine.rend());  // largest first prunes faster
  std::vector<int> room(coarse.begin(), coarse.end());
  int total_f = 0, total_c = 0;
  for (int v : fine) total_f += v;
  for (int v : coarse) total_c += v;
  if (total_f != total_c) return false;
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == parts.size()) return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; });
    for (std::size_t j = 0; j < room.size(); ++j) {
      if (room[j] < parts[i]) continue;
      if (j > 0 && room[j] == room[j - 1]) continue;
      room[j] -= parts[i];
      if (place(i + 1)) return true;
      room[j] += parts[i];
    }
    return false;
  };
  return place(0);
}

RationalFactorDegrees rational_factor_degrees(const IntPoly& input) {
  IntPoly a = input.primitive_part();
  RationalFactorDegrees out;
  if (a.degree() <= 1) {
    out.degrees = {a.degree()};
    out.factors = {a};
    return out;
  }
  if (!is_squarefree(a)) throw NotSquarefree("rational_factor_degrees needs a squarefree polynomial");

  // Pick the admissible prime below 200 with the fewest modular factors among the first eight.
  std::vector<std::pair<ModPoly, int>> best;
  int tried = 0;
  for (std::uint64_t q = 3; q < 200 && tried < 8; q += 2) {
    if (!is_prime_u64(q) || !squarefree_mod(a, q)) continue;
    ++tried;
    ModFactorization fac = factor_mod_p(reduce_mod(a, q));
    if (out.prime == 0 || fac.factors.size() < best.size()) {
      out.prime = q;
      best = std::move(fac.factors);
    }
  }
  if (out.prime == 0) throw Error("no admissible prime for modular factorization");
  out.modular_factor_count = static_cast<int>(best.size());

  const Int q(static_cast<unsigned long>(out.prime));
  const Int bound = 2 * abs(a.lc()) * ipow(Int(2), static_cast<unsigned long>(a.degree())) * norm2_ceiling(a);
  unsigned k = 1;
  for (Int m = q; m <= bound; m *= q) ++k;
  const Int modulus = ipow(q, k);

  std::vector<IntPoly> lifts;
  for (const auto& [h, e] : best) lifts.push_back(hensel_lift_factor(a, h, out.prime, k));

  std::vector<std::size_t> remaining(lifts.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  IntPoly f = a;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      Int c0 = f.lc();
      for (std::size_t i : pick) c0 = mod_floor(c0 * lifts[remaining[i]].coeff(0), modulus);
      c0 = symmetric_mod(c0, modulus);
      const Int f0 = f.coeff(0);
      const bool const_ok = sgn(f0) == 0 || (sgn(c0) != 0 && mpz_divisible_p(Int(f0 * f.lc()).get_mpz_t(), c0.get_mpz_t()));
      if (const_ok) {
        IntPoly g = IntPoly::constant(f.lc());
        for (std::size_t i : pick) g = mul_mod(g, lifts[remaining[i]], modulus);
        g = symmetric(g, modulus).primitive_part();
        if (auto quot = try_divide(f, g)) {
          out.factors.push_back(g);
          f = *quot;
          std::vector<std::size_t> rest;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(remaining[i]);
          remaining = std::move(rest);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == remaining.size() - s + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.degree() > 0) {
    if (sgn(f.lc()) < 0) f = -f;
    out.factors.push_back(f);
  }
  for (const auto& g : out.factors) out.degrees.push_back(g.degree());
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

P7Audit audit_p7(int n, ClassNumberCache& cache, const IntPoly* rn3) {
  P7Audit audit;
  audit.expected_degree = to_i64(2 * moebius_sum(7, n));
  const EnumerationResult en = enumerate_detailed(7, n);
  for (const auto& m : en.members) audit.degrees.push_back(6 * cache.class_number(m.witness.d));
  std::sort(audit.degrees.begin(), audit.degrees.end());
  for (auto d : audit.degrees) audit.degree_sum += d;
  const std::string tag = "p=7 n=" + std::to_string(n) + ": ";
  audit.report.add(tag + "sum of 6 h(-d) = 2 sum mu(n/k) 7^k", audit.degree_sum == audit.expected_degree,
                   std::to_string(audit.degree_sum) + " vs " + std::to_string(audit.expected_degree));
  audit.report.add(tag + "no undetermined discriminants", en.undetermined.empty(),
                   std::to_string(en.undetermined.size()) + " undetermined");

  if (n == 2) {
    const IntPoly p2 = build_Pn7(2);
    audit.report.add(tag + "deg P_2 = 2 (7^2 - 7)", p2.degree() == audit.expected_degree, std::to_string(p2.degree()));
    audit.report.add(tag + "P_2 squarefree", is_squarefree(p2));
    const RationalFactorDegrees cert = rational_factor_degrees(p2);
    std::vector<int> expected(audit.degrees.begin(), audit.degrees.end());
    std::string detail = "mod " + std::to_string(cert.prime) + ": " + std::to_string(cert.modular_factor_count) +
                         " factors; degrees";
    for (int d : cert.degrees) detail += " " + std::to_string(d);
    audit.report.add(tag + "irreducible factor degrees of P_2 over Q = {6 h(-d)}", cert.degrees == expected, detail);
    int patterns = 0;
    for (std::uint64_t q = 11; patterns < 2 && q < 200; q += 2) {
      if (!is_prime_u64(q) || !squarefree_mod(p2, q)) continue;
      ++patterns;
      audit.report.add(tag + "mod-" + std::to_string(q) + " pattern refines the degree multiset",
                       is_coarsening(modular_degree_pattern(p2, q), expected));
    }
  }
  if (n == 3) {
    audit.report.add(tag + "18 members", audit.degrees.size() == 18, std::to_string(audit.degrees.size()));
    audit.report.add(tag + "disc(f1) = -2^4 3^3 5^6 7^4",
                     discriminant(sextic_f1()) == -(ipow(2L, 4) * ipow(3L, 3) * ipow(5L, 6) * ipow(7L, 4)));
    audit.report.add(tag + "disc(f2) = -2^12 3^6 7^4 19^3",
                     discriminant(sextic_f2()) == -(ipow(2L, 12) * ipow(3L, 6) * ipow(7L, 4) * ipow(19L, 3)));
    if (rn3) {
      IntPoly p3 = exact_div(*rn3, build_Rn7(1));
      audit.report.add(tag + "deg R_3 / R_1 = 2 (7^3 - 7)", p3.degree() == audit.expected_degree,
                       std::to_string(p3.degree()));
      audit.report.add(tag + "f1 divides R_3", try_divide(*rn3, sextic_f1()).has_value());
      audit.report.add(tag + "f2 divides R_3", try_divide(*rn3, sextic_f2()).has_value());
      audit.report.add(tag + "R_3 / R_1 squarefree", is_squarefree(p3));
    }
  }
  if (n == 4) {
    audit.report.add(tag + "49 members", audit.degrees.size() == 49, std::to_string(audit.degrees.size()));
  }
  return audit;
}

}  // namespace cnf
