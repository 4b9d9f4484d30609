#include "properties.hpp"

#include "oracles.hpp"
#include "paper_data.hpp"

#include "cnf/dynamics3.hpp"
#include "cnf/error.hpp"
#include "cnf/hensel.hpp"
#include "cnf/padic3.hpp"
#include "cnf/periods.hpp"
#include "cnf/quadforms.hpp"
#include "cnf/report.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace cnf::props {

namespace {

constexpr std::uint64_t kSmallPrimes[] = {3, 5, 7, 11, 13};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::uint64_t pick_prime(Rng& rng) { return kSmallPrimes[uniform(rng, 0, 4)]; }

// Collects the first failing case of a randomized property.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failures_ += ok ? 0 : 1;
  }
  void add_to(CheckReport& rep) const {
    std::string detail = std::to_string(cases_) + " cases";
    if (failures_) detail += ", " + std::to_string(failures_) + " failed; first: " + first_failure_;
    rep.add(name_, failures_ == 0 && cases_ > 0, detail);
  }

 private:
  std::string name_;
  int cases_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

std::string show(const IntPoly& a) { return a.to_string(); }

ModPoly product_of(const ModFactorization& f, std::uint64_t p) {
  ModPoly acc = ModPoly::constant(p, f.unit);
  for (const auto& [g, e] : f.factors) acc = acc * pow(g, static_cast<unsigned>(e));
  return acc;
}

bool same_report(const FormulaReport& a, const FormulaReport& b) {
  if (a.p != b.p || a.n != b.n || a.lhs != b.lhs || a.rhs != b.rhs || a.diff != b.diff) return false;
  if (a.undetermined != b.undetermined || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& x = a.entries[i];
    const auto& y = b.entries[i];
    if (x.d != y.d || x.h != y.h || x.x != y.x || x.y != y.y || x.resolved != y.resolved) return false;
  }
  return true;
}

bool special_p7(std::int64_t p, std::int64_t d) {
  if (p != 7 || d % 3 != 0) return false;
  const Discriminant disc = decompose(d);
  return disc.dK == -3;
}

struct Level {
  std::int64_t p;
  int n;
};

const std::vector<Level>& enumerated_levels() {
  static const std::vector<Level> levels = {
      {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {7, 2}, {7, 3}, {7, 4}, {11, 2}, {11, 3}, {23, 2}, {47, 2},
  };
  return levels;
}

}  // namespace

IntPoly random_poly(Rng& rng, int deg, long bound) {
  std::vector<Int> c(deg + 1);
  for (int i = 0; i <= deg; ++i) c[i] = uniform(rng, static_cast<int>(-bound), static_cast<int>(bound));
  while (c[deg] == 0) c[deg] = uniform(rng, static_cast<int>(-bound), static_cast<int>(bound));
  return IntPoly(c);
}

ModPoly random_mod_poly(Rng& rng, std::uint64_t p, int deg, bool monic) {
  std::vector<std::uint64_t> c(deg + 1);
  for (int i = 0; i < deg; ++i) c[i] = static_cast<std::uint64_t>(uniform(rng, 0, static_cast<int>(p) - 1));
  c[deg] = monic ? 1 : static_cast<std::uint64_t>(uniform(rng, 1, static_cast<int>(p) - 1));
  return ModPoly(p, c);
}

std::int64_t random_discriminant(Rng& rng, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  while (true) {
    const std::int64_t d = dist(rng);
    if (d % 4 == 0 || d % 4 == 3) return d;
  }
}

// ---- polyring ----

CheckReport resultant_multiplicativity(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally t("Res(A, B C) = Res(A, B) Res(A, C)");
  for (int i = 0; i < trials; ++i) {
    const IntPoly a = random_poly(rng, uniform(rng, 1, 5), 9);
    const IntPoly b = random_poly(rng, uniform(rng, 0, 4), 9);
    const IntPoly c = random_poly(rng, uniform(rng, 0, 4), 9);
    t.check(resultant(a, b * c) == resultant(a, b) * resultant(a, c), show(a) + " | " + show(b) + " | " + show(c));
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

CheckReport resultant_matches_sylvester(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally t("subresultant Res(A, B) = Sylvester determinant");
  for (int i = 0; i < trials; ++i) {
    const IntPoly a = random_poly(rng, uniform(rng, 0, 7), 20);
    const IntPoly b = random_poly(rng, uniform(rng, 0, 7), 20);
    t.check(resultant(a, b) == oracle::sylvester_resultant(a, b), show(a) + " | " + show(b));
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

CheckReport resultant_zero_iff_common_factor(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally t("Res(A, B) = 0 iff deg gcd(A, B) > 0");
  int shared = 0;
  for (int i = 0; i < trials; ++i) {
    IntPoly a = random_poly(rng, uniform(rng, 1, 4), 3);
    IntPoly b = random_poly(rng, uniform(rng, 1, 4), 3);
    if (i % 2 == 0) {
      const IntPoly g = random_poly(rng, uniform(rng, 1, 2), 3);
      a = a * g;
      b = b * g;
    }
    const bool zero = resultant(a, b) == 0;
    const bool common = gcd_int(a, b).degree() > 0;
    shared += common ? 1 : 0;
    t.check(zero == common && zero == (oracle::sylvester_resultant(a, b) == 0), show(a) + " | " + show(b));
  }
  CheckReport rep;
  t.add_to(rep);
  rep.items.back().detail += ", " + std::to_string(shared) + " with a common factor";
  return rep;
}

CheckReport exact_div_roundtrip(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally t("exact_div(A B, B) = A; A B + 1 is rejected");
  for (int i = 0; i < trials; ++i) {
    const IntPoly a = random_poly(rng, uniform(rng, 0, 8), 50);
    const IntPoly b = random_poly(rng, uniform(rng, 1, 6), 50);
    bool ok = exact_div(a * b, b) == a;
    try {
      exact_div(a * b + IntPoly{1}, b);
      ok = false;
    } catch (const NotDivisible&) {
    }
    t.check(ok, show(a) + " | " + show(b));
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

CheckReport reduce_mod_commutes(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally mul("reduce_mod(A B) = reduce_mod(A) reduce_mod(B)");
  Tally res("Res over F_p of reductions = Res(A, B) mod p");
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t p = pick_prime(rng);
    const IntPoly a = random_poly(rng, uniform(rng, 1, 6), 30);
    const IntPoly b = random_poly(rng, uniform(rng, 1, 6), 30);
    const ModPoly ar = reduce_mod(a, p);
    const ModPoly br = reduce_mod(b, p);
    mul.check(reduce_mod(a * b, p) == ar * br, show(a) + " | " + show(b) + " mod " + std::to_string(p));
    if (ar.degree() != a.degree() || br.degree() != b.degree()) continue;
    const Int lhs = mod_floor(oracle::sylvester_resultant(lift(ar), lift(br)), Int(static_cast<unsigned long>(p)));
    const Int rhs = mod_floor(resultant(a, b), Int(static_cast<unsigned long>(p)));
    res.check(lhs == rhs, show(a) + " | " + show(b) + " mod " + std::to_string(p));
  }
  CheckReport rep;
  mul.add_to(rep);
  res.add_to(rep);
  return rep;
}

CheckReport factor_mod_p_roundtrip(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally prod("factor_mod_p multiplies back to the input");
  Tally irr("reported factors are irreducible (DDF and trial division)");
  Tally same("factor_mod_p agrees with trial-division factorization");
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t p = kSmallPrimes[uniform(rng, 0, 2)];
    const ModPoly a = random_mod_poly(rng, p, uniform(rng, 1, 8), i % 3 == 0);
    const ModFactorization f = factor_mod_p(a);
    const std::string tag = a.to_string() + " mod " + std::to_string(p);
    prod.check(product_of(f, p) == a, tag);
    std::map<std::vector<std::uint64_t>, int> got;
    for (const auto& [g, e] : f.factors) {
      irr.check(is_irreducible(g) && oracle::irreducible_by_trial(g), g.to_string() + " in " + tag);
      got[g.coeffs()] += e;
    }
    same.check(got == oracle::factor_by_trial(a), tag);
  }
  CheckReport rep;
  prod.add_to(rep);
  irr.add_to(rep);
  same.add_to(rep);
  return rep;
}

CheckReport hensel_lift_properties(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally t("hensel_lift_factor: H | A mod p^k, H = h mod p, H is the unique lift");
  int done = 0;
  while (done < trials) {
    const std::uint64_t p = kSmallPrimes[uniform(rng, 0, 2)];
    IntPoly h0 = random_poly(rng, uniform(rng, 1, 3), 5);
    IntPoly g0 = random_poly(rng, uniform(rng, 1, 3), 5);
    h0.set_coeff(h0.degree(), 1);
    g0.set_coeff(g0.degree(), 1);
    const ModPoly hbar = reduce_mod(h0, p);
    const ModPoly gbar = reduce_mod(g0, p);
    if (!gcd(hbar, gbar).is_one() || !gcd(hbar, hbar.derivative()).is_one()) continue;
    ++done;
    const IntPoly a = h0 * g0;
    for (unsigned k = 1; k <= 6; ++k) {
      const Int m = ipow(Int(static_cast<unsigned long>(p)), k);
      const IntPoly h = hensel_lift_factor(a, hbar, p, k);
      const bool ok = h.lc() == 1 && reduce_mod(h, p) == hbar && divmod_monic(a, h, m).rem.is_zero() &&
                      poly_mod(h, m) == poly_mod(h0, m);
      t.check(ok, show(a) + " / " + hbar.to_string() + " mod " + std::to_string(p) + "^" + std::to_string(k));
    }
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

// ---- quadforms ----

CheckReport class_number_oracles(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally scan("class_number = scan count = analytic formula");
  Tally forms("reduced_forms are reduced, primitive, of discriminant -d");
  std::vector<std::int64_t> ds = {3, 4, 7, 8, 12, 27, 35, 107, 216, 243, 507, 1083, 4563};
  for (int i = 0; i < trials; ++i) ds.push_back(random_discriminant(rng, 3, 40000));
  for (auto d : ds) {
    const std::int64_t h = class_number(d);
    scan.check(h == oracle::forms_by_scan(d) && h == oracle::class_number_analytic(d), "d = " + std::to_string(d));
    const auto list = reduced_forms(d);
    bool ok = static_cast<std::int64_t>(list.size()) == h;
    for (const auto& q : list) {
      ok = ok && q.b * q.b - 4 * q.a * q.c == -d && std::llabs(q.b) <= q.a && q.a <= q.c;
      ok = ok && !((std::llabs(q.b) == q.a || q.a == q.c) && q.b < 0);
      ok = ok && std::gcd(std::gcd(q.a, std::llabs(q.b)), q.c) == 1;
    }
    forms.check(ok, "d = " + std::to_string(d));
  }
  CheckReport rep;
  scan.add_to(rep);
  forms.add_to(rep);
  return rep;
}

CheckReport decompose_roundtrip(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally t("decompose: |dK| f^2 = d with dK fundamental");
  for (int i = 0; i < trials; ++i) {
    const std::int64_t d = random_discriminant(rng, 3, 2000000);
    const Discriminant disc = decompose(d);
    t.check(-disc.dK * disc.f * disc.f == d && is_fundamental(disc.dK) && oracle::fundamental_disc(disc.dK),
            "d = " + std::to_string(d));
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

CheckReport cache_transparency(std::uint32_t seed, int trials, const std::filesystem::path& scratch) {
  Rng rng(seed);
  std::filesystem::remove(scratch);
  std::vector<std::int64_t> ds;
  for (int i = 0; i < trials; ++i) ds.push_back(random_discriminant(rng, 3, 20000));
  for (int i = 0; i < trials / 4; ++i) ds.push_back(ds[static_cast<std::size_t>(i)]);
  const std::set<std::int64_t> distinct(ds.begin(), ds.end());

  Tally t("class numbers agree with and without the cache, before and after reload");
  ClassNumberCache memory;
  {
    ClassNumberCache file(scratch);
    for (auto d : ds) {
      const std::int64_t h = class_number(d);
      t.check(file.class_number(d) == h && memory.class_number(d) == h, "d = " + std::to_string(d));
    }
  }
  ClassNumberCache reloaded(scratch);
  for (auto d : ds) t.check(reloaded.class_number(d) == class_number(d), "reload d = " + std::to_string(d));

  std::ifstream in(scratch);
  std::set<std::int64_t> seen;
  std::string line;
  bool unique = true;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      unique = false;
      break;
    }
    unique = unique && seen.insert(std::stoll(line.substr(0, comma))).second;
  }
  CheckReport rep;
  t.add_to(rep);
  rep.add("cache file holds each d once", unique && seen == distinct && reloaded.size() == distinct.size(),
          std::to_string(seen.size()) + " lines for " + std::to_string(distinct.size()) + " discriminants");
  std::filesystem::remove(scratch);
  return rep;
}

CheckReport genus_divisibility(std::uint32_t seed, int trials) {
  Rng rng(seed);
  std::set<std::int64_t> ds;
  for (const auto& table : paper::printed_tables())
    for (const auto& e : table.entries) ds.insert(paper::eval_product(e.expr));
  const std::size_t printed = ds.size();
  for (int i = 0; i < trials; ++i) ds.insert(random_discriminant(rng, 3, 200000));

  Tally genera("2^(mu-1) | h(-d), mu the number of genus characters");
  Tally literal("2^(t-1) | h(-d), t = #primes of d, for d != 4m with m = 3 (mod 4)");
  std::vector<std::int64_t> literal_outliers;
  for (auto d : ds) {
    if (d == 3 || d == 4) continue;
    const std::int64_t h = class_number(d);
    const int mu = oracle::genus_character_count(d);
    genera.check(h % (std::int64_t{1} << (mu - 1)) == 0, "d = " + std::to_string(d));
    const int t = static_cast<int>(oracle::trial_factor(d).size());
    const bool divides = h % (std::int64_t{1} << (t - 1)) == 0;
    if (d % 4 == 0 && (d / 4) % 4 == 3) {
      if (!divides) literal_outliers.push_back(d);
      continue;
    }
    literal.check(divides, "d = " + std::to_string(d));
  }
  CheckReport rep;
  genera.add_to(rep);
  literal.add_to(rep);
  std::ostringstream s;
  s << printed << " printed discriminants included; the literal form fails for " << literal_outliers.size()
    << " of the excluded shape d = 4m, m = 3 (mod 4), e.g.";
  for (std::size_t i = 0; i < literal_outliers.size() && i < 4; ++i) s << " " << literal_outliers[i];
  rep.items.back().detail += "; " + s.str();
  return rep;
}

// ---- periods ----

CheckReport no_period_one_for_p3() {
  CheckReport rep;
  const auto set = enumerate_set(3, 1);
  rep.add("enumerate_set(3, 1) is empty", set.empty(), std::to_string(set.size()) + " members");
  bool none = true;
  for (std::int64_t d = 3; d <= 12; ++d)
    if (is_valid_discriminant(d)) none = none && !oracle::has_period_solution(3, 1, d);
  rep.add("no d admits a period-1 solution of 12 = x^2 + d y^2", none);
  return rep;
}

CheckReport witness_revalidation() {
  Tally t("every enumerated witness re-validates from scratch");
  for (const auto& [p, n] : enumerated_levels()) {
    for (const auto& w : enumerate_set(p, n)) {
      const bool congruence = !special_p7(p, w.d);
      const bool ok = w.n == n && oracle::witness_valid(p, n, w.d, w.x, w.y, congruence) &&
                      (!congruence || admissible(p, n, w.d, w.x, w.y));
      t.check(ok, "p = " + std::to_string(p) + ", n = " + std::to_string(n) + ", d = " + std::to_string(w.d));
    }
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

CheckReport period_minimality() {
  Tally t("no member admits a solution at any smaller level");
  for (const auto& [p, n] : enumerated_levels()) {
    for (const auto& w : enumerate_set(p, n)) {
      if (special_p7(p, w.d)) continue;
      bool minimal = true;
      for (int m = 1; m < n; ++m) minimal = minimal && !oracle::has_period_solution(p, m, w.d);
      const auto again = find_period(p, w.d, n);
      t.check(minimal && again && again->n == n,
              "p = " + std::to_string(p) + ", n = " + std::to_string(n) + ", d = " + std::to_string(w.d));
    }
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

CheckReport period_search_matches_oracle(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally t("find_period agrees with a scan over y at every level");
  struct Range {
    std::int64_t p;
    int n_max;
    std::int64_t d_max;
  };
  const Range ranges[] = {{3, 10, 4000}, {11, 4, 20000}, {23, 3, 20000}};
  for (const auto& r : ranges) {
    for (int i = 0; i < trials; ++i) {
      std::int64_t d = random_discriminant(rng, 3, r.d_max);
      if (oracle::kronecker_euler(-d, r.p) != 1) {
        bool rejected = false;
        try {
          find_period(r.p, d, r.n_max);
        } catch (const DomainError&) {
          rejected = true;
        }
        t.check(rejected, "p = " + std::to_string(r.p) + ", d = " + std::to_string(d) + " outside (-d|p) = +1 accepted");
        while (oracle::kronecker_euler(-d, r.p) != 1) d = random_discriminant(rng, 3, r.d_max);
      }
      int expected = 0;
      for (int n = 1; n <= r.n_max && !expected; ++n)
        if (oracle::has_period_solution(r.p, n, d)) expected = n;
      const auto got = find_period(r.p, d, r.n_max);
      t.check(got ? got->n == expected : expected == 0,
              "p = " + std::to_string(r.p) + ", d = " + std::to_string(d) + ", expected " + std::to_string(expected));
    }
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

CheckReport cross_module_degree_sums() {
  CheckReport rep;
  ClassNumberCache cache;
  for (int n = 2; n <= 4; ++n) {
    std::int64_t sum = 0;
    for (const auto& w : enumerate_set(3, n)) sum += 6 * cache.class_number(w.d);
    const int deg = build_Pn(n).degree();
    rep.add("6 sum h over D_{" + std::to_string(n) + ",3} = deg P_" + std::to_string(n), sum == deg,
            std::to_string(sum) + " vs " + std::to_string(deg));
  }
  return rep;
}

// ---- padic3 ----

CheckReport branch_precision_consistency(std::uint32_t seed, int trials) {
  Rng rng(seed);
  Tally t("F(z) at 3^16 reduces to F(z) at 3^8");
  for (int i = 0; i < trials; ++i) {
    const int n = uniform(rng, 1, 3);
    const IntPoly modulus = default_modulus(n);
    auto low = std::make_shared<const GaloisRing>(modulus, 8);
    auto high = std::make_shared<const GaloisRing>(modulus, 16);
    std::vector<Int> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = uniform(rng, 0, 6560);
    if (mod_floor(c[0], 3) == 2) {
      bool rest_zero = true;
      for (std::size_t j = 1; j < c.size(); ++j) rest_zero = rest_zero && mod_floor(c[j], 3) == 0;
      if (rest_zero) c[0] += 1;
    }
    const IntPoly z(c);
    const auto coarse = branch_F(GaloisRingElem(low, z)).coeffs();
    const auto fine = branch_F(GaloisRingElem(high, z)).coeffs();
    bool same = coarse.size() == fine.size();
    for (std::size_t j = 0; same && j < fine.size(); ++j) same = mod_floor(fine[j], low->characteristic()) == coarse[j];
    t.check(same, "z = " + z.to_string() + " in degree " + std::to_string(n));
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

// ---- cli ----

CheckReport report_roundtrips() {
  Tally t("FormulaReport survives JSON and CSV round trips");
  ClassNumberCache cache;
  const std::pair<std::int64_t, int> cases[] = {{3, 2}, {3, 4}, {3, 6}, {7, 3}, {11, 3}, {23, 2}, {83, 2}};
  for (const auto& [p, n] : cases) {
    const FormulaReport r = verify_formula(p, n, cache);
    const std::string tag = "p = " + std::to_string(p) + ", n = " + std::to_string(n);
    t.check(same_report(r, formula_report_from_json(to_json(r))), "json " + tag);
    t.check(same_report(r, formula_report_from_json(to_json(r, 2))), "indented json " + tag);
    t.check(same_report(r, formula_report_from_csv(to_csv(r))), "csv " + tag);
    t.check(to_json(formula_report_from_json(to_json(r))) == to_json(r), "json bytes " + tag);
  }
  CheckReport rep;
  t.add_to(rep);
  return rep;
}

CheckReport all_properties(const std::filesystem::path& scratch) {
  CheckReport rep;
  rep.merge(resultant_multiplicativity(101, 200));
  rep.merge(resultant_matches_sylvester(102, 200));
  rep.merge(resultant_zero_iff_common_factor(103, 200));
  rep.merge(exact_div_roundtrip(104, 200));
  rep.merge(reduce_mod_commutes(105, 200));
  rep.merge(factor_mod_p_roundtrip(106, 200));
  rep.merge(hensel_lift_properties(107, 60));
  rep.merge(class_number_oracles(108, 150));
  rep.merge(decompose_roundtrip(109, 300));
  rep.merge(cache_transparency(110, 80, scratch));
  rep.merge(genus_divisibility(111, 300));
  rep.merge(no_period_one_for_p3());
  rep.merge(witness_revalidation());
  rep.merge(period_minimality());
  rep.merge(period_search_matches_oracle(112, 150));
  rep.merge(cross_module_degree_sums());
  rep.merge(branch_precision_consistency(113, 60));
  rep.merge(report_roundtrips());
  return rep;
}

}  // namespace cnf::props
