#include "cnf/periods.hpp"

#include "cnf/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace cnf {

namespace {

using u128 = unsigned __int128;

u128 pow_u128(std::int64_t p, int n) {
  u128 r = 1;
  for (int i = 0; i < n; ++i) {
    r *= static_cast<u128>(p);
    if (r >> 100) throw ResourceLimit("4 p^n exceeds the 128-bit search range");
  }
  return r;
}

std::uint64_t isqrt_u128(u128 n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t powmod_i64(std::int64_t p, int n, std::int64_t m) {
  std::int64_t r = 1 % m;
  for (int i = 0; i < n; ++i) r = (r * (p % m)) % m;
  return r;
}

void require_supported_prime(std::int64_t p) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (p != 3 && p != 7 && p % 12 != 11)
    throw DomainError("p = " + std::to_string(p) + " is outside the supported set (3, 7, p = 11 mod 12)");
}

bool is_p7_special(std::int64_t p, std::int64_t d) {
  if (p != 7 || d % 3 != 0) return false;
  return decompose(d).dK == -3;
}

// First-found representation data for one discriminant at one level.
struct LevelRep {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool congruent = false;
};

// Every d with a primitive in-order representation 4 p^m = x^2 + d y^2 and (-d | p) = +1.
// Keeps the first congruent representation (smallest x), else the first representation.
std::map<std::int64_t, LevelRep> level_candidates(std::int64_t p, int m) {
  const u128 big = 4 * pow_u128(p, m);
  if (big > static_cast<u128>(1) << 62) throw ResourceLimit("level too large for enumeration");
  const auto N = static_cast<std::int64_t>(big);
  std::map<std::int64_t, LevelRep> out;
  for (std::int64_t x = 0; x * x < N; ++x) {
    const bool cong = congruence_holds(p, m, x);
    const std::int64_t r = N - x * x;
    for (std::int64_t y = 1; y * y <= r; ++y) {
      if (r % (y * y) != 0) continue;
      const std::int64_t d = r / (y * y);
      if (!is_valid_discriminant(d)) continue;
      if (kronecker(-d, p) != 1) continue;
      if (!in_order(d, x, y) || !is_primitive_rep(d, x, y)) continue;
      auto it = out.find(d);
      if (it == out.end()) {
        out.emplace(d, LevelRep{x, y, cong});
      } else if (cong && !it->second.congruent) {
        it->second = LevelRep{x, y, cong};
      }
    }
  }
  return out;
}

}  // namespace

int mobius(std::int64_t n) {
  if (n <= 0) throw DomainError("mobius needs n >= 1");
  int mu = 1;
  for (const auto& [q, e] : factorize(static_cast<std::uint64_t>(n))) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n <= 0) throw DomainError("divisors needs n >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    out.push_back(k);
    if (k != n / k) out.push_back(n / k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int moebius_sum(std::int64_t p, int n) {
  Int s = 0;
  for (std::int64_t k : divisors(n)) s += mobius(n / k) * ipow(Int(static_cast<long>(p)), static_cast<unsigned long>(k));
  return s;
}

Int rhs_value(std::int64_t p, int n) {
  Int s = moebius_sum(p, n);
  Int num = (p == 3 || p == 7) ? s : 2 * s;
  Int den = (p == 3 || p == 7) ? Int(3) : Int(static_cast<long>(p - 1));
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw Error("right-hand side is not integral for p=" + std::to_string(p) + ", n=" + std::to_string(n));
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

std::int64_t criterion_modulus(std::int64_t p) { return p == 3 ? 9 : p; }

bool in_order(std::int64_t d, std::int64_t x, std::int64_t y) {
  if (d % 4 == 0) return x % 2 == 0;
  return (x - y) % 2 == 0;
}

bool is_primitive_rep(std::int64_t d, std::int64_t x, std::int64_t y) {
  std::uint64_t g = std::gcd(static_cast<std::uint64_t>(std::llabs(x)), static_cast<std::uint64_t>(std::llabs(y)));
  while (g > 0 && g % 2 == 0) g /= 2;
  if (g != 1) return false;
  if (x % 2 == 0 && y % 2 == 0) {
    const std::int64_t a = x / 2;
    const std::int64_t b = y / 2;
    if (d % 4 == 3 && mod_pos(a - b, 2) == 0) return false;
    if (d % 4 == 0 && a % 2 == 0 && b % 2 == 0) return false;
  }
  return true;
}

bool congruence_holds(std::int64_t p, int n, std::int64_t x) {
  const std::int64_t m = criterion_modulus(p);
  const std::int64_t base = (powmod_i64(p, n, m) + 1) % m;
  const std::int64_t xr = mod_pos(x, m);
  return mod_pos(base - xr, m) == 0 || mod_pos(base + xr, m) == 0;
}

bool admissible(std::int64_t p, int n, std::int64_t d, std::int64_t x, std::int64_t y) {
  if (n < 1 || d <= 0 || !is_valid_discriminant(d)) return false;
  if (kronecker(-d, p) != 1) return false;
  Int lhs = 4 * ipow(Int(static_cast<long>(p)), static_cast<unsigned long>(n));
  Int rhs = from_i64(x) * from_i64(x) + from_i64(d) * from_i64(y) * from_i64(y);
  if (lhs != rhs) return false;
  if (!in_order(d, x, y) || !is_primitive_rep(d, x, y)) return false;
  return congruence_holds(p, n, x);
}

// ---- Eisenstein integers ----

EisensteinInt eisenstein_pow(const EisensteinInt& base, int n) {
  EisensteinInt r{1, 0};
  for (int i = 0; i < n; ++i) r = r * base;
  return r;
}

std::vector<EisensteinInt> unit_multiples(const EisensteinInt& z) {
  const EisensteinInt rho{0, 1};
  std::vector<EisensteinInt> out;
  EisensteinInt u{1, 0};
  for (int i = 0; i < 3; ++i) {
    out.push_back(u * z);
    out.push_back(-(u * z));
    u = u * rho;
  }
  return out;
}

std::int64_t reduce_mod_p7prime(const EisensteinInt& z) { return mod_pos(mod_pos(z.a, 7) + 4 * mod_pos(z.b, 7), 7); }

bool in_ray_group(const EisensteinInt& alpha) {
  for (const auto& beta : unit_multiples(alpha)) {
    if (reduce_mod_p7prime(beta) != 1) continue;
    // beta^2 = 1 mod 3 in Z[rho]; the p7' part follows from beta = 1 mod p7'
    const EisensteinInt sq = beta * beta;
    if (mod_pos(sq.a, 3) == 1 && mod_pos(sq.b, 3) == 0) return true;
  }
  return false;
}

bool in_ring_group(const EisensteinInt& alpha, std::int64_t f) {
  for (const auto& beta : unit_multiples(alpha))
    if (mod_pos(beta.b, f) == 0) return true;
  return false;
}

const std::vector<RegistryEntry>& p7_registry() {
  static const std::vector<RegistryEntry> entries = {
      {12, 3, std::nullopt, "f_1(x) of R_3 corresponds to -d = -12 (period 3)"},
      {48, 6, std::nullopt, "conductors f = 5, 4, 8 correspond to discriminants in D_{6,7}"},
      {75, 6, std::nullopt, "conductors f = 5, 4, 8 correspond to discriminants in D_{6,7}"},
      {192, 6, std::nullopt, "conductors f = 5, 4, 8 correspond to discriminants in D_{6,7}"},
      {507, 4, std::nullopt, "-d_1 = -507 in D_{4,7} via the mod-7 factorization of P_507"},
      {1083, std::nullopt, 3, "-3*19^2 not in D_{3,7}: no degree-36 factor of R_3 has the form -3f^2"},
      {363, std::nullopt, 4, "Table 4 lists all of D_{4,7} (total degree 6*784); -3*11^2 is absent"},
      {768, std::nullopt, 4, "Table 4 lists all of D_{4,7} (total degree 6*784); -3*16^2 is absent"},
      {9075, std::nullopt, 4, "Table 4 lists all of D_{4,7} (total degree 6*784); -3*55^2 is absent"},
  };
  return entries;
}

Resolution eisenstein_resolution(std::int64_t d, int n) {
  const Discriminant disc = decompose(d);
  if (disc.dK != -3) throw DomainError("eisenstein_resolution needs d = 3 f^2");
  if (n < 1) throw DomainError("n must be positive");
  const std::int64_t f = disc.f;
  const EisensteinInt prime{2, -1};  // p7 = (2 - rho)
  Resolution res;
  auto settle = [&](auto&& holds_at) {
    for (int m = 1; m <= n; ++m) {
      if (holds_at(eisenstein_pow(prime, m))) {
        res.period = m;
        res.verdict = (m == n) ? Membership::Member : Membership::NonMember;
        return;
      }
    }
    res.verdict = Membership::NonMember;
  };
  if (f == 1) {
    settle([](const EisensteinInt& a) {
      for (const auto& b : unit_multiples(a))
        if (reduce_mod_p7prime(b) == 1) return true;
      return false;
    });
    return res;
  }
  if (f % 3 == 0) {
    settle([f](const EisensteinInt& a) { return in_ray_group(a) && in_ring_group(a, f); });
    return res;
  }
  for (const auto& e : p7_registry()) {
    if (e.d != d) continue;
    if (e.period) {
      res.period = e.period;
      res.verdict = (*e.period == n) ? Membership::Member : Membership::NonMember;
      res.from_registry = true;
      res.citation = e.citation;
      return res;
    }
    if (e.excluded_at && *e.excluded_at == n) {
      res.verdict = Membership::NonMember;
      res.from_registry = true;
      res.citation = e.citation;
      return res;
    }
  }
  return res;
}

const char* to_string(ResolvedBy r) {
  switch (r) {
    case ResolvedBy::Computed:
      return "computed";
    case ResolvedBy::Eisenstein:
      return "eisenstein";
    case ResolvedBy::Registry:
      return "registry";
  }
  return "?";
}

std::optional<PeriodWitness> find_period(std::int64_t p, std::int64_t d, int n_max) {
  if (!is_valid_discriminant(d)) throw DomainError("-" + std::to_string(d) + " is not a discriminant");
  if (kronecker(-d, p) != 1) throw DomainError("(-d | p) must be +1");
  const bool special = is_p7_special(p, d);
  for (int n = 1; n <= n_max; ++n) {
    const u128 N = 4 * pow_u128(p, n);
    std::optional<PeriodWitness> best;
    for (std::uint64_t y = 1;; ++y) {
      const u128 dy2 = static_cast<u128>(d) * y * y;
      if (dy2 > N) break;
      const u128 r = N - dy2;
      const std::uint64_t x = isqrt_u128(r);
      if (static_cast<u128>(x) * x != r) continue;
      const auto xi = static_cast<std::int64_t>(x);
      const auto yi = static_cast<std::int64_t>(y);
      if (!in_order(d, xi, yi) || !is_primitive_rep(d, xi, yi)) continue;
      if (!special && !congruence_holds(p, n, xi)) continue;
      if (!best || xi < best->x) best = PeriodWitness{d, n, xi, yi};
    }
    if (!best) continue;
    if (!special) return best;
    const Resolution res = eisenstein_resolution(d, n);
    if (res.verdict == Membership::Member) return best;
    if (res.verdict == Membership::Undetermined)
      throw Error("period of -" + std::to_string(d) + " at n=" + std::to_string(n) + " is undetermined for p=7");
  }
  return std::nullopt;
}

EnumerationResult enumerate_detailed(std::int64_t p, int n) {
  require_supported_prime(p);
  if (n < 1) throw DomainError("n must be positive");
  std::set<std::int64_t> earlier;
  for (int m = 1; m < n; ++m)
    for (const auto& [d, rep] : level_candidates(p, m))
      if (rep.congruent && !is_p7_special(p, d)) earlier.insert(d);

  EnumerationResult out;
  for (const auto& [d, rep] : level_candidates(p, n)) {
    if (p % 12 == 11) {
      const std::int64_t dk = decompose(d).dK;
      if (dk == -3 || dk == -4) throw Error("p = 11 mod 12 produced d_K in {-3, -4}");
    }
    if (is_p7_special(p, d)) {
      const Resolution res = eisenstein_resolution(d, n);
      if (res.verdict == Membership::Member) {
        out.members.push_back({{d, n, rep.x, rep.y},
                               res.from_registry ? ResolvedBy::Registry : ResolvedBy::Eisenstein,
                               res.citation});
      } else if (res.verdict == Membership::NonMember) {
        out.excluded.push_back(d);
      } else {
        out.undetermined.push_back(d);
      }
      continue;
    }
    if (!rep.congruent || earlier.count(d)) continue;
    out.members.push_back({{d, n, rep.x, rep.y}, ResolvedBy::Computed, {}});
  }
  return out;
}

std::vector<PeriodWitness> enumerate_set(std::int64_t p, int n) {
  std::vector<PeriodWitness> out;
  for (const auto& m : enumerate_detailed(p, n).members) out.push_back(m.witness);
  return out;
}

FormulaReport verify_formula(std::int64_t p, int n, ClassNumberCache& cache) {
  if (n < 2) throw DomainError("verify_formula needs n >= 2");
  FormulaReport rep;
  rep.p = p;
  rep.n = n;
  const EnumerationResult en = enumerate_detailed(p, n);
  rep.lhs = 0;
  for (const auto& m : en.members) {
    const std::int64_t h = cache.class_number(m.witness.d);
    rep.entries.push_back({m.witness.d, h, m.witness.x, m.witness.y, m.resolved});
    rep.lhs += h;
  }
  rep.undetermined = en.undetermined;
  rep.rhs = rhs_value(p, n);
  rep.diff = rep.lhs - rep.rhs;
  return rep;
}

}  // namespace cnf
