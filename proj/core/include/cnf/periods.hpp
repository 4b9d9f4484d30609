#pragma once

#include "cnf/bigint.hpp"
#include "cnf/quadforms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cnf {

// 4 p^n = x^2 + d y^2 with (x + y sqrt(-d))/2 primitive in the order of discriminant -d.
struct PeriodWitness {
  std::int64_t d = 0;
  int n = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const PeriodWitness&, const PeriodWitness&) = default;
};

int mobius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
// sum_{k | n} mu(n/k) p^k
Int moebius_sum(std::int64_t p, int n);
// (2 / phi(conductor)) * moebius_sum: (1/3) sum for p = 3 and p = 7, (2/(p-1)) sum otherwise.
Int rhs_value(std::int64_t p, int n);

// M = 9 for p = 3, p otherwise.
std::int64_t criterion_modulus(std::int64_t p);

bool in_order(std::int64_t d, std::int64_t x, std::int64_t y);
bool is_primitive_rep(std::int64_t d, std::int64_t x, std::int64_t y);
bool congruence_holds(std::int64_t p, int n, std::int64_t x);
bool admissible(std::int64_t p, int n, std::int64_t d, std::int64_t x, std::int64_t y);

// Smallest n <= n_max with an admissible (x, y); p = 7 discriminants 3f^2 use eisenstein_resolution.
std::optional<PeriodWitness> find_period(std::int64_t p, std::int64_t d, int n_max);

// ---- p = 7, d = 3 f^2 ----

struct EisensteinInt {
  std::int64_t a = 0;  // a + b*rho, rho^2 + rho + 1 = 0
  std::int64_t b = 0;
  std::int64_t norm() const { return a * a - a * b + b * b; }
  friend EisensteinInt operator*(const EisensteinInt& u, const EisensteinInt& v) {
    return {u.a * v.a - u.b * v.b, u.a * v.b + u.b * v.a - u.b * v.b};
  }
  friend EisensteinInt operator-(const EisensteinInt& u) { return {-u.a, -u.b}; }
  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

EisensteinInt eisenstein_pow(const EisensteinInt& base, int n);
// The six units of Z[rho] times z.
std::vector<EisensteinInt> unit_multiples(const EisensteinInt& z);
// Reduction modulo p7' (rho -> 4 mod 7).
std::int64_t reduce_mod_p7prime(const EisensteinInt& z);
// Some unit multiple is = 1 mod p7' and squares to 1 mod 3 p7'.
bool in_ray_group(const EisensteinInt& alpha);
// Some unit multiple lies in Z + f Z[rho].
bool in_ring_group(const EisensteinInt& alpha, std::int64_t f);

enum class Membership { Member, NonMember, Undetermined };

struct Resolution {
  Membership verdict = Membership::Undetermined;
  bool from_registry = false;
  std::optional<int> period;  // minimal period when known
  std::string citation;
};

struct RegistryEntry {
  std::int64_t d;
  std::optional<int> period;       // known minimal period
  std::optional<int> excluded_at;  // explicit non-membership at this n
  const char* citation;
};
const std::vector<RegistryEntry>& p7_registry();

Resolution eisenstein_resolution(std::int64_t d, int n);

// ---- enumeration and reports ----

enum class ResolvedBy { Computed, Eisenstein, Registry };
const char* to_string(ResolvedBy r);

struct SetMember {
  PeriodWitness witness;
  ResolvedBy resolved = ResolvedBy::Computed;
  std::string citation;
};

struct EnumerationResult {
  std::vector<SetMember> members;  // sorted by d
  std::vector<std::int64_t> excluded;      // candidates resolved as non-members
  std::vector<std::int64_t> undetermined;  // candidates with no resolution
};

EnumerationResult enumerate_detailed(std::int64_t p, int n);
std::vector<PeriodWitness> enumerate_set(std::int64_t p, int n);

struct ReportEntry {
  std::int64_t d = 0;
  std::int64_t h = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
  ResolvedBy resolved = ResolvedBy::Computed;
};

struct FormulaReport {
  std::int64_t p = 0;
  int n = 0;
  std::vector<ReportEntry> entries;
  std::vector<std::int64_t> undetermined;
  Int lhs;
  Int rhs;
  Int diff;
};

FormulaReport verify_formula(std::int64_t p, int n, ClassNumberCache& cache);

}  // namespace cnf
