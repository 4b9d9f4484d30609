#pragma once

#include "cnf/bigint.hpp"
#include "cnf/poly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cnf {

// Dense polynomial over F_p, p an odd or even prime below 2^32.
class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static ModPoly constant(std::uint64_t p, std::uint64_t c);
  static ModPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t deg);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lc() const;

  ModPoly monic() const;
  ModPoly derivative() const;
  std::uint64_t eval(std::uint64_t at) const;

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  ModPoly operator-() const;
  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly scaled(std::uint64_t c) const;
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const ModPoly& a, const ModPoly& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

struct ModDivResult {
  ModPoly quot;
  ModPoly rem;
};
ModDivResult divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
ModPoly operator/(const ModPoly& a, const ModPoly& b);  // exact quotient expected; remainder discarded

ModPoly gcd(ModPoly a, ModPoly b);  // monic, or zero
// s*a + t*b = g (monic gcd)
struct ExtGcd {
  ModPoly g, s, t;
};
ExtGcd ext_gcd(const ModPoly& a, const ModPoly& b);

ModPoly powmod(const ModPoly& base, const Int& exp, const ModPoly& mod);
ModPoly pow(const ModPoly& base, unsigned exp);

ModPoly reduce_mod(const IntPoly& a, std::uint64_t p);
IntPoly lift(const ModPoly& a);  // coefficients in [0, p)

// Distinct-degree decomposition of a squarefree polynomial: (d, product of all degree-d factors).
std::vector<std::pair<int, ModPoly>> ddf(const ModPoly& a);
// (degree, number of irreducible factors of that degree); throws NotSquarefree.
std::vector<std::pair<int, int>> ddf_degrees(const ModPoly& a);
// Split a squarefree product of degree-d irreducibles into monic factors.
std::vector<ModPoly> edf(const ModPoly& a, int d);

std::vector<std::pair<ModPoly, int>> squarefree_decomposition(const ModPoly& a);

struct ModFactorization {
  std::uint64_t unit = 0;
  std::vector<std::pair<ModPoly, int>> factors;  // monic irreducibles, sorted by (degree, coeffs)
};
ModFactorization factor_mod_p(const ModPoly& a);

bool is_irreducible(const ModPoly& a);

// Seed for randomized equal-degree splitting, fixed for reproducible output.
inline constexpr std::uint64_t kSplitSeed = 0x5eed2024ULL;

}  // namespace cnf
