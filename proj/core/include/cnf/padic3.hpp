#pragma once

#include "cnf/bigint.hpp"
#include "cnf/check.hpp"
#include "cnf/modpoly.hpp"
#include "cnf/poly.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace cnf {

inline constexpr unsigned kDefaultPrecision = 32;

// Z/3^k [x] / (H) with H monic and irreducible mod 3: the unramified degree-n extension of Z_3
// truncated at precision 3^k.
class GaloisRing {
 public:
  GaloisRing(const IntPoly& modulus, unsigned k);

  int degree() const { return modulus_.degree(); }
  unsigned precision() const { return k_; }
  const Int& characteristic() const { return m_; }  // 3^k
  const IntPoly& modulus() const { return modulus_; }
  const ModPoly& residue_modulus() const { return residue_; }

 private:
  IntPoly modulus_;
  ModPoly residue_;
  unsigned k_;
  Int m_;
};

using GaloisRingPtr = std::shared_ptr<const GaloisRing>;

class GaloisRingElem {
 public:
  GaloisRingElem(GaloisRingPtr ring, const IntPoly& value);
  static GaloisRingElem from_int(GaloisRingPtr ring, const Int& c);
  static GaloisRingElem gen(GaloisRingPtr ring);

  const GaloisRingPtr& ring() const { return ring_; }
  const IntPoly& value() const { return value_; }  // degree < n, coefficients in [0, 3^k)
  std::vector<Int> coeffs() const;                 // exactly n entries

  bool is_zero() const { return value_.is_zero(); }
  bool is_unit() const { return !residue().is_zero(); }
  ModPoly residue() const;  // image in F_3[x]/(H mod 3)
  GaloisRingElem inverse() const;

  GaloisRingElem& operator+=(const GaloisRingElem& o);
  GaloisRingElem& operator-=(const GaloisRingElem& o);
  GaloisRingElem& operator*=(const GaloisRingElem& o);
  friend GaloisRingElem operator+(GaloisRingElem a, const GaloisRingElem& b) { return a += b; }
  friend GaloisRingElem operator-(GaloisRingElem a, const GaloisRingElem& b) { return a -= b; }
  friend GaloisRingElem operator*(GaloisRingElem a, const GaloisRingElem& b) { return a *= b; }
  GaloisRingElem operator-() const;
  friend bool operator==(const GaloisRingElem& a, const GaloisRingElem& b) { return a.value_ == b.value_; }

 private:
  void same_ring(const GaloisRingElem& o) const;
  GaloisRingPtr ring_;
  IntPoly value_;
};

GaloisRingElem pow(const GaloisRingElem& base, unsigned exp);
// a(z) with integer coefficients evaluated at a ring element.
GaloisRingElem eval_at(const IntPoly& a, const GaloisRingElem& z);
// f(z, w) from the dynamics module evaluated in the ring.
GaloisRingElem eval_f(const GaloisRingElem& z, const GaloisRingElem& w);

// The unique root w of f(z, w) = 0 with w = z^3 (mod 3), by Newton iteration from z^3.
GaloisRingElem branch_F(const GaloisRingElem& z);

struct OrbitRecord {
  GaloisRingElem seed;
  std::vector<GaloisRingElem> points;  // seed, F(seed), ..., F^(n-1)(seed)
  int period = 0;
  IntPoly lifted_factor;  // modulus of the ring: the 3-adic lift of an irreducible factor of R_n mod 3
};

// One orbit per degree-n irreducible factor of R_n mod 3, lifted to precision 3^k.
std::vector<OrbitRecord> lift_periodic(int n, unsigned k = kDefaultPrecision);

// (1/n) sum_{m | n} mu(n/m) 3^m
std::int64_t expected_orbit_count(int n);

// Deterministic pseudo-random samples of degree n with z != -1 (mod 3).
std::vector<GaloisRingElem> frobenius_samples(int count, int degree, unsigned k, std::uint64_t seed);

CheckReport verify_frobenius_lift(const std::vector<GaloisRingElem>& samples);
CheckReport verify_orbits(const std::vector<OrbitRecord>& orbits, int n);
CheckReport verify_units(const std::vector<OrbitRecord>& orbits);

// First monic irreducible of degree n over F_3 in lexicographic order, as an integer polynomial.
IntPoly default_modulus(int n);

}  // namespace cnf
