#pragma once

#include "cnf/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cnf {

// Dense univariate polynomial over Z; coeffs_[i] is the coefficient of x^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t deg);
  static IntPoly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  // Coefficient of x^i, zero beyond the degree.
  Int coeff(std::size_t i) const;
  const Int& lc() const;
  void set_coeff(std::size_t i, const Int& c);

  Int eval(const Int& at) const;
  IntPoly derivative() const;
  IntPoly compose(const IntPoly& inner) const;
  Int content() const;
  IntPoly primitive_part() const;
  IntPoly shift(std::size_t k) const;  // multiply by x^k
  IntPoly reversed() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Int& c);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
  friend IntPoly operator*(const Int& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exp);

// Exact quotient A / B over Z; throws NotDivisible at the first failing position.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
// Divide every coefficient by c exactly.
IntPoly exact_div(const IntPoly& a, const Int& c);

// lc(B)^(deg A - deg B + 1) * A = Q*B + R.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

// Primitive-PRS gcd with positive leading coefficient.
IntPoly gcd_int(const IntPoly& a, const IntPoly& b);

// Sylvester resultant Res(A, B) by the subresultant algorithm, with the
// formal degrees of the inputs taken to be their actual degrees.
Int resultant(const IntPoly& a, const IntPoly& b);
Int discriminant(const IntPoly& a);

// gcd(A, A') = 1, certified modulo a prime not dividing lc(A) when possible.
bool is_squarefree(const IntPoly& a);

// Coefficients reduced to the symmetric or nonnegative range modulo m.
IntPoly reduce_coeffs(const IntPoly& a, const Int& m);

}  // namespace cnf
