#pragma once

#include "cnf/bigint.hpp"
#include "cnf/poly.hpp"

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

namespace cnf {

// Dense polynomial in two variables (u, v); row i holds the coefficient of u^i as a polynomial in v.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<IntPoly> rows);

  // Terms given as (coefficient, deg_u, deg_v).
  static BiPoly from_terms(std::initializer_list<std::tuple<long, int, int>> terms);
  static BiPoly in_first(const IntPoly& p);   // p(u)
  static BiPoly in_second(const IntPoly& p);  // p(v)
  static BiPoly constant(const Int& c);

  bool is_zero() const { return rows_.empty(); }
  int deg_first() const { return static_cast<int>(rows_.size()) - 1; }
  int deg_second() const;
  const std::vector<IntPoly>& rows() const { return rows_; }
  Int coeff(std::size_t i, std::size_t j) const;

  IntPoly coeff_of_first(std::size_t i) const;   // polynomial in v multiplying u^i
  IntPoly coeff_of_second(std::size_t j) const;  // polynomial in u multiplying v^j

  IntPoly eval_first(const Int& u) const;   // polynomial in v
  IntPoly eval_second(const Int& v) const;  // polynomial in u
  IntPoly diagonal() const;                 // u = v
  BiPoly swapped() const;                   // (u, v) -> (v, u)

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Int& c);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

  std::string to_string(const std::string& u = "x", const std::string& v = "y") const;

 private:
  void trim();
  std::vector<IntPoly> rows_;
};

BiPoly pow(const BiPoly& base, unsigned exp);

}  // namespace cnf
