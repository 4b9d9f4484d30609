#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

namespace cnf {

// Q(t) with t^3 - 6t^2 + 3t + 1 = 0; element c0 + c1 t + c2 t^2.
class GammaField {
 public:
  GammaField() = default;
  GammaField(long c) : c_{mpq_class(c), 0, 0} {}  // NOLINT(google-explicit-constructor)
  GammaField(mpq_class c0, mpq_class c1, mpq_class c2);

  static GammaField gen();

  const std::array<mpq_class, 3>& coeffs() const { return c_; }
  bool is_zero() const;

  GammaField& operator+=(const GammaField& o);
  GammaField& operator-=(const GammaField& o);
  GammaField& operator*=(const GammaField& o);
  GammaField operator-() const;
  GammaField inverse() const;

  friend GammaField operator+(GammaField a, const GammaField& b) { return a += b; }
  friend GammaField operator-(GammaField a, const GammaField& b) { return a -= b; }
  friend GammaField operator*(GammaField a, const GammaField& b) { return a *= b; }
  friend GammaField operator/(const GammaField& a, const GammaField& b) { return a * b.inverse(); }
  friend bool operator==(const GammaField& a, const GammaField& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::array<mpq_class, 3> c_{};
};

GammaField pow(const GammaField& base, unsigned exp);

}  // namespace cnf
